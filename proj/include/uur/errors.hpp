#pragma once

#include <stdexcept>

namespace uur {

// Root of the library's error hierarchy. Everything thrown on purpose derives
// from this, so callers can catch uur::Error and know the message is ours.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape or dimension disagreement between operands.
struct DimMismatch : Error { using Error::Error; };

// Input failed the Hermitian-symmetry check.
struct NotHermitian : Error { using Error::Error; };

// Eigenvalue below the negativity tolerance where a PSD matrix was required.
struct NotPSD : Error { using Error::Error; };

// Iterative solver hit its sweep limit before reaching the target threshold.
struct NoConvergence : Error { using Error::Error; };

// Input exceeds a hard size limit of the chosen algorithm.
struct TooLarge : Error { using Error::Error; };

// Object failed a construction-time sanity check (norm, trace, unitarity, ...).
struct ValidationError : Error { using Error::Error; };

// Bloch vector lies outside the unit ball.
struct BlochOutOfBall : Error { using Error::Error; };

// A bound index k lies outside the valid range for the given vectors.
struct IndexOutOfRange : Error { using Error::Error; };

// A permutation array is not a bijection on {0, ..., N-1}.
struct InvalidPermutation : Error { using Error::Error; };

// Exhaustive permutation search requested beyond the supported size.
struct ExhaustiveTooLarge : Error { using Error::Error; };

// A pair-set contains an out-of-range, unordered, or duplicate index pair.
struct InvalidPairSet : Error { using Error::Error; };

// More operators than the Gram-matrix machinery supports.
struct TooManyOperators : Error { using Error::Error; };

// A scenario definition is inconsistent; the message names the offending field.
struct ScenarioError : Error { using Error::Error; };

}  // namespace uur
