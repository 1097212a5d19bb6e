#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "uur/bounds.hpp"
#include "uur/quantum.hpp"

// Brute-force reference implementations. Everything here is deliberately
// independent of the closed forms in bounds.cpp: the reference bound is a
// literal transcription of the defining triple sum, the reference variance
// multiplies matrices out, the reference determinant is cofactor expansion.
// Agreement between this module and the engine is the evidence the test suite
// is built on, so resist the urge to share code between the two.
namespace uur::oracle {

// Seeded generator with a fixed, documented algorithm: mt19937_64 for bits,
// uniform doubles via the top-53-bits mapping, normals via Box-Muller on
// those uniforms. std::normal_distribution is implementation-defined and
// would break bit-reproducibility across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double gaussian();
    cplx complex_gaussian();

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Literal triple-sum evaluation of the k-th bound: diagonal terms, cross
// terms outside the leading block, aligned terms inside it, as three separate
// loops with no algebraic simplification.
double i_k_reference(const std::vector<double>& x, const std::vector<double>& y,
                     std::size_t k);

struct ExhaustiveMax {
    double value;
    PermutationPair perm;
};

// Full double loop over S_N x S_N using i_k_reference, keeping the first
// (lexicographically smallest) maximizing pair. TooLarge for N > 6.
ExhaustiveMax exhaustive_perm_max(const std::vector<double>& x,
                                  const std::vector<double>& y, std::size_t k);

// Cofactor-expansion determinant, n <= 5 (TooLarge beyond).
cplx laplace_det(const ComplexMatrix& m);

// Variance by explicit matrix products of the deviation, no norm shortcut:
// Tr(rho δU†δU), promoting a pure state to its rank-one density matrix first.
double variance_reference(const UnitaryOperator& u, const State& s);

// Seeded random ingredients. Unitaries come from twice-repeated Gram-Schmidt
// on a complex Gaussian matrix, pure states from normalized Gaussian vectors,
// mixed states from G†G scaled to unit trace.
UnitaryOperator random_unitary(Rng& rng, std::size_t dim);
PureState random_pure(Rng& rng, std::size_t dim);
DensityMatrix random_density(Rng& rng, std::size_t dim);

struct RandomInstance {
    State state;
    UnitaryOperator a;
    UnitaryOperator b;
};

// One (state, A, B) instance, bit-reproducible per seed. Draw order is fixed:
// state first, then A, then B. dim must lie in 2..6.
RandomInstance random_instance(std::uint64_t seed, std::size_t dim, bool mixed);

}  // namespace uur::oracle
