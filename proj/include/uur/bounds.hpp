#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "uur/quantum.hpp"

namespace uur {

// Coordinate vectors of the deviation images for a pair of unitaries on one
// state: alpha = δA applied to the state vector (pure) or the column stacking
// of δA √ρ (mixed), beta likewise for B. x and y hold the entrywise moduli;
// every bound below is a function of x and y alone, alpha/beta stick around
// for the Gram-route lower bound and for diagnostics.
struct AmplitudePair {
    std::vector<cplx> alpha;
    std::vector<cplx> beta;
    std::vector<double> x;
    std::vector<double> y;

    AmplitudePair(std::vector<cplx> alpha_in, std::vector<cplx> beta_in);

    std::size_t n_eff() const { return x.size(); }
};

AmplitudePair amplitude_pair(const UnitaryOperator& a, const UnitaryOperator& b,
                             const State& s);

// The k-th member of the interpolating bound family, 1-based k in [1, N]:
//
//   I_k = Σ_i x_i²y_i²  +  Σ_{i<j, pair outside the leading k-block} (x_i²y_j² + x_j²y_i²)
//                        +  Σ_{i<j, pair inside the leading k-block} 2 x_i y_i x_j y_j
//
// where the leading k-block is the index set {0, ..., k-1}. I_1 is the full
// variance product ||x||²||y||², I_N is the squared aligned overlap (Σ x_i y_i)²,
// and the family is nonincreasing in k.
double i_k(const std::vector<double>& x, const std::vector<double>& y, std::size_t k);
double i_k(const AmplitudePair& p, std::size_t k);

// All chain members plus the squared covariance |⟨α|β⟩|² computed from the
// coordinate vectors. The latter is the Gram-route value of the classic
// two-operator lower bound; lb2() below computes the same quantity from
// operator expectation values, and tests hold the two routes against each
// other. Do not fold one into the other.
struct BoundChain {
    std::vector<double> values;  // values[k-1] = I_k
    double lb_gram2;
};

BoundChain chain(const AmplitudePair& p);

// |⟨A†B⟩ - ⟨A†⟩⟨B⟩|², the covariance route to the two-operator lower bound.
double lb2(const UnitaryOperator& a, const UnitaryOperator& b, const State& s);

// A pair of relabelings. Entry i of the relabeled vector reads from position
// pi[i] of the original, so the identity is pi[i] = i.
struct PermutationPair {
    std::vector<std::size_t> pi1;
    std::vector<std::size_t> pi2;

    bool operator==(const PermutationPair&) const = default;
};

// I_k after relabeling x by pi1 and y by pi2 (independently).
double permuted_i_k(const AmplitudePair& p, const PermutationPair& perm, std::size_t k);

enum class SearchStrategy { Exhaustive, Heuristic, Auto };

// Exhaustive search is N!² evaluations; this is the largest N we accept.
inline constexpr std::size_t exhaustive_search_limit = 6;

inline constexpr std::uint64_t default_search_seed = 123456789;

struct PermutedMax {
    double value;
    PermutationPair perm;
};

// Maximum of permuted_i_k over relabeling pairs. Exhaustive enumerates all of
// S_N x S_N in lexicographic order and keeps the first maximum, so ties
// resolve deterministically; it refuses N > exhaustive_search_limit
// (ExhaustiveTooLarge). Heuristic evaluates the identity pair, the
// sort-both-descending pair, and 1000 seeded random pairs; it is deterministic
// given the seed and never returns less than the identity value. Auto picks
// exhaustive exactly when it is allowed.
PermutedMax max_permuted_i_k(const AmplitudePair& p, std::size_t k,
                             SearchStrategy strategy = SearchStrategy::Auto,
                             std::uint64_t seed = default_search_seed);

// Interpolating bound for an arbitrary set of aligned index pairs (0-based,
// each pair (i, j) with i < j < N, no duplicates): selected pairs contribute
// the aligned term 2 x_i y_i x_j y_j, unselected ones the cross terms. The
// empty set gives I_1 and the full leading k-block reproduces i_k exactly.
double pairset_bound(const AmplitudePair& p,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

// Gram matrix of (I, U_1, ..., U_m) expectation values, its determinant, and,
// for two or three operators, the matching closed-form lower bound on the
// variance product. The determinant itself is a valid lower bound on the
// product of the m variances and is nonnegative up to numerical slack.
struct GramReport {
    ComplexMatrix gram;
    double determinant;
    std::optional<double> lower_bound;
};

GramReport gram(const std::vector<UnitaryOperator>& ops, const State& s);

// Three-operator closed-form lower bound on ΔA²ΔB²ΔC²:
// ΔA²|σ_BC|² + ΔB²|σ_AC|² + ΔC²|σ_AB|² - 2 Re{σ_AC σ_CB σ_BA}
// with σ_UV = ⟨U†V⟩ - ⟨U†⟩⟨V⟩. Equals the variance product minus the Gram
// determinant of the three deviations.
double lb3(const UnitaryOperator& a, const UnitaryOperator& b, const UnitaryOperator& c,
           const State& s);

// sqrt(I_k(A,B) I_k(A,C) I_k(B,C)), a lower bound on ΔA²ΔB²ΔC²; with
// strengthened = true each factor is replaced by its permutation maximum
// (searched with the Auto strategy). k is 1-based with 2 <= k <= N.
double product3_bound(const UnitaryOperator& a, const UnitaryOperator& b,
                      const UnitaryOperator& c, const State& s, std::size_t k,
                      bool strengthened = false,
                      std::uint64_t seed = default_search_seed);

// I_k(A,B) * I_k(C,D), a lower bound on ΔA²ΔB²ΔC²ΔD² for the fixed pairing
// ((A,B),(C,D)); with best_matching = true the maximum over the three perfect
// matchings of {A,B,C,D} is returned instead.
double product4_bound(const UnitaryOperator& a, const UnitaryOperator& b,
                      const UnitaryOperator& c, const UnitaryOperator& d, const State& s,
                      std::size_t k, bool best_matching = false);

}  // namespace uur
