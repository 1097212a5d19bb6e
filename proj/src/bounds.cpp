#include "uur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "uur/tolerances.hpp"

namespace uur {

namespace {

void require_valid_k(std::size_t k, std::size_t n) {
    if (k < 1 || k > n) {
        throw IndexOutOfRange("bound index k = " + std::to_string(k) +
                              " outside the valid range 1.." + std::to_string(n));
    }
}

std::vector<double> moduli(const std::vector<cplx>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::abs(v[i]);
    return out;
}

}  // namespace

AmplitudePair::AmplitudePair(std::vector<cplx> alpha_in, std::vector<cplx> beta_in)
    : alpha(std::move(alpha_in)), beta(std::move(beta_in)) {
    if (alpha.size() != beta.size()) {
        throw DimMismatch("amplitude vectors must have equal length");
    }
    if (alpha.empty()) throw DimMismatch("amplitude vectors must not be empty");
    x = moduli(alpha);
    y = moduli(beta);
}

AmplitudePair amplitude_pair(const UnitaryOperator& a, const UnitaryOperator& b,
                             const State& s) {
    if (a.dim() != s.dim() || b.dim() != s.dim()) {
        throw DimMismatch("operator dimensions must match the state dimension");
    }
    const ComplexMatrix dev_a = deviation(a, s);
    const ComplexMatrix dev_b = deviation(b, s);
    if (s.is_pure()) {
        const auto& psi = s.pure().amplitudes();
        return AmplitudePair(dev_a * psi, dev_b * psi);
    }
    // vec(δU √ρ) = (I ⊗ δU) |√ρ⟩, the coordinates of the deviation acting on
    // the canonical purification; forming the product directly skips the
    // n² x n² Kronecker matrix.
    const ComplexMatrix root = psd_sqrt(s.density().matrix());
    return AmplitudePair(vec(dev_a * root), vec(dev_b * root));
}

// The three term groups accumulate separately and combine at the end. The
// reference implementation in the oracle walks the same groups in the same
// index order, which keeps the two numerically identical and makes exact
// tie-break comparisons between the two exhaustive searches meaningful.
double i_k(const std::vector<double>& x, const std::vector<double>& y, std::size_t k) {
    if (x.size() != y.size()) {
        throw DimMismatch("coordinate vectors must have equal length");
    }
    const std::size_t n = x.size();
    if (n == 0) throw DimMismatch("coordinate vectors must not be empty");
    require_valid_k(k, n);

    double diag = 0.0;
    double cross = 0.0;
    double aligned = 0.0;
    for (std::size_t i = 0; i < n; ++i) diag += x[i] * x[i] * y[i] * y[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j < k) {
                aligned += 2.0 * x[i] * y[i] * x[j] * y[j];
            } else {
                cross += x[i] * x[i] * y[j] * y[j] + x[j] * x[j] * y[i] * y[i];
            }
        }
    }
    return diag + cross + aligned;
}

double i_k(const AmplitudePair& p, std::size_t k) {
    return i_k(p.x, p.y, k);
}

BoundChain chain(const AmplitudePair& p) {
    const std::size_t n = p.n_eff();
    BoundChain out{std::vector<double>(n), std::norm(inner(p.alpha, p.beta))};
    for (std::size_t k = 1; k <= n; ++k) out.values[k - 1] = i_k(p, k);
    return out;
}

double lb2(const UnitaryOperator& a, const UnitaryOperator& b, const State& s) {
    if (a.dim() != s.dim() || b.dim() != s.dim()) {
        throw DimMismatch("operator dimensions must match the state dimension");
    }
    const cplx cov = expectation(a.matrix().adjoint() * b.matrix(), s) -
                     std::conj(expectation(a, s)) * expectation(b, s);
    return std::norm(cov);
}

namespace {

void require_permutation(const std::vector<std::size_t>& pi, std::size_t n,
                         const char* which) {
    if (pi.size() != n) {
        throw InvalidPermutation(std::string(which) + " has length " +
                                 std::to_string(pi.size()) + ", expected " +
                                 std::to_string(n));
    }
    std::vector<char> seen(n, 0);
    for (std::size_t v : pi) {
        if (v >= n || seen[v]) {
            throw InvalidPermutation(std::string(which) +
                                     " is not a bijection on 0.." + std::to_string(n - 1));
        }
        seen[v] = 1;
    }
}

void apply_permutation(const std::vector<double>& src, const std::vector<std::size_t>& pi,
                       std::vector<double>& dst) {
    for (std::size_t i = 0; i < pi.size(); ++i) dst[i] = src[pi[i]];
}

}  // namespace

double permuted_i_k(const AmplitudePair& p, const PermutationPair& perm, std::size_t k) {
    const std::size_t n = p.n_eff();
    require_valid_k(k, n);
    require_permutation(perm.pi1, n, "pi1");
    require_permutation(perm.pi2, n, "pi2");
    std::vector<double> xp(n), yp(n);
    apply_permutation(p.x, perm.pi1, xp);
    apply_permutation(p.y, perm.pi2, yp);
    return i_k(xp, yp, k);
}

namespace {

std::vector<std::size_t> identity_perm(std::size_t n) {
    std::vector<std::size_t> pi(n);
    std::iota(pi.begin(), pi.end(), std::size_t{0});
    return pi;
}

// Indices ordering v descending; stable, so ties keep their original order.
std::vector<std::size_t> descending_order(const std::vector<double>& v) {
    std::vector<std::size_t> pi = identity_perm(v.size());
    std::stable_sort(pi.begin(), pi.end(),
                     [&v](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    return pi;
}

// Fisher-Yates with explicit modular draws. std::shuffle leaves the mapping
// from generator output to swaps unspecified, which would make the heuristic
// search irreproducible across standard libraries.
void seeded_shuffle(std::vector<std::size_t>& pi, std::mt19937_64& gen) {
    for (std::size_t i = pi.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(gen() % i);
        std::swap(pi[i - 1], pi[j]);
    }
}

PermutedMax exhaustive_search(const AmplitudePair& p, std::size_t k) {
    const std::size_t n = p.n_eff();
    if (n > exhaustive_search_limit) {
        throw ExhaustiveTooLarge("exhaustive permutation search supports N <= " +
                                 std::to_string(exhaustive_search_limit) + ", got " +
                                 std::to_string(n));
    }
    std::vector<std::size_t> pi1 = identity_perm(n);
    std::vector<double> xp(n), yp(n);
    double best = -std::numeric_limits<double>::infinity();
    PermutationPair best_perm{identity_perm(n), identity_perm(n)};
    do {
        apply_permutation(p.x, pi1, xp);
        std::vector<std::size_t> pi2 = identity_perm(n);
        do {
            apply_permutation(p.y, pi2, yp);
            const double v = i_k(xp, yp, k);
            if (v > best) {
                best = v;
                best_perm = PermutationPair{pi1, pi2};
            }
        } while (std::next_permutation(pi2.begin(), pi2.end()));
    } while (std::next_permutation(pi1.begin(), pi1.end()));
    return PermutedMax{best, std::move(best_perm)};
}

PermutedMax heuristic_search(const AmplitudePair& p, std::size_t k, std::uint64_t seed) {
    const std::size_t n = p.n_eff();
    std::vector<PermutationPair> candidates;
    candidates.push_back({identity_perm(n), identity_perm(n)});
    candidates.push_back({descending_order(p.x), descending_order(p.y)});

    std::mt19937_64 gen(seed);
    for (int trial = 0; trial < 1000; ++trial) {
        PermutationPair cand{identity_perm(n), identity_perm(n)};
        seeded_shuffle(cand.pi1, gen);
        seeded_shuffle(cand.pi2, gen);
        candidates.push_back(std::move(cand));
    }

    std::vector<double> xp(n), yp(n);
    double best = -std::numeric_limits<double>::infinity();
    const PermutationPair* best_perm = nullptr;
    for (const PermutationPair& cand : candidates) {
        apply_permutation(p.x, cand.pi1, xp);
        apply_permutation(p.y, cand.pi2, yp);
        const double v = i_k(xp, yp, k);
        if (v > best) {
            best = v;
            best_perm = &cand;
        }
    }
    return PermutedMax{best, *best_perm};
}

}  // namespace

PermutedMax max_permuted_i_k(const AmplitudePair& p, std::size_t k, SearchStrategy strategy,
                             std::uint64_t seed) {
    require_valid_k(k, p.n_eff());
    if (strategy == SearchStrategy::Auto) {
        strategy = p.n_eff() <= exhaustive_search_limit ? SearchStrategy::Exhaustive
                                                        : SearchStrategy::Heuristic;
    }
    return strategy == SearchStrategy::Exhaustive ? exhaustive_search(p, k)
                                                  : heuristic_search(p, k, seed);
}

double pairset_bound(const AmplitudePair& p,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    const std::size_t n = p.n_eff();
    std::vector<char> selected(n * n, 0);
    for (const auto& [i, j] : pairs) {
        if (i >= j || j >= n) {
            throw InvalidPairSet("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") is not an ordered pair inside 0.." + std::to_string(n - 1));
        }
        if (selected[i * n + j]) {
            throw InvalidPairSet("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") appears more than once");
        }
        selected[i * n + j] = 1;
    }

    const auto& x = p.x;
    const auto& y = p.y;
    double diag = 0.0;
    double cross = 0.0;
    double aligned = 0.0;
    for (std::size_t i = 0; i < n; ++i) diag += x[i] * x[i] * y[i] * y[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (selected[i * n + j]) {
                aligned += 2.0 * x[i] * y[i] * x[j] * y[j];
            } else {
                cross += x[i] * x[i] * y[j] * y[j] + x[j] * x[j] * y[i] * y[i];
            }
        }
    }
    return diag + cross + aligned;
}

namespace {

cplx covariance(const UnitaryOperator& u, const UnitaryOperator& v, const State& s) {
    return expectation(u.matrix().adjoint() * v.matrix(), s) -
           std::conj(expectation(u, s)) * expectation(v, s);
}

}  // namespace

GramReport gram(const std::vector<UnitaryOperator>& ops, const State& s) {
    if (ops.empty()) throw ValidationError("gram needs at least one operator");
    if (ops.size() > 4) {
        throw TooManyOperators("gram supports at most 4 operators, got " +
                               std::to_string(ops.size()));
    }
    for (const UnitaryOperator& u : ops) {
        if (u.dim() != s.dim()) {
            throw DimMismatch("operator dimensions must match the state dimension");
        }
    }

    // Row/column 0 belongs to the identity; the diagonal is exactly 1 because
    // every entry there is ⟨U†U⟩ = ⟨I⟩ on a unit-trace state.
    const std::size_t m = ops.size() + 1;
    ComplexMatrix g(m, m);
    for (std::size_t j = 0; j < m; ++j) g(j, j) = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t l = j + 1; l < m; ++l) {
            const cplx e = (j == 0)
                               ? expectation(ops[l - 1], s)
                               : expectation(ops[j - 1].matrix().adjoint() * ops[l - 1].matrix(), s);
            g(j, l) = e;
            g(l, j) = std::conj(e);
        }
    }

    const cplx d = det(g);
    if (std::abs(d.imag()) > tol::gram_imag) {
        throw Error("gram determinant has a non-real part beyond tolerance");
    }
    if (d.real() < tol::gram_negative) {
        throw Error("gram determinant is negative beyond tolerance");
    }

    std::optional<double> lower;
    if (ops.size() == 2) lower = lb2(ops[0], ops[1], s);
    if (ops.size() == 3) lower = lb3(ops[0], ops[1], ops[2], s);
    return GramReport{std::move(g), d.real(), lower};
}

double lb3(const UnitaryOperator& a, const UnitaryOperator& b, const UnitaryOperator& c,
           const State& s) {
    const double va = variance(a, s);
    const double vb = variance(b, s);
    const double vc = variance(c, s);
    const cplx sab = covariance(a, b, s);
    const cplx sac = covariance(a, c, s);
    const cplx sbc = covariance(b, c, s);
    // σ_CB = conj(σ_BC) and σ_BA = conj(σ_AB), so the triple product needs no
    // further expectation values.
    return va * std::norm(sbc) + vb * std::norm(sac) + vc * std::norm(sab) -
           2.0 * std::real(sac * std::conj(sbc) * std::conj(sab));
}

double product3_bound(const UnitaryOperator& a, const UnitaryOperator& b,
                      const UnitaryOperator& c, const State& s, std::size_t k,
                      bool strengthened, std::uint64_t seed) {
    const AmplitudePair pab = amplitude_pair(a, b, s);
    const AmplitudePair pac = amplitude_pair(a, c, s);
    const AmplitudePair pbc = amplitude_pair(b, c, s);
    if (k < 2) throw IndexOutOfRange("product bounds need k >= 2");
    require_valid_k(k, pab.n_eff());

    double iab, iac, ibc;
    if (strengthened) {
        iab = max_permuted_i_k(pab, k, SearchStrategy::Auto, seed).value;
        iac = max_permuted_i_k(pac, k, SearchStrategy::Auto, seed).value;
        ibc = max_permuted_i_k(pbc, k, SearchStrategy::Auto, seed).value;
    } else {
        iab = i_k(pab, k);
        iac = i_k(pac, k);
        ibc = i_k(pbc, k);
    }
    return std::sqrt(iab * iac * ibc);
}

double product4_bound(const UnitaryOperator& a, const UnitaryOperator& b,
                      const UnitaryOperator& c, const UnitaryOperator& d, const State& s,
                      std::size_t k, bool best_matching) {
    if (k < 2) throw IndexOutOfRange("product bounds need k >= 2");
    const auto paired = [&s, k](const UnitaryOperator& u1, const UnitaryOperator& u2,
                                const UnitaryOperator& u3, const UnitaryOperator& u4) {
        const AmplitudePair first = amplitude_pair(u1, u2, s);
        const AmplitudePair second = amplitude_pair(u3, u4, s);
        require_valid_k(k, first.n_eff());
        return i_k(first, k) * i_k(second, k);
    };
    double value = paired(a, b, c, d);
    if (best_matching) {
        value = std::max(value, paired(a, c, b, d));
        value = std::max(value, paired(a, d, b, c));
    }
    return value;
}

}  // namespace uur
