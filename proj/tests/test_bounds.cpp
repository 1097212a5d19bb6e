#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "uur/bounds.hpp"
#include "uur/oracle.hpp"

using uur::AmplitudePair;
using uur::ComplexMatrix;
using uur::cplx;
using uur::PermutationPair;
using uur::PureState;
using uur::SearchStrategy;
using uur::State;
using uur::UnitaryOperator;

namespace {

constexpr double pi = std::numbers::pi;

State clock_shift_state(std::size_t d, double theta) {
    std::vector<cplx> amps(d, cplx(0.0, 0.0));
    amps[0] = std::cos(theta);
    amps[d - 1] = -std::sin(theta);
    return State(PureState(std::move(amps)));
}

std::vector<double> random_moduli(uur::oracle::Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (double& e : v) e = std::abs(rng.gaussian());
    return v;
}

// The same bound written with the aligned block collapsed into one square:
// (sum over the block of x_i y_i)^2 plus untouched diagonal and cross terms.
double i_k_grouped(const std::vector<double>& x, const std::vector<double>& y, std::size_t k) {
    const std::size_t n = x.size();
    double block = 0.0;
    for (std::size_t i = 0; i < k; ++i) block += x[i] * y[i];
    double value = block * block;
    for (std::size_t i = k; i < n; ++i) value += x[i] * x[i] * y[i] * y[i];
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j < k) continue;  // both inside the aligned block
            value += x[i] * x[i] * y[j] * y[j] + x[j] * x[j] * y[i] * y[i];
        }
    }
    return value;
}

PermutationPair identity_perm(std::size_t n) {
    PermutationPair p;
    p.pi1.resize(n);
    p.pi2.resize(n);
    std::iota(p.pi1.begin(), p.pi1.end(), std::size_t{0});
    std::iota(p.pi2.begin(), p.pi2.end(), std::size_t{0});
    return p;
}

}  // namespace

TEST_CASE("amplitude pair for the qutrit clock/shift family") {
    const double theta = 0.7;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const AmplitudePair p =
        uur::amplitude_pair(uur::clock(3), uur::shift(3), clock_shift_state(3, theta));
    REQUIRE(p.n_eff() == 3);

    const double r3 = std::sqrt(3.0);
    CHECK(std::abs(p.x[0] - r3 * s * s * c) <= 1e-12);
    CHECK(std::abs(p.x[1]) <= 1e-12);
    CHECK(std::abs(p.x[2] - r3 * c * c * s) <= 1e-12);

    CHECK(std::abs(p.y[0] - s * s * s) <= 1e-12);
    CHECK(std::abs(p.y[1] - c) <= 1e-12);
    CHECK(std::abs(p.y[2] - c * s * s) <= 1e-12);

    // Moduli match the stored coordinate vectors entry by entry.
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(p.x[i] == std::abs(p.alpha[i]));
        CHECK(p.y[i] == std::abs(p.beta[i]));
    }
}

TEST_CASE("amplitude pair for the dim-4 clock/shift family") {
    const double theta = 0.9;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const AmplitudePair p =
        uur::amplitude_pair(uur::clock(4), uur::shift(4), clock_shift_state(4, theta));
    REQUIRE(p.n_eff() == 4);

    const double scale = std::sqrt(2.0) * s * c;
    CHECK(std::abs(p.x[0] - scale * s) <= 1e-12);
    CHECK(std::abs(p.x[1]) <= 1e-12);
    CHECK(std::abs(p.x[2]) <= 1e-12);
    CHECK(std::abs(p.x[3] - scale * c) <= 1e-12);
}

TEST_CASE("amplitude pair on mixed states uses the purified dimension") {
    uur::oracle::Rng rng(71);
    const uur::DensityMatrix rho = uur::oracle::random_density(rng, 3);
    const UnitaryOperator a = uur::oracle::random_unitary(rng, 3);
    const UnitaryOperator b = uur::oracle::random_unitary(rng, 3);
    const AmplitudePair p = uur::amplitude_pair(a, b, State(rho));
    CHECK(p.n_eff() == 9);

    // ||alpha||^2 is the variance of A.
    CHECK(std::abs(uur::norm_squared(p.alpha) - uur::variance(a, State(rho))) <= 1e-12);

    CHECK_THROWS_AS(uur::amplitude_pair(a, b, State(PureState({1.0, 0.0}))), uur::DimMismatch);
}

TEST_CASE("interpolating bound literal cases") {
    const std::vector<double> ones{1.0, 1.0};
    CHECK(uur::i_k(ones, ones, 1) == 4.0);
    CHECK(uur::i_k(ones, ones, 2) == 4.0);

    const std::vector<double> x{1.0, 0.0};
    const std::vector<double> y{0.0, 1.0};
    CHECK(uur::i_k(x, y, 1) == 1.0);
    CHECK(uur::i_k(x, y, 2) == 0.0);

    CHECK_THROWS_AS(uur::i_k(x, y, 0), uur::IndexOutOfRange);
    CHECK_THROWS_AS(uur::i_k(x, y, 3), uur::IndexOutOfRange);
    CHECK_THROWS_AS(uur::i_k({1.0}, {1.0, 2.0}, 1), uur::DimMismatch);
}

TEST_CASE("interpolating bound matches the collapsed-block grouping") {
    uur::oracle::Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
        const std::vector<double> x = random_moduli(rng, n);
        const std::vector<double> y = random_moduli(rng, n);
        for (std::size_t k = 1; k <= n; ++k) {
            CHECK(std::abs(uur::i_k(x, y, k) - i_k_grouped(x, y, k)) <= 1e-12);
        }
    }
}

TEST_CASE("consecutive bounds differ by a sum of squared cross terms") {
    uur::oracle::Rng rng(103);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
        const std::vector<double> x = random_moduli(rng, n);
        const std::vector<double> y = random_moduli(rng, n);
        for (std::size_t k = 1; k < n; ++k) {
            double drop = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                const double cross = x[i] * y[k] - x[k] * y[i];
                drop += cross * cross;
            }
            CHECK(std::abs((uur::i_k(x, y, k + 1) - uur::i_k(x, y, k)) + drop) <= 1e-11);
        }
    }
}

TEST_CASE("chain endpoints and monotonicity") {
    uur::oracle::Rng rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 4);
        const uur::oracle::RandomInstance inst =
            uur::oracle::random_instance(2000 + static_cast<std::uint64_t>(trial), dim,
                                         trial % 2 == 1);
        const AmplitudePair p = uur::amplitude_pair(inst.a, inst.b, inst.state);
        const uur::BoundChain ch = uur::chain(p);
        const std::size_t n = p.n_eff();
        REQUIRE(ch.values.size() == n);

        for (std::size_t k = 1; k <= n; ++k) CHECK(ch.values[k - 1] == uur::i_k(p, k));
        for (std::size_t k = 0; k + 1 < n; ++k) {
            CHECK(ch.values[k + 1] <= ch.values[k] + 1e-10);
        }

        double aligned = 0.0;
        for (std::size_t i = 0; i < n; ++i) aligned += p.x[i] * p.y[i];
        CHECK(std::abs(ch.values.back() - aligned * aligned) <= 1e-10);

        CHECK(ch.lb_gram2 == std::norm(uur::inner(p.alpha, p.beta)));
        CHECK(ch.lb_gram2 <= ch.values.back() + 1e-10);
    }
    (void)rng;
}

TEST_CASE("chain equalities for the clock/shift family") {
    const double theta = 0.31;
    {
        const AmplitudePair p =
            uur::amplitude_pair(uur::clock(5), uur::shift(5), clock_shift_state(5, theta));
        const uur::BoundChain ch = uur::chain(p);
        CHECK(std::abs(ch.values[1] - ch.values[2]) <= 1e-12);
        CHECK(std::abs(ch.values[2] - ch.values[3]) <= 1e-12);
        CHECK(std::abs(ch.values[4] - ch.lb_gram2) <= 1e-12);
    }
    {
        const AmplitudePair p =
            uur::amplitude_pair(uur::clock(3), uur::shift(3), clock_shift_state(3, theta));
        const uur::BoundChain ch = uur::chain(p);
        CHECK(std::abs(ch.values[2] - ch.lb_gram2) <= 1e-12);
    }
}

TEST_CASE("covariance bound routes agree") {
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 4);
        const uur::oracle::RandomInstance inst =
            uur::oracle::random_instance(2500 + static_cast<std::uint64_t>(trial), dim,
                                         trial % 2 == 1);
        const double via_ops = uur::lb2(inst.a, inst.b, inst.state);
        const double via_coords =
            uur::chain(uur::amplitude_pair(inst.a, inst.b, inst.state)).lb_gram2;
        CHECK(std::abs(via_ops - via_coords) <= 1e-12);
    }

    const State psi(PureState({0.6, 0.8}));
    const UnitaryOperator sx(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
    const double var = uur::variance(sx, psi);
    CHECK(std::abs(uur::lb2(sx, sx, psi) - var * var) <= 1e-12);
    const UnitaryOperator id(ComplexMatrix::identity(2));
    CHECK(std::abs(uur::lb2(sx, id, psi)) <= 1e-15);
}

TEST_CASE("relabeled bound evaluation") {
    const AmplitudePair p =
        uur::amplitude_pair(uur::clock(3), uur::shift(3), clock_shift_state(3, pi / 4.0));

    const PermutationPair id3 = identity_perm(3);
    for (std::size_t k = 1; k <= 3; ++k) {
        CHECK(uur::permuted_i_k(p, id3, k) == uur::i_k(p, k));
    }

    PermutationPair swap = id3;
    swap.pi1 = {2, 1, 0};
    std::vector<double> xs{p.x[2], p.x[1], p.x[0]};
    CHECK(uur::permuted_i_k(p, swap, 2) == uur::i_k(xs, p.y, 2));

    // k = 1 is relabeling-invariant.
    PermutationPair both;
    both.pi1 = {1, 2, 0};
    both.pi2 = {2, 0, 1};
    CHECK(std::abs(uur::permuted_i_k(p, both, 1) - uur::i_k(p, 1)) <= 1e-12);

    PermutationPair bad = id3;
    bad.pi1 = {0, 1};
    CHECK_THROWS_AS(uur::permuted_i_k(p, bad, 2), uur::InvalidPermutation);
    bad.pi1 = {0, 0, 1};
    CHECK_THROWS_AS(uur::permuted_i_k(p, bad, 2), uur::InvalidPermutation);
}

TEST_CASE("exhaustive relabeling search") {
    const AmplitudePair p =
        uur::amplitude_pair(uur::clock(3), uur::shift(3), clock_shift_state(3, 0.62));

    for (std::size_t k = 1; k <= 3; ++k) {
        const uur::PermutedMax got = uur::max_permuted_i_k(p, k, SearchStrategy::Exhaustive);
        CHECK(got.value >= uur::i_k(p, k));
        CHECK(got.value <= uur::i_k(p, 1) + 1e-10);
        CHECK(uur::permuted_i_k(p, got.perm, k) == got.value);

        const uur::oracle::ExhaustiveMax ref = uur::oracle::exhaustive_perm_max(p.x, p.y, k);
        CHECK(got.value == ref.value);
        CHECK(got.perm == ref.perm);
    }

    // The strengthened k = 2 member recovers the full variance product for
    // this family: the two nonzero coordinates satisfy x_0 y_2 = x_2 y_0, so
    // an aligned pair costs nothing.
    for (double theta : {0.25, 0.62, 1.1}) {
        const AmplitudePair q =
            uur::amplitude_pair(uur::clock(3), uur::shift(3), clock_shift_state(3, theta));
        CHECK(std::abs(q.x[0] * q.y[2] - q.x[2] * q.y[0]) <= 1e-12);
        const double strengthened =
            uur::max_permuted_i_k(q, 2, SearchStrategy::Exhaustive).value;
        CHECK(std::abs(strengthened - uur::i_k(q, 1)) <= 1e-12);
    }

    const std::vector<cplx> seven(7, cplx(1.0, 0.0));
    const AmplitudePair wide(seven, seven);
    CHECK_THROWS_AS(uur::max_permuted_i_k(wide, 2, SearchStrategy::Exhaustive),
                    uur::ExhaustiveTooLarge);
}

TEST_CASE("heuristic relabeling search") {
    uur::oracle::Rng rng(113);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        const std::vector<double> xm = random_moduli(rng, n);
        const std::vector<double> ym = random_moduli(rng, n);
        std::vector<cplx> a(n);
        std::vector<cplx> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = xm[i];
            b[i] = ym[i];
        }
        const AmplitudePair p(a, b);
        for (std::size_t k = 1; k <= n; ++k) {
            const double heur =
                uur::max_permuted_i_k(p, k, SearchStrategy::Heuristic, 42).value;
            const double exact =
                uur::max_permuted_i_k(p, k, SearchStrategy::Exhaustive).value;
            CHECK(heur >= uur::i_k(p, k));
            CHECK(heur <= exact + 1e-12);
        }
    }

    // Determinism: same seed, same result; results carry a valid permutation.
    const AmplitudePair p({0.3, 0.9, 0.1, 0.7, 0.5}, {0.2, 0.4, 0.8, 0.6, 0.1});
    const uur::PermutedMax first = uur::max_permuted_i_k(p, 3, SearchStrategy::Heuristic, 7);
    const uur::PermutedMax second = uur::max_permuted_i_k(p, 3, SearchStrategy::Heuristic, 7);
    CHECK(first.value == second.value);
    CHECK(first.perm == second.perm);
    CHECK(uur::permuted_i_k(p, first.perm, 3) == first.value);

    // Auto falls back to the heuristic above the exhaustive limit and keeps
    // at least the unpermuted value.
    std::vector<cplx> big(8, cplx(0.5, 0.0));
    big[0] = 0.1;
    const AmplitudePair wide(big, big);
    const uur::PermutedMax got = uur::max_permuted_i_k(wide, 4, SearchStrategy::Auto, 99);
    CHECK(got.value >= uur::i_k(wide, 4));
}

TEST_CASE("pair-set bound generalizes the leading block") {
    const AmplitudePair p =
        uur::amplitude_pair(uur::clock(3), uur::shift(3), clock_shift_state(3, pi / 4.0));

    CHECK(uur::pairset_bound(p, {}) == uur::i_k(p, 1));
    CHECK(uur::pairset_bound(p, {{0, 1}}) == uur::i_k(p, 2));
    CHECK(uur::pairset_bound(p, {{0, 1}, {0, 2}, {1, 2}}) == uur::i_k(p, 3));

    // A block that skips the middle index: diagonal plus all cross terms,
    // with only the (0, 2) pair aligned.
    const double direct = [&p] {
        double diag = 0.0;
        for (std::size_t i = 0; i < 3; ++i) diag += p.x[i] * p.x[i] * p.y[i] * p.y[i];
        double cross = 0.0;
        cross += p.x[0] * p.x[0] * p.y[1] * p.y[1] + p.x[1] * p.x[1] * p.y[0] * p.y[0];
        cross += p.x[1] * p.x[1] * p.y[2] * p.y[2] + p.x[2] * p.x[2] * p.y[1] * p.y[1];
        const double aligned = 2.0 * p.x[0] * p.y[0] * p.x[2] * p.y[2];
        return diag + cross + aligned;
    }();
    CHECK(std::abs(uur::pairset_bound(p, {{0, 2}}) - direct) <= 1e-15);
    CHECK(uur::pairset_bound(p, {{0, 2}}) <= uur::i_k(p, 1) + 1e-12);

    CHECK_THROWS_AS(uur::pairset_bound(p, {{1, 1}}), uur::InvalidPairSet);
    CHECK_THROWS_AS(uur::pairset_bound(p, {{2, 0}}), uur::InvalidPairSet);
    CHECK_THROWS_AS(uur::pairset_bound(p, {{0, 3}}), uur::InvalidPairSet);
    CHECK_THROWS_AS(uur::pairset_bound(p, {{0, 1}, {0, 1}}), uur::InvalidPairSet);
}

TEST_CASE("gram reports") {
    const State psi(PureState({0.6, 0.0, 0.8}));
    const UnitaryOperator id(ComplexMatrix::identity(3));

    const uur::GramReport trivial = uur::gram({id, id}, psi);
    REQUIRE(trivial.gram.rows() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(std::abs(trivial.gram(i, j) - cplx(1, 0)) <= 1e-15);
        }
    }
    CHECK(std::abs(trivial.determinant) <= 1e-12);
    REQUIRE(trivial.lower_bound.has_value());
    CHECK(std::abs(*trivial.lower_bound) <= 1e-15);

    // For a pure qutrit and three operators the five images live in C^3, so
    // the determinant vanishes.
    uur::oracle::Rng rng(131);
    const State random_psi(uur::oracle::random_pure(rng, 3));
    const UnitaryOperator a = uur::oracle::random_unitary(rng, 3);
    const UnitaryOperator b = uur::oracle::random_unitary(rng, 3);
    const UnitaryOperator c = uur::oracle::random_unitary(rng, 3);
    const uur::GramReport rank_limited = uur::gram({a, b, c}, random_psi);
    CHECK(std::abs(rank_limited.determinant) <= 1e-9);
    REQUIRE(rank_limited.lower_bound.has_value());
    CHECK(std::abs(*rank_limited.lower_bound - uur::lb3(a, b, c, random_psi)) <= 1e-12);

    // Diagonal entries are written as exact ones, first row/column hold the
    // plain expectations.
    CHECK(rank_limited.gram(0, 0) == cplx(1, 0));
    CHECK(rank_limited.gram(2, 2) == cplx(1, 0));
    CHECK(std::abs(rank_limited.gram(0, 1) - uur::expectation(a, random_psi)) <= 1e-15);

    CHECK_THROWS_AS(uur::gram({}, psi), uur::ValidationError);
    CHECK_THROWS_AS(uur::gram({id, id, id, id, id}, psi), uur::TooManyOperators);
    CHECK_THROWS_AS(uur::gram({UnitaryOperator(ComplexMatrix::identity(2))}, psi),
                    uur::DimMismatch);

    const uur::GramReport four = uur::gram({a, b, c, id}, random_psi);
    CHECK_FALSE(four.lower_bound.has_value());
}

TEST_CASE("three-operator closed-form bound") {
    const State psi(PureState({0.6, 0.0, 0.8}));
    const UnitaryOperator id(ComplexMatrix::identity(3));
    const UnitaryOperator a = uur::clock(3);
    const UnitaryOperator b = uur::shift(3);
    CHECK(std::abs(uur::lb3(a, b, id, psi)) <= 1e-14);

    // Against the determinant identity on seeded instances.
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 3);
        uur::oracle::Rng rng(3000 + static_cast<std::uint64_t>(trial));
        const State st = (trial % 2 == 1) ? State(uur::oracle::random_density(rng, dim))
                                          : State(uur::oracle::random_pure(rng, dim));
        const UnitaryOperator u1 = uur::oracle::random_unitary(rng, dim);
        const UnitaryOperator u2 = uur::oracle::random_unitary(rng, dim);
        const UnitaryOperator u3 = uur::oracle::random_unitary(rng, dim);
        const double product = uur::variance(u1, st) * uur::variance(u2, st) *
                               uur::variance(u3, st);
        const double closed = uur::lb3(u1, u2, u3, st);
        const double det = uur::gram({u1, u2, u3}, st).determinant;
        CHECK(std::abs(det - (product - closed)) <= 1e-9);
        CHECK(closed <= product + 1e-9);
    }
}

TEST_CASE("three-operator product bound") {
    const State psi(PureState({0.6, 0.0, 0.8}));
    const UnitaryOperator id(ComplexMatrix::identity(3));
    const UnitaryOperator a = uur::clock(3);
    const UnitaryOperator b = uur::shift(3);
    CHECK(uur::product3_bound(a, b, id, psi, 2) == 0.0);

    // Composition check on a literal configuration.
    const std::vector<cplx> e3 = {0.5 * std::cos(pi / 4.0), std::sqrt(3.0) / 2.0 * std::sin(pi / 4.0),
                                  0.5 * std::sin(pi / 4.0), std::sqrt(3.0) / 2.0 * std::cos(pi / 4.0)};
    const State psi4{PureState(e3)};
    const UnitaryOperator a4 = uur::clock(4);
    const UnitaryOperator b4 = uur::shift(4);
    const UnitaryOperator c4(ComplexMatrix::from_rows(
        {{0.0, 1.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, -1.0}}));
    for (std::size_t k = 2; k <= 4; ++k) {
        const double composed = std::sqrt(
            uur::i_k(uur::amplitude_pair(a4, b4, psi4), k) *
            uur::i_k(uur::amplitude_pair(a4, c4, psi4), k) *
            uur::i_k(uur::amplitude_pair(b4, c4, psi4), k));
        CHECK(uur::product3_bound(a4, b4, c4, psi4, k) == composed);

        const double strengthened = uur::product3_bound(a4, b4, c4, psi4, k, true);
        CHECK(strengthened >= composed - 1e-12);
        const double product = uur::variance(a4, psi4) * uur::variance(b4, psi4) *
                               uur::variance(c4, psi4);
        CHECK(strengthened <= product + 1e-9);
    }

    CHECK_THROWS_AS(uur::product3_bound(a4, b4, c4, psi4, 1), uur::IndexOutOfRange);
    CHECK_THROWS_AS(uur::product3_bound(a4, b4, c4, psi4, 5), uur::IndexOutOfRange);
}

TEST_CASE("four-operator product bound") {
    // Pairing that saturates: B is the conjugate of the diagonal A, so the
    // coordinate vectors coincide; D differs from C by a phase.
    ComplexMatrix diag(5, 5);
    for (int j = 0; j < 5; ++j) {
        diag(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) =
            std::polar(1.0, 2.0 * pi * static_cast<double>(j - 2) / 5.0);
    }
    const UnitaryOperator a(diag);
    const UnitaryOperator b(diag.conjugate());
    const UnitaryOperator c = uur::shift(5);
    const UnitaryOperator d(c.matrix() * cplx(0, 1));

    const double theta = 0.8;
    std::vector<cplx> amps(5, cplx(0.0, 0.0));
    amps[0] = std::cos(theta);
    amps[1] = 0.5 * std::sin(theta);
    amps[4] = std::sqrt(3.0) / 2.0 * std::sin(theta);
    const State psi{PureState(amps)};

    const double product = uur::variance(a, psi) * uur::variance(b, psi) *
                           uur::variance(c, psi) * uur::variance(d, psi);
    for (std::size_t k = 2; k <= 5; ++k) {
        CHECK(std::abs(uur::product4_bound(a, b, c, d, psi, k) - product) <= 1e-9);
    }

    // Best matching dominates the fixed pairing.
    for (int trial = 0; trial < 10; ++trial) {
        uur::oracle::Rng rng(4000 + static_cast<std::uint64_t>(trial));
        const State st(uur::oracle::random_pure(rng, 4));
        const UnitaryOperator u1 = uur::oracle::random_unitary(rng, 4);
        const UnitaryOperator u2 = uur::oracle::random_unitary(rng, 4);
        const UnitaryOperator u3 = uur::oracle::random_unitary(rng, 4);
        const UnitaryOperator u4 = uur::oracle::random_unitary(rng, 4);
        const double fixed = uur::product4_bound(u1, u2, u3, u4, st, 2);
        const double best = uur::product4_bound(u1, u2, u3, u4, st, 2, true);
        CHECK(best >= fixed);
        const double product4 = uur::variance(u1, st) * uur::variance(u2, st) *
                                uur::variance(u3, st) * uur::variance(u4, st);
        CHECK(best <= product4 + 1e-9);
    }

    CHECK_THROWS_AS(uur::product4_bound(a, b, c, d, psi, 1), uur::IndexOutOfRange);
}
