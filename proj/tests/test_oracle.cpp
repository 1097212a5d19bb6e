#include <doctest.h>

#include <cmath>
#include <vector>

#include "uur/bounds.hpp"
#include "uur/oracle.hpp"

using uur::ComplexMatrix;
using uur::cplx;

namespace uur_oracle = uur::oracle;

TEST_CASE("seeded generator is reproducible") {
    uur_oracle::Rng a(12345);
    uur_oracle::Rng b(12345);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    for (int i = 0; i < 100; ++i) CHECK(a.gaussian() == b.gaussian());

    uur_oracle::Rng c(54321);
    bool any_different = false;
    uur_oracle::Rng a2(12345);
    for (int i = 0; i < 10; ++i) {
        if (a2.uniform() != c.uniform()) any_different = true;
    }
    CHECK(any_different);
}

TEST_CASE("reference bound literal cases") {
    const std::vector<double> ones{1.0, 1.0};
    CHECK(uur_oracle::i_k_reference(ones, ones, 1) == 4.0);
    CHECK(uur_oracle::i_k_reference(ones, ones, 2) == 4.0);

    const std::vector<double> x{1.0, 0.0};
    const std::vector<double> y{0.0, 1.0};
    CHECK(uur_oracle::i_k_reference(x, y, 1) == 1.0);
    CHECK(uur_oracle::i_k_reference(x, y, 2) == 0.0);

    CHECK_THROWS_AS(uur_oracle::i_k_reference(x, y, 0), uur::IndexOutOfRange);
    CHECK_THROWS_AS(uur_oracle::i_k_reference(x, {1.0}, 1), uur::DimMismatch);
}

TEST_CASE("reference bound agrees with the engine bit for bit") {
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 8);
        uur_oracle::Rng rng(5000 + static_cast<std::uint64_t>(trial));
        std::vector<double> x(n);
        std::vector<double> y(n);
        for (double& e : x) e = std::abs(rng.gaussian());
        for (double& e : y) e = std::abs(rng.gaussian());
        for (std::size_t k = 1; k <= n; ++k) {
            CHECK(uur::i_k(x, y, k) == uur_oracle::i_k_reference(x, y, k));
        }
    }
}

TEST_CASE("reference exhaustive search") {
    const std::vector<double> x{1.0, 0.0};
    const std::vector<double> y{0.0, 1.0};
    const uur_oracle::ExhaustiveMax best = uur_oracle::exhaustive_perm_max(x, y, 2);
    CHECK(best.value == 1.0);
    // First maximizer in lexicographic (pi1, pi2) order: identity on x, swap on y.
    CHECK(best.perm.pi1 == std::vector<std::size_t>{0, 1});
    CHECK(best.perm.pi2 == std::vector<std::size_t>{1, 0});

    // Aligned vectors are maximized by the identity, which is also the first
    // candidate enumerated.
    const std::vector<double> same{0.8, 0.6};
    const uur_oracle::ExhaustiveMax aligned = uur_oracle::exhaustive_perm_max(same, same, 2);
    CHECK(aligned.value == uur_oracle::i_k_reference(same, same, 2));
    CHECK(aligned.perm.pi1 == std::vector<std::size_t>{0, 1});
    CHECK(aligned.perm.pi2 == std::vector<std::size_t>{0, 1});

    const std::vector<double> seven(7, 1.0);
    CHECK_THROWS_AS(uur_oracle::exhaustive_perm_max(seven, seven, 2), uur::TooLarge);
}

TEST_CASE("cofactor determinant") {
    CHECK(uur_oracle::laplace_det(ComplexMatrix::identity(3)) == cplx(1, 0));
    CHECK(uur_oracle::laplace_det(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})) ==
          cplx(-1, 0));
    CHECK(uur_oracle::laplace_det(ComplexMatrix::from_rows({{2.0, 0.0}, {0.0, 3.0}})) ==
          cplx(6, 0));
    CHECK_THROWS_AS(uur_oracle::laplace_det(ComplexMatrix(6, 6)), uur::TooLarge);
    CHECK_THROWS_AS(uur_oracle::laplace_det(ComplexMatrix(2, 3)), uur::DimMismatch);
}

TEST_CASE("reference variance agrees with the engine") {
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 4);
        const uur_oracle::RandomInstance inst =
            uur_oracle::random_instance(6000 + static_cast<std::uint64_t>(trial), dim,
                                        trial % 2 == 1);
        const double engine = uur::variance(inst.a, inst.state);
        const double reference = uur_oracle::variance_reference(inst.a, inst.state);
        CHECK(std::abs(engine - reference) <= 1e-12);
    }
}

TEST_CASE("random unitaries, states and densities are well formed") {
    for (std::size_t dim = 2; dim <= 6; ++dim) {
        uur_oracle::Rng rng(7000 + dim);
        const uur::UnitaryOperator u = uur_oracle::random_unitary(rng, dim);
        CHECK(u.matrix().unitarity_defect() <= 1e-10);

        const uur::PureState psi = uur_oracle::random_pure(rng, dim);
        CHECK(std::abs(uur::norm_squared(psi.amplitudes()) - 1.0) <= 1e-12);

        const uur::DensityMatrix rho = uur_oracle::random_density(rng, dim);
        CHECK(std::abs(rho.matrix().trace() - cplx(1, 0)) <= 1e-12);
        CHECK(rho.matrix().hermiticity_defect() <= 1e-12);
        const auto eig = uur::hermitian_eig(rho.matrix());
        for (double ev : eig.eigenvalues) CHECK(ev >= -1e-12);
    }
}

TEST_CASE("random instances reproduce from the seed") {
    const uur_oracle::RandomInstance first = uur_oracle::random_instance(99, 4, true);
    const uur_oracle::RandomInstance second = uur_oracle::random_instance(99, 4, true);
    CHECK_FALSE(first.state.is_pure());
    CHECK(first.state.density().matrix().max_abs_diff(second.state.density().matrix()) == 0.0);
    CHECK(first.a.matrix().max_abs_diff(second.a.matrix()) == 0.0);
    CHECK(first.b.matrix().max_abs_diff(second.b.matrix()) == 0.0);

    const uur_oracle::RandomInstance pure = uur_oracle::random_instance(99, 4, false);
    CHECK(pure.state.is_pure());
    CHECK(pure.state.dim() == 4);

    CHECK_THROWS_AS(uur_oracle::random_instance(1, 1, false), uur::ValidationError);
    CHECK_THROWS_AS(uur_oracle::random_instance(1, 7, false), uur::ValidationError);
}
