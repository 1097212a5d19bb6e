#include "uur/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace uur::oracle {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; shifting u1 into (0, 1] keeps the log finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

cplx Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

double i_k_reference(const std::vector<double>& x, const std::vector<double>& y,
                     std::size_t k) {
    if (x.size() != y.size()) {
        throw DimMismatch("reference bound needs equal-length vectors");
    }
    const std::size_t n = x.size();
    if (k < 1 || k > n) {
        throw IndexOutOfRange("reference bound index k = " + std::to_string(k) +
                              " outside 1.." + std::to_string(n));
    }

    double diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        diag += x[i] * x[i] * y[i] * y[i];
    }

    double cross = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j >= k) {
                cross += x[i] * x[i] * y[j] * y[j] + x[j] * x[j] * y[i] * y[i];
            }
        }
    }

    double aligned = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j < k) {
                aligned += 2.0 * x[i] * y[i] * x[j] * y[j];
            }
        }
    }

    return diag + cross + aligned;
}

ExhaustiveMax exhaustive_perm_max(const std::vector<double>& x,
                                  const std::vector<double>& y, std::size_t k) {
    if (x.size() != y.size()) {
        throw DimMismatch("exhaustive search needs equal-length vectors");
    }
    const std::size_t n = x.size();
    if (n > 6) {
        throw TooLarge("exhaustive reference search supports N <= 6, got " +
                       std::to_string(n));
    }

    std::vector<std::size_t> pi1(n);
    std::iota(pi1.begin(), pi1.end(), std::size_t{0});
    std::vector<double> xp(n), yp(n);
    double best = -std::numeric_limits<double>::infinity();
    ExhaustiveMax out{best, PermutationPair{pi1, pi1}};
    do {
        for (std::size_t i = 0; i < n; ++i) xp[i] = x[pi1[i]];
        std::vector<std::size_t> pi2(n);
        std::iota(pi2.begin(), pi2.end(), std::size_t{0});
        do {
            for (std::size_t i = 0; i < n; ++i) yp[i] = y[pi2[i]];
            const double v = i_k_reference(xp, yp, k);
            if (v > best) {
                best = v;
                out.value = v;
                out.perm = PermutationPair{pi1, pi2};
            }
        } while (std::next_permutation(pi2.begin(), pi2.end()));
    } while (std::next_permutation(pi1.begin(), pi1.end()));
    return out;
}

namespace {

ComplexMatrix minor_matrix(const ComplexMatrix& m, std::size_t drop_row,
                           std::size_t drop_col) {
    const std::size_t n = m.rows();
    ComplexMatrix out(n - 1, n - 1);
    std::size_t oi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == drop_row) continue;
        std::size_t oj = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == drop_col) continue;
            out(oi, oj) = m(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

}  // namespace

cplx laplace_det(const ComplexMatrix& m) {
    if (!m.is_square()) throw DimMismatch("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n > 5) {
        throw TooLarge("cofactor expansion is limited to 5x5, got " + std::to_string(n));
    }
    if (n == 1) return m(0, 0);
    cplx acc = 0.0;
    double sign = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        acc += sign * m(0, j) * laplace_det(minor_matrix(m, 0, j));
        sign = -sign;
    }
    return acc;
}

double variance_reference(const UnitaryOperator& u, const State& s) {
    // Everything by explicit matrix products on the density matrix.
    const DensityMatrix rho = s.is_pure() ? to_density(s.pure()) : s.density();
    const std::size_t n = rho.dim();
    const cplx mean = (rho.matrix() * u.matrix()).trace();
    const ComplexMatrix dev = u.matrix() - ComplexMatrix::identity(n) * mean;
    return (rho.matrix() * (dev.adjoint() * dev)).trace().real();
}

namespace {

std::vector<cplx> gaussian_vector(Rng& rng, std::size_t n) {
    std::vector<cplx> v(n);
    for (cplx& z : v) z = rng.complex_gaussian();
    return v;
}

void require_dim(std::size_t dim) {
    if (dim < 2 || dim > 6) {
        throw ValidationError("random instances support dims 2..6, got " +
                              std::to_string(dim));
    }
}

}  // namespace

UnitaryOperator random_unitary(Rng& rng, std::size_t dim) {
    require_dim(dim);
    std::vector<std::vector<cplx>> cols;
    cols.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<cplx> col = gaussian_vector(rng, dim);
        while (true) {
            // Two orthogonalization passes; one already lands far below the
            // validation tolerance at these sizes, two make it a non-issue.
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& prev : cols) {
                    const cplx proj = inner(prev, col);
                    for (std::size_t i = 0; i < dim; ++i) col[i] -= proj * prev[i];
                }
            }
            const double norm = std::sqrt(norm_squared(col));
            if (norm > 1e-6) {
                for (cplx& z : col) z /= norm;
                break;
            }
            // Essentially-dependent draw (practically unreachable); redraw.
            col = gaussian_vector(rng, dim);
        }
        cols.push_back(std::move(col));
    }
    ComplexMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
    return UnitaryOperator(std::move(m));
}

PureState random_pure(Rng& rng, std::size_t dim) {
    require_dim(dim);
    while (true) {
        std::vector<cplx> v = gaussian_vector(rng, dim);
        const double norm = std::sqrt(norm_squared(v));
        if (norm <= 1e-6) continue;
        for (cplx& z : v) z /= norm;
        return PureState(std::move(v));
    }
}

DensityMatrix random_density(Rng& rng, std::size_t dim) {
    require_dim(dim);
    ComplexMatrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
    ComplexMatrix h = g.adjoint() * g;
    const double tr = h.trace().real();
    // Trace is a sum of squared moduli; zero would need an all-zero draw.
    h *= cplx(1.0 / tr, 0.0);
    // Exact Hermiticity is worth one extra pass; G†G can drift by an ulp.
    h = (h + h.adjoint()) * cplx(0.5, 0.0);
    return DensityMatrix(std::move(h));
}

RandomInstance random_instance(std::uint64_t seed, std::size_t dim, bool mixed) {
    require_dim(dim);
    Rng rng(seed);
    if (mixed) {
        DensityMatrix rho = random_density(rng, dim);
        UnitaryOperator a = random_unitary(rng, dim);
        UnitaryOperator b = random_unitary(rng, dim);
        return RandomInstance{State(std::move(rho)), std::move(a), std::move(b)};
    }
    PureState psi = random_pure(rng, dim);
    UnitaryOperator a = random_unitary(rng, dim);
    UnitaryOperator b = random_unitary(rng, dim);
    return RandomInstance{State(std::move(psi)), std::move(a), std::move(b)};
}

}  // namespace uur::oracle
