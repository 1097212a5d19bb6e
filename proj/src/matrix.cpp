#include "uur/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "uur/tolerances.hpp"

namespace uur {

namespace {

void require_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw DimMismatch("matrix dimensions must be at least 1x1, got " +
                          std::to_string(rows) + "x" + std::to_string(cols));
    }
}

bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {
    require_shape(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require_shape(rows, cols);
    if (data_.size() != rows * cols) {
        throw DimMismatch("entry count " + std::to_string(data_.size()) +
                          " does not fill a " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " matrix");
    }
    for (const cplx& z : data_) {
        if (!finite(z)) throw ValidationError("matrix entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<cplx>>& rows) {
    if (rows.empty()) throw DimMismatch("from_rows needs at least one row");
    const std::size_t cols = rows.front().size();
    std::vector<cplx> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& row : rows) {
        if (row.size() != cols) {
            throw DimMismatch("from_rows requires equal-length rows");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return ComplexMatrix(rows.size(), cols, std::move(flat));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) out.data_[i] = std::conj(data_[i]);
    return out;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw DimMismatch("trace requires a square matrix");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) throw DimMismatch("hermiticity check requires a square matrix");
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

double ComplexMatrix::unitarity_defect() const {
    if (!is_square()) throw DimMismatch("unitarity check requires a square matrix");
    ComplexMatrix residual = adjoint() * (*this);
    for (std::size_t i = 0; i < rows_; ++i) residual(i, i) -= 1.0;
    return residual.frobenius_norm();
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimMismatch("max_abs_diff requires equal shapes");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimMismatch("matrix addition requires equal shapes");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimMismatch("matrix subtraction requires equal shapes");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (cplx& z : data_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimMismatch("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                          std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                          std::to_string(b.cols_));
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

std::vector<cplx> operator*(const ComplexMatrix& m, const std::vector<cplx>& v) {
    if (m.cols_ != v.size()) {
        throw DimMismatch("matrix-vector product shape mismatch");
    }
    std::vector<cplx> out(m.rows_, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < m.rows_; ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < m.cols_; ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw DimMismatch("inner product requires equal lengths");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm_squared(const std::vector<cplx>& v) {
    double acc = 0.0;
    for (const cplx& z : v) acc += std::norm(z);
    return acc;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const cplx scale = a(ia, ja);
            if (scale == cplx(0.0, 0.0)) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = scale * b(ib, jb);
        }
    return out;
}

std::vector<cplx> vec(const ComplexMatrix& m) {
    std::vector<cplx> out(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out[j * m.rows() + i] = m(i, j);
    return out;
}

ComplexMatrix unvec(const std::vector<cplx>& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) {
        throw DimMismatch("unvec: vector length " + std::to_string(v.size()) +
                          " does not fill a " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " matrix");
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) out(i, j) = v[j * rows + i];
    return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& h) {
    if (!h.is_square()) throw DimMismatch("eigendecomposition requires a square matrix");
    if (h.hermiticity_defect() > tol::validation) {
        throw NotHermitian("matrix is not Hermitian within tolerance");
    }
    const std::size_t n = h.rows();

    // Work on the symmetrized copy so conjugate symmetry holds exactly from
    // the start; the rotations below preserve it.
    ComplexMatrix a = (h + h.adjoint()) * cplx(0.5, 0.0);
    ComplexMatrix v = ComplexMatrix::identity(n);

    bool converged = (n == 1) || off_diagonal_norm(a) <= tol::jacobi_off_diagonal;
    for (int sweep = 0; sweep < tol::jacobi_max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                const cplx phase = a(p, q) / r;

                // Pick the rotation angle zeroing the pivot: tan(2θ) relates
                // to the diagonal gap, solved via the stable quadratic root.
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // a <- U† a U with U the identity outside rows/cols p, q and
                // U(p,p) = c, U(p,q) = s*phase, U(q,p) = -s*conj(phase), U(q,q) = c.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx ap = a(i, p);
                    const cplx aq = a(i, q);
                    a(i, p) = c * ap - s * std::conj(phase) * aq;
                    a(i, q) = s * phase * ap + c * aq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx ap = a(p, j);
                    const cplx aq = a(q, j);
                    a(p, j) = c * ap - s * phase * aq;
                    a(q, j) = s * std::conj(phase) * ap + c * aq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vp = v(i, p);
                    const cplx vq = v(i, q);
                    v(i, p) = c * vp - s * std::conj(phase) * vq;
                    v(i, q) = s * phase * vp + c * vq;
                }
            }
        }
        converged = off_diagonal_norm(a) <= tol::jacobi_off_diagonal;
    }
    if (!converged) {
        throw NoConvergence("Jacobi eigensolver did not reach the off-diagonal threshold");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&a](std::size_t lhs, std::size_t rhs) {
        return a(lhs, lhs).real() > a(rhs, rhs).real();
    });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
    HermitianEigen eig = hermitian_eig(h);
    const std::size_t n = h.rows();
    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = eig.eigenvalues[k];
        if (lam < -tol::validation) {
            throw NotPSD("matrix has an eigenvalue below the PSD tolerance");
        }
        roots[k] = std::sqrt(std::max(lam, 0.0));
    }
    // V diag(sqrt(λ)) V†
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += eig.eigenvectors(i, k) * roots[k] * std::conj(eig.eigenvectors(j, k));
            out(i, j) = acc;
        }
    return out;
}

cplx det(const ComplexMatrix& m) {
    if (!m.is_square()) throw DimMismatch("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n > 8) {
        throw TooLarge("determinant is limited to matrices up to 8x8, got " +
                       std::to_string(n));
    }

    ComplexMatrix lu = m;
    cplx result = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(lu(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            const double cand = std::abs(lu(i, col));
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
            result = -result;
        }
        result *= lu(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            const cplx factor = lu(i, col) / lu(col, col);
            if (factor == cplx(0.0, 0.0)) continue;
            for (std::size_t j = col; j < n; ++j) lu(i, j) -= factor * lu(col, j);
        }
    }
    return result;
}

}  // namespace uur
