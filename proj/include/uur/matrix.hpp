#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "uur/errors.hpp"

namespace uur {

using cplx = std::complex<double>;

// Dense complex matrix with row-major storage and 0-based indexing. Sizes in
// this library top out around 26 x 26 (Kronecker products of 5-dim operators
// with a 5-dim identity, Gram matrices up to 5 x 5), so everything is plain
// O(n^3) with no blocking or cleverness.
class ComplexMatrix {
public:
    // Zero matrix of the given shape. Both dimensions must be >= 1.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    // Matrix from a flat row-major entry list; throws DimMismatch when the
    // count is wrong and ValidationError when any entry is not finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);

    // Convenience for literal matrices in tests and operator tables.
    static ComplexMatrix from_rows(const std::vector<std::vector<cplx>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    cplx trace() const;
    double frobenius_norm() const;

    // max_ij |M(i,j) - conj(M(j,i))|, zero iff Hermitian.
    double hermiticity_defect() const;

    // ||M†M - I||_F, zero iff unitary.
    double unitarity_defect() const;

    double max_abs_diff(const ComplexMatrix& other) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        a += b;
        return a;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
        a -= b;
        return a;
    }
    friend ComplexMatrix operator*(ComplexMatrix m, cplx scalar) {
        m *= scalar;
        return m;
    }
    friend ComplexMatrix operator*(cplx scalar, ComplexMatrix m) {
        m *= scalar;
        return m;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend std::vector<cplx> operator*(const ComplexMatrix& m, const std::vector<cplx>& v);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> data_;
};

// Hermitian inner product, conjugate-linear in the first argument.
cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b);
double norm_squared(const std::vector<cplx>& v);

// Kronecker product, (a ⊗ b)(i_a*rb + i_b, j_a*cb + j_b) = a(i_a,j_a) b(i_b,j_b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Column stacking: vec(M)[j*rows + i] = M(i, j). With this convention
// vec(M T) = (I ⊗ M) vec(T) for square M, T, which the variance machinery
// leans on; see the round-trip and product-identity tests.
std::vector<cplx> vec(const ComplexMatrix& m);
ComplexMatrix unvec(const std::vector<cplx>& v, std::size_t rows, std::size_t cols);

// Eigenvalues sorted descending with matching orthonormal eigenvector columns.
struct HermitianEigen {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic complex Jacobi diagonalization. Sweeps upper-triangle pivots until
// the off-diagonal Frobenius norm falls below tol::jacobi_off_diagonal,
// giving up with NoConvergence after tol::jacobi_max_sweeps sweeps. Also
// throws NotHermitian when the input's hermiticity defect exceeds the
// validation tolerance.
HermitianEigen hermitian_eig(const ComplexMatrix& h);

// Principal square root of a positive-semidefinite Hermitian matrix. Small
// negative eigenvalues (above -tol::validation) are clamped to zero; anything
// lower throws NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

// Determinant via LU with partial pivoting. Guarded to n <= 8 (TooLarge
// beyond); the library only ever needs Gram matrices up to 5 x 5.
cplx det(const ComplexMatrix& m);

}  // namespace uur
