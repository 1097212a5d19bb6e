#include "uur/quantum.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "uur/tolerances.hpp"

namespace uur {

namespace {

void require_finite(const std::vector<cplx>& values, const char* what) {
    for (const cplx& z : values) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError(std::string(what) + " must be finite");
        }
    }
}

}  // namespace

PureState::PureState(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw ValidationError("state vector must not be empty");
    require_finite(amplitudes_, "state amplitudes");
    const double norm = std::sqrt(norm_squared(amplitudes_));
    if (std::abs(norm - 1.0) > tol::validation) {
        throw ValidationError("state vector norm " + std::to_string(norm) +
                              " deviates from 1 beyond tolerance");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
    if (!rho_.is_square()) throw DimMismatch("density matrix must be square");
    if (rho_.hermiticity_defect() > tol::validation) {
        throw NotHermitian("density matrix is not Hermitian within tolerance");
    }
    if (std::abs(rho_.trace() - cplx(1.0, 0.0)) > tol::validation) {
        throw ValidationError("density matrix trace deviates from 1 beyond tolerance");
    }
    // Eigenvalue check doubles as the PSD gate; hermitian_eig cannot throw
    // NotHermitian here because of the defect check above.
    for (double lam : hermitian_eig(rho_).eigenvalues) {
        if (lam < -tol::validation) {
            throw NotPSD("density matrix has an eigenvalue below the PSD tolerance");
        }
    }
}

UnitaryOperator::UnitaryOperator(ComplexMatrix u) : u_(std::move(u)) {
    if (!u_.is_square()) throw DimMismatch("unitary operator must be square");
    if (u_.unitarity_defect() > tol::validation) {
        throw ValidationError("operator is not unitary within tolerance");
    }
}

const PureState& State::pure() const {
    if (const PureState* ps = std::get_if<PureState>(&value_)) return *ps;
    throw Error("state is mixed, not pure");
}

const DensityMatrix& State::density() const {
    if (const DensityMatrix* dm = std::get_if<DensityMatrix>(&value_)) return *dm;
    throw Error("state is pure, not mixed");
}

std::size_t State::dim() const {
    return is_pure() ? pure().dim() : density().dim();
}

UnitaryOperator clock(std::size_t d) {
    if (d < 2) throw ValidationError("clock operator needs dimension >= 2");
    ComplexMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        m(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                      static_cast<double>(d));
    }
    return UnitaryOperator(std::move(m));
}

UnitaryOperator shift(std::size_t d) {
    if (d < 2) throw ValidationError("shift operator needs dimension >= 2");
    ComplexMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) m((j + 1) % d, j) = 1.0;
    return UnitaryOperator(std::move(m));
}

ComplexMatrix pauli(Axis axis) {
    switch (axis) {
        case Axis::X:
            return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        case Axis::Y:
            return ComplexMatrix::from_rows({{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}});
        case Axis::Z:
            return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    }
    throw Error("unreachable: bad axis");
}

UnitaryOperator pauli_exp(Axis axis, double angle) {
    ComplexMatrix m = ComplexMatrix::identity(2) * cplx(std::cos(angle), 0.0) +
                      pauli(axis) * cplx(0.0, std::sin(angle));
    return UnitaryOperator(std::move(m));
}

UnitaryOperator rotation3(Axis axis, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    switch (axis) {
        case Axis::X:
            return UnitaryOperator(
                ComplexMatrix::from_rows({{1.0, 0.0, 0.0}, {0.0, c, -s}, {0.0, s, c}}));
        case Axis::Y:
            return UnitaryOperator(
                ComplexMatrix::from_rows({{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}));
        case Axis::Z:
            return UnitaryOperator(
                ComplexMatrix::from_rows({{c, s, 0.0}, {-s, c, 0.0}, {0.0, 0.0, 1.0}}));
    }
    throw Error("unreachable: bad axis");
}

DensityMatrix bloch_qubit(const std::array<double, 3>& r) {
    const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (!std::isfinite(len)) throw ValidationError("Bloch vector must be finite");
    if (len > 1.0 + tol::validation) {
        throw BlochOutOfBall("Bloch vector length " + std::to_string(len) +
                             " exceeds the unit ball");
    }
    ComplexMatrix m = ComplexMatrix::identity(2);
    const std::array<Axis, 3> axes{Axis::X, Axis::Y, Axis::Z};
    for (std::size_t k = 0; k < 3; ++k) m += pauli(axes[k]) * cplx(r[k], 0.0);
    return DensityMatrix(m * cplx(0.5, 0.0));
}

ComplexMatrix gell_mann(std::size_t k) {
    const cplx i(0.0, 1.0);
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    switch (k) {
        case 1:
            return ComplexMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
        case 2:
            return ComplexMatrix::from_rows({{0, -i, 0}, {i, 0, 0}, {0, 0, 0}});
        case 3:
            return ComplexMatrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}});
        case 4:
            return ComplexMatrix::from_rows({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
        case 5:
            return ComplexMatrix::from_rows({{0, 0, -i}, {0, 0, 0}, {i, 0, 0}});
        case 6:
            return ComplexMatrix::from_rows({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}});
        case 7:
            return ComplexMatrix::from_rows({{0, 0, 0}, {0, 0, -i}, {0, i, 0}});
        case 8:
            return ComplexMatrix::from_rows({{inv_sqrt3, 0, 0},
                                             {0, inv_sqrt3, 0},
                                             {0, 0, -2.0 * inv_sqrt3}});
        default:
            throw IndexOutOfRange("Gell-Mann index must lie in 1..8, got " +
                                  std::to_string(k));
    }
}

DensityMatrix gellmann_qutrit(const std::array<double, 8>& n) {
    ComplexMatrix m = ComplexMatrix::identity(3);
    const double sqrt3 = std::sqrt(3.0);
    for (std::size_t k = 0; k < 8; ++k) {
        if (!std::isfinite(n[k])) throw ValidationError("Bloch-like components must be finite");
        if (n[k] == 0.0) continue;
        m += gell_mann(k + 1) * cplx(sqrt3 * n[k], 0.0);
    }
    return DensityMatrix(m * cplx(1.0 / 3.0, 0.0));
}

DensityMatrix to_density(const PureState& psi) {
    const std::size_t n = psi.dim();
    ComplexMatrix rho(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rho(i, j) = psi.amplitudes()[i] * std::conj(psi.amplitudes()[j]);
    return DensityMatrix(std::move(rho));
}

cplx expectation(const ComplexMatrix& m, const State& s) {
    if (!m.is_square() || m.rows() != s.dim()) {
        throw DimMismatch("operator dimension " + std::to_string(m.rows()) +
                          " does not match state dimension " + std::to_string(s.dim()));
    }
    if (s.is_pure()) {
        return inner(s.pure().amplitudes(), m * s.pure().amplitudes());
    }
    return (s.density().matrix() * m).trace();
}

cplx expectation(const UnitaryOperator& u, const State& s) {
    return expectation(u.matrix(), s);
}

ComplexMatrix deviation(const UnitaryOperator& u, const State& s) {
    return u.matrix() - ComplexMatrix::identity(u.dim()) * expectation(u, s);
}

double variance(const UnitaryOperator& u, const State& s) {
    const ComplexMatrix dev = deviation(u, s);
    if (s.is_pure()) {
        return norm_squared(dev * s.pure().amplitudes());
    }
    return (s.density().matrix() * (dev.adjoint() * dev)).trace().real();
}

PureState purify(const DensityMatrix& rho) {
    return PureState(vec(psd_sqrt(rho.matrix())));
}

}  // namespace uur
