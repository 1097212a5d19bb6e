#pragma once

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

#include "uur/matrix.hpp"

namespace uur {

// Normalized state vector. Construction checks the norm against the shared
// validation tolerance and rejects non-finite amplitudes.
class PureState {
public:
    explicit PureState(std::vector<cplx> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }

private:
    std::vector<cplx> amplitudes_;
};

// Density matrix. Construction checks Hermiticity (NotHermitian), unit trace
// (ValidationError) and positive semidefiniteness (NotPSD).
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix rho);

    std::size_t dim() const { return rho_.rows(); }
    const ComplexMatrix& matrix() const { return rho_; }

private:
    ComplexMatrix rho_;
};

// Unitary operator. Construction checks ||U†U - I||_F <= validation tolerance.
class UnitaryOperator {
public:
    explicit UnitaryOperator(ComplexMatrix u);

    std::size_t dim() const { return u_.rows(); }
    const ComplexMatrix& matrix() const { return u_; }

private:
    ComplexMatrix u_;
};

// Sum type over the two state kinds. effective_dim() is the length of the
// coordinate vectors the bound machinery works with: n for a pure state on
// C^n, n^2 for a mixed state (its purification lives on C^n ⊗ C^n).
class State {
public:
    State(PureState ps) : value_(std::move(ps)) {}
    State(DensityMatrix dm) : value_(std::move(dm)) {}

    bool is_pure() const { return std::holds_alternative<PureState>(value_); }
    const PureState& pure() const;
    const DensityMatrix& density() const;

    std::size_t dim() const;
    std::size_t effective_dim() const { return is_pure() ? dim() : dim() * dim(); }

private:
    std::variant<PureState, DensityMatrix> value_;
};

enum class Axis { X, Y, Z };

// diag(1, ω, ..., ω^(d-1)) with ω = exp(2πi/d); d >= 2.
UnitaryOperator clock(std::size_t d);

// Cyclic shift |j⟩ -> |j+1 mod d⟩; d >= 2.
UnitaryOperator shift(std::size_t d);

// Pauli matrix for the given axis.
ComplexMatrix pauli(Axis axis);

// exp(i*angle*σ_axis) = cos(angle) I + i sin(angle) σ_axis on a qubit.
UnitaryOperator pauli_exp(Axis axis, double angle);

// Proper 3x3 rotation by the given angle about a coordinate axis, viewed as a
// unitary on C^3.
UnitaryOperator rotation3(Axis axis, double angle);

// Qubit state (I + r·σ)/2; throws BlochOutOfBall when |r| > 1 beyond tolerance.
DensityMatrix bloch_qubit(const std::array<double, 3>& r);

// Gell-Mann matrix λ_k, k in 1..8, conventional ordering (symmetric pairs,
// antisymmetric pairs, the two diagonal ones third and last).
ComplexMatrix gell_mann(std::size_t k);

// Qutrit state (I + √3 n·λ)/3; components that push an eigenvalue negative
// beyond tolerance throw NotPSD.
DensityMatrix gellmann_qutrit(const std::array<double, 8>& n);

// Rank-one density matrix |ψ⟩⟨ψ|. Promotion from pure to mixed never happens
// implicitly anywhere in the library; call this when you mean it.
DensityMatrix to_density(const PureState& psi);

// ⟨ψ|M|ψ⟩ or Tr(ρ M).
cplx expectation(const ComplexMatrix& m, const State& s);
cplx expectation(const UnitaryOperator& u, const State& s);

// U - ⟨U⟩ I.
ComplexMatrix deviation(const UnitaryOperator& u, const State& s);

// ⟨δU† δU⟩ with δU = U - ⟨U⟩ I; equals 1 - |⟨U⟩|² and lies in [0, 1].
double variance(const UnitaryOperator& u, const State& s);

// Canonical purification: the column stacking of the principal square root of
// ρ, a unit vector on C^n ⊗ C^n whose reduced state recovers ρ.
PureState purify(const DensityMatrix& rho);

}  // namespace uur
