#pragma once

#include "jchain/truncation.hpp"

namespace jchain {

/// Data (F, D, Q) of the equation Q + F*X + XF - XDX = 0 with D, Q
/// hermitian, D positive semidefinite and (F, D) controllable.
struct RiccatiProblem {
    Matrix f;
    Matrix d;
    Matrix q;

    size_t size() const { return f.rows(); }
};

struct HamiltonianData {
    Matrix h;                  // [[F, -D], [-Q, -F*]], nilpotent
    std::vector<size_t> segre; // even degrees 2m_1, ..., 2m_k
    std::vector<size_t> half;  // m_1, ..., m_k
};

struct RiccatiSolution {
    Subspace w;      // the invariant subspace, dim m
    Matrix y;        // top block of the stacked basis
    Matrix z;        // bottom block
    Matrix x;        // Z Y^{-1}, hermitian
    Matrix residual; // exactly zero
};

/// Assembles the Hamiltonian matrix and its Segre characteristic at 0.
/// Throws ProblemError on shape/hermiticity violations, NilpotencyError when
/// the spectrum is not {0} or a divisor degree is odd.
HamiltonianData hamiltonian(const RiccatiProblem& p);

/// rank [D | FD | ... | F^{m-1} D] = m.
bool is_controllable(const Matrix& f, const Matrix& d);

/// Exact positive-semidefiniteness decision by hermitian elimination with
/// diagonal pivoting. Throws ProblemError on non-hermitian input.
bool is_psd(const Matrix& d);

/// W = (Im H^{m_1} cap Ker H^{m_1}) + ... + (Im H^{m_k} cap Ker H^{m_k});
/// dimension m under the half-truncation hypotheses.
Subspace riccati_subspace(const HamiltonianData& h);

/// Stacks a basis of W as columns of [Y; Z] and returns X = Z Y^{-1} with
/// its (exactly zero) residual. Throws ProblemError on invariant violations
/// and TheoremError on internal inconsistencies (singular Y, nonzero
/// residual, non-hermitian X).
RiccatiSolution solve_are(const RiccatiProblem& p);

/// Q + F*X + XF - XDX, evaluated exactly.
Matrix residual(const RiccatiProblem& p, const Matrix& x);

} // namespace jchain
