#include "jchain/riccati.hpp"

namespace jchain {

namespace {

void require_problem_shape(const RiccatiProblem& p) {
    const size_t m = p.f.rows();
    if (m == 0 || !p.f.is_square() || !p.d.is_square() || !p.q.is_square() ||
        p.d.rows() != m || p.q.rows() != m) {
        throw ProblemError("F, D, Q must be square matrices of equal nonzero size");
    }
    if (!p.d.is_hermitian()) {
        throw ProblemError("D is not hermitian");
    }
    if (!p.q.is_hermitian()) {
        throw ProblemError("Q is not hermitian");
    }
}

} // namespace

HamiltonianData hamiltonian(const RiccatiProblem& p) {
    require_problem_shape(p);
    const size_t m = p.size();
    HamiltonianData data;
    data.h = Matrix::vcat(Matrix::hcat(p.f, -p.d), Matrix::hcat(-p.q, -p.f.conj_transpose()));
    if (!data.h.pow(2 * m).is_zero()) {
        throw NilpotencyError("Hamiltonian matrix is not nilpotent: spectrum not {0}");
    }
    data.segre = eigen_structure(data.h, Scalar(0)).segre;
    for (size_t t : data.segre) {
        if (t % 2 != 0) {
            throw NilpotencyError("Hamiltonian matrix has an elementary divisor of odd degree");
        }
        data.half.push_back(t / 2);
    }
    return data;
}

bool is_controllable(const Matrix& f, const Matrix& d) {
    if (!f.is_square() || !d.is_square() || f.rows() != d.rows()) {
        throw Error("controllability test needs square matrices of equal size");
    }
    const size_t m = f.rows();
    Matrix block = d;
    Matrix term = d;
    for (size_t i = 1; i < m; ++i) {
        term = f * term;
        block = Matrix::hcat(block, term);
    }
    return rank(block) == m;
}

bool is_psd(const Matrix& d) {
    if (!d.is_hermitian()) {
        throw ProblemError("positive semidefiniteness requires a hermitian matrix");
    }
    Matrix a = d;
    std::vector<size_t> remaining(a.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
        remaining[i] = i;
    }
    while (!remaining.empty()) {
        size_t pivot_pos = remaining.size();
        for (size_t pos = 0; pos < remaining.size(); ++pos) {
            if (!a(remaining[pos], remaining[pos]).is_zero()) {
                pivot_pos = pos;
                break;
            }
        }
        if (pivot_pos == remaining.size()) {
            // All remaining diagonal entries vanish: PSD iff the whole
            // remaining block vanishes.
            for (size_t i : remaining) {
                for (size_t j : remaining) {
                    if (!a(i, j).is_zero()) {
                        return false;
                    }
                }
            }
            return true;
        }
        const size_t p = remaining[pivot_pos];
        const Scalar piv = a(p, p); // real by hermiticity
        if (piv.re() < 0) {
            return false;
        }
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
        for (size_t i : remaining) {
            for (size_t j : remaining) {
                a(i, j) -= a(i, p) * a(p, j) / piv;
            }
        }
    }
    return true;
}

Subspace riccati_subspace(const HamiltonianData& h) {
    if (h.segre.empty() || h.half.size() != h.segre.size()) {
        throw Error("empty Hamiltonian data");
    }
    const size_t two_m = h.h.rows();
    for (size_t i = 0; i < h.segre.size(); ++i) {
        if (h.segre[i] != 2 * h.half[i]) {
            throw Error("Segre degrees are not even");
        }
    }
    if (!h.h.pow(two_m).is_zero()) {
        throw NilpotencyError("Hamiltonian matrix is not nilpotent");
    }
    Subspace w = Subspace::zero(two_m);
    for (size_t mi : h.half) {
        Matrix power = h.h.pow(mi);
        w = sum(w, intersect(image(power), kernel(power)));
    }
    if (2 * w.dim() != two_m) {
        throw TheoremError("half-truncation subspace has dimension " +
                           std::to_string(w.dim()) + ", expected " + std::to_string(two_m / 2));
    }
    return w;
}

RiccatiSolution solve_are(const RiccatiProblem& p) {
    require_problem_shape(p);
    if (!is_psd(p.d)) {
        throw ProblemError("D is not positive semidefinite");
    }
    if (!is_controllable(p.f, p.d)) {
        throw ProblemError("(F, D) is not controllable");
    }
    HamiltonianData h = hamiltonian(p);
    const size_t m = p.size();

    RiccatiSolution sol;
    sol.w = riccati_subspace(h);
    // Canonical basis vectors become the columns of [Y; Z].
    const Matrix& basis = sol.w.basis();
    sol.y = Matrix(m, m);
    sol.z = Matrix(m, m);
    for (size_t j = 0; j < m; ++j) {
        for (size_t i = 0; i < m; ++i) {
            sol.y(i, j) = basis(j, i);
            sol.z(i, j) = basis(j, m + i);
        }
    }
    Matrix y_inv;
    try {
        y_inv = inverse(sol.y);
    } catch (const Error&) {
        throw TheoremError("Y block of the invariant subspace basis is singular");
    }
    sol.x = sol.z * y_inv;
    if (!sol.x.is_hermitian()) {
        throw TheoremError("computed Riccati solution is not hermitian");
    }
    sol.residual = residual(p, sol.x);
    if (!sol.residual.is_zero()) {
        throw TheoremError("computed Riccati solution has nonzero residual");
    }
    return sol;
}

Matrix residual(const RiccatiProblem& p, const Matrix& x) {
    if (x.rows() != p.size() || !x.is_square()) {
        throw Error("solution matrix has mismatched shape");
    }
    return p.q + p.f.conj_transpose() * x + x * p.f - x * p.d * x;
}

} // namespace jchain
