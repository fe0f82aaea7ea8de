#pragma once

#include "jchain/riccati.hpp"

namespace jchain {

struct InstanceSpec {
    std::vector<size_t> segre;
    uint64_t seed = 0;
    int entry_bound = 3; // magnitude limit for random integer entries
};

/// Block diagonal of upper-shift blocks of sizes t_1, ..., t_k (t ascending,
/// entries >= 1).
Matrix nilpotent_from_segre(const std::vector<size_t>& t);

struct Conjugated {
    Matrix b; // S A S^{-1}
    Matrix s; // product of integer elementary operations, det +-1
};

/// Seeded exact similarity scrambling; the structure of A is preserved.
Conjugated conjugate_random(const Matrix& a, uint64_t seed, int entry_bound = 3);

struct PlantedRiccati {
    RiccatiProblem problem;
    Matrix x0; // the planted hermitian solution
};

/// Seeded Riccati problem with a nilpotent Hamiltonian and a planted exact
/// hermitian solution: X0 and a strictly upper triangular closed loop A_c
/// are drawn, D = L L*, F = A_c + D X0 and Q closes the equation. Rejection
/// sampling enforces controllability. Throws Error when the sampling budget
/// is exhausted.
PlantedRiccati random_riccati_nilpotent(size_t m, uint64_t seed, int entry_bound = 3);

} // namespace jchain
