#pragma once

#include <cstdint>
#include <vector>

#include "jchain/subspace.hpp"

namespace jchain {

/// Eigenvalue structure of a matrix at one eigenvalue: the ascending Segre
/// characteristic (Jordan block sizes) and its conjugate Weyr characteristic.
struct EigenStructure {
    Scalar lambda;
    size_t n = 0;                // ambient dimension
    std::vector<size_t> segre;   // t_1 <= ... <= t_k
    std::vector<size_t> weyr;    // w_j = dim Ker N^j - dim Ker N^{j-1}

    size_t chains() const { return segre.size(); }
    size_t eigenspace_dim() const;
};

/// Tuple (u_1, ..., u_k), aligned with the ascending Segre characteristic,
/// whose cyclic subspaces decompose the generalized eigenspace at 0 as a
/// direct sum.
struct GeneratorTuple {
    size_t ambient = 0;
    std::vector<Vector> vectors;

    size_t size() const { return vectors.size(); }
};

/// Chain i holds u_i, N u_i, ..., N^{t_i - 1} u_i.
struct JordanBasis {
    std::vector<std::vector<Vector>> chains;
};

/// N = A - lambda * I.
Matrix shift(const Matrix& a, const Scalar& lambda);

/// Ker (A - lambda I)^n; zero subspace when lambda is not an eigenvalue.
Subspace generalized_eigenspace(const Matrix& a, const Scalar& lambda);

/// Throws EigenvalueError when lambda is not an eigenvalue of a.
EigenStructure eigen_structure(const Matrix& a, const Scalar& lambda);

/// Largest q with v in Im N^q. Requires v != 0 and v in E_0(N).
size_t height(const Matrix& n, const Vector& v);

/// Smallest p with N^p v = 0. Requires v != 0 and v in E_0(N).
size_t exponent(const Matrix& n, const Vector& v);

/// span{v, Nv, N^2 v, ...}; the zero vector yields the zero subspace.
Subspace cyclic_subspace(const Matrix& n, const Vector& v);

/// Deterministic generator tuple of E_0(N) via top-down filtration of the
/// kernel chain, preferring canonical kernel-basis representatives.
GeneratorTuple generator_tuple(const Matrix& n);

/// True iff e(u_i) = t_i for all i and the cyclic subspaces fill E_0(N) as
/// a direct sum.
bool verify_generator_tuple(const Matrix& n, const GeneratorTuple& u);

/// Seeded random valid generator tuple: perturbs the deterministic tuple by
/// small-integer combinations of Jordan basis vectors of compatible
/// exponent, rejection-sampling until valid. Deterministic per seed.
GeneratorTuple random_generator_tuple(const Matrix& n, uint64_t seed);

/// All chain vectors of a valid tuple; throws Error on an invalid tuple.
JordanBasis jordan_basis(const Matrix& n, const GeneratorTuple& u);

} // namespace jchain
