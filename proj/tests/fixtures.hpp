#pragma once

// Hand-written fixture matrices, frozen independently of the instance
// generator.

#include <jchain/matrix.hpp>
#include <jchain/subspace.hpp>

namespace fixtures {

/// diag(N2, N3): two nilpotent shift blocks, Segre characteristic (2, 3).
inline jchain::Matrix two_block_5x5() {
    return jchain::Matrix{{0, 1, 0, 0, 0},
                          {0, 0, 0, 0, 0},
                          {0, 0, 0, 1, 0},
                          {0, 0, 0, 0, 1},
                          {0, 0, 0, 0, 0}};
}

/// The 3x3 upper shift block.
inline jchain::Matrix shift_3x3() {
    return jchain::Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
}

/// Span of unit vectors with the given zero-based indices.
inline jchain::Subspace unit_span(size_t ambient, const std::vector<size_t>& indices) {
    std::vector<jchain::Vector> gens;
    for (size_t i : indices) {
        gens.push_back(jchain::unit_vector(ambient, i));
    }
    return jchain::Subspace::span(ambient, gens);
}

inline jchain::Vector e(size_t ambient, size_t one_based) {
    return jchain::unit_vector(ambient, one_based - 1);
}

} // namespace fixtures
