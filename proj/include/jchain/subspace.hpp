#pragma once

#include <vector>

#include "jchain/matrix.hpp"

namespace jchain {

/// Incremental row-space accumulator kept in reduced echelon form.
/// Insert vectors one by one; membership and rank queries are exact.
class SpanBuilder {
public:
    explicit SpanBuilder(size_t ambient) : ambient_(ambient) {}

    size_t ambient() const { return ambient_; }
    size_t rank() const { return rows_.size(); }

    /// Adds v to the span. Returns true iff the rank grew.
    bool insert(Vector v);
    bool contains(const Vector& v) const;

    /// The accumulated rows, sorted by pivot column (a canonical basis).
    const std::vector<Vector>& rows() const { return rows_; }

private:
    // Reduces v against the current rows; the remainder is zero iff v is in
    // the span.
    Vector reduce(Vector v) const;

    size_t ambient_;
    std::vector<Vector> rows_;    // reduced, pivots normalized to 1
    std::vector<size_t> pivots_;  // strictly increasing
};

/// A subspace of the n-dimensional coordinate space in its unique canonical
/// basis representation: the reduced echelon form of the matrix whose rows
/// span the space, pivots scaled to 1, zero rows dropped. Structural
/// equality of representations is equality of subspaces.
class Subspace {
public:
    /// Default: the zero subspace of the zero-dimensional space.
    Subspace() : Subspace(0) {}

    /// The zero subspace of dimension-n ambient space.
    static Subspace zero(size_t ambient) { return Subspace(ambient); }
    /// The full ambient space.
    static Subspace full(size_t ambient);
    /// Canonical span of arbitrary generating vectors.
    static Subspace span(size_t ambient, const std::vector<Vector>& generators);
    /// Canonical span of the rows of a matrix.
    static Subspace row_space(const Matrix& m);

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }

    /// dim x ambient matrix whose rows are the canonical basis.
    const Matrix& basis() const { return basis_; }
    std::vector<Vector> basis_vectors() const;

    bool contains(const Vector& x) const;
    /// Subset test: every basis vector of other lies in this space.
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const = default;

private:
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    size_t ambient_;
    Matrix basis_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

Subspace sum(const Subspace& u, const Subspace& v);
/// Zassenhaus block echelon: one pass yields sum and intersection together.
Subspace intersect(const Subspace& u, const Subspace& v);

/// Sum of the parts, verified to be direct (dimensions add up).
/// Throws Error otherwise.
Subspace direct_sum(const std::vector<Subspace>& parts);

std::ostream& operator<<(std::ostream& os, const Subspace& s);

} // namespace jchain
