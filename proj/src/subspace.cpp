#include "jchain/subspace.hpp"

#include <algorithm>
#include <ostream>

namespace jchain {

Vector SpanBuilder::reduce(Vector v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (!c.is_zero()) {
            Scalar factor = c; // pivot entry is 1
            for (size_t j = pivots_[r]; j < ambient_; ++j) {
                v[j] -= factor * rows_[r][j];
            }
        }
    }
    return v;
}

bool SpanBuilder::insert(Vector v) {
    if (v.size() != ambient_) {
        throw Error("vector/ambient dimension mismatch");
    }
    v = reduce(std::move(v));
    size_t pivot = 0;
    while (pivot < ambient_ && v[pivot].is_zero()) {
        ++pivot;
    }
    if (pivot == ambient_) {
        return false;
    }
    Scalar inv = Scalar(1) / v[pivot];
    for (size_t j = pivot; j < ambient_; ++j) {
        v[j] *= inv;
    }
    // Back-substitute into existing rows so the accumulator stays fully
    // reduced.
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = rows_[r][pivot];
        if (!c.is_zero()) {
            Scalar factor = c;
            for (size_t j = pivot; j < ambient_; ++j) {
                rows_[r][j] -= factor * v[j];
            }
        }
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t idx = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

bool SpanBuilder::contains(const Vector& v) const {
    if (v.size() != ambient_) {
        throw Error("vector/ambient dimension mismatch");
    }
    return is_zero_vector(reduce(v));
}

Subspace Subspace::full(size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient);
    return s;
}

Subspace Subspace::span(size_t ambient, const std::vector<Vector>& generators) {
    SpanBuilder b(ambient);
    for (const auto& g : generators) {
        b.insert(g);
    }
    Subspace s(ambient);
    s.basis_ = Matrix::from_rows(b.rows());
    if (s.basis_.rows() == 0) {
        s.basis_ = Matrix(0, ambient);
    }
    return s;
}

Subspace Subspace::row_space(const Matrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        rows.push_back(m.row(i));
    }
    return span(m.cols(), rows);
}

std::vector<Vector> Subspace::basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (size_t i = 0; i < dim(); ++i) {
        out.push_back(basis_.row(i));
    }
    return out;
}

bool Subspace::contains(const Vector& x) const {
    if (x.size() != ambient_) {
        throw Error("vector/ambient dimension mismatch");
    }
    // The basis is in reduced echelon form; reduce and test for zero.
    Vector v = x;
    for (size_t r = 0; r < basis_.rows(); ++r) {
        size_t p = 0;
        while (p < ambient_ && basis_(r, p).is_zero()) {
            ++p;
        }
        if (!v[p].is_zero()) {
            Scalar factor = v[p];
            for (size_t j = p; j < ambient_; ++j) {
                v[j] -= factor * basis_(r, j);
            }
        }
    }
    return is_zero_vector(v);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) {
        throw Error("ambient dimension mismatch");
    }
    for (size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.basis_.row(i))) {
            return false;
        }
    }
    return true;
}

Subspace kernel(const Matrix& m) {
    const size_t n = m.cols();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t p : r.pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vector> gens;
    for (size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) {
            continue;
        }
        // Free column j: x_j = 1, pivot variables read off the RREF.
        Vector v(n);
        v[j] = 1;
        for (size_t i = 0; i < r.rank; ++i) {
            v[r.pivots[i]] = -r.matrix(i, j);
        }
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) {
        throw Error("ambient dimension mismatch in sum");
    }
    SpanBuilder b(u.ambient());
    for (size_t i = 0; i < u.dim(); ++i) {
        b.insert(u.basis().row(i));
    }
    for (size_t i = 0; i < v.dim(); ++i) {
        b.insert(v.basis().row(i));
    }
    return Subspace::span(u.ambient(), b.rows());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) {
        throw Error("ambient dimension mismatch in intersection");
    }
    const size_t n = u.ambient();
    // Zassenhaus: echelonize rows [u|u] and [v|0]; rows whose left half
    // vanished carry an intersection basis in their right half.
    Matrix block(u.dim() + v.dim(), 2 * n);
    for (size_t i = 0; i < u.dim(); ++i) {
        for (size_t j = 0; j < n; ++j) {
            block(i, j) = u.basis()(i, j);
            block(i, n + j) = u.basis()(i, j);
        }
    }
    for (size_t i = 0; i < v.dim(); ++i) {
        for (size_t j = 0; j < n; ++j) {
            block(u.dim() + i, j) = v.basis()(i, j);
        }
    }
    RrefResult r = rref(block);
    std::vector<Vector> gens;
    for (size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] >= n) {
            Vector right(n);
            for (size_t j = 0; j < n; ++j) {
                right[j] = r.matrix(i, n + j);
            }
            gens.push_back(std::move(right));
        }
    }
    return Subspace::span(n, gens);
}

Subspace direct_sum(const std::vector<Subspace>& parts) {
    if (parts.empty()) {
        throw Error("direct_sum of no parts");
    }
    const size_t n = parts.front().ambient();
    size_t total = 0;
    SpanBuilder b(n);
    for (const auto& p : parts) {
        if (p.ambient() != n) {
            throw Error("ambient dimension mismatch in direct_sum");
        }
        total += p.dim();
        for (size_t i = 0; i < p.dim(); ++i) {
            b.insert(p.basis().row(i));
        }
    }
    if (b.rank() != total) {
        throw Error("direct_sum of dependent summands");
    }
    return Subspace::span(n, b.rows());
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
    os << "span<" << s.dim() << " of " << s.ambient() << ">";
    if (s.dim() > 0) {
        os << "\n" << s.basis();
    }
    return os;
}

} // namespace jchain
