#include "jchain/matrix.hpp"

#include <ostream>

namespace jchain {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) {
            throw Error("ragged rows in matrix literal");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw Error("ragged rows in matrix construction");
        }
        for (size_t j = 0; j < m.cols_; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Vector Matrix::row(size_t i) const {
    Vector v(cols_);
    for (size_t j = 0; j < cols_; ++j) {
        v[j] = (*this)(i, j);
    }
    return v;
}

Vector Matrix::col(size_t j) const {
    Vector v(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        v[i] = (*this)(i, j);
    }
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

Matrix Matrix::conj_transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j).conj();
        }
    }
    return t;
}

Matrix Matrix::pow(size_t k) const {
    if (!is_square()) {
        throw Error("pow requires a square matrix");
    }
    Matrix acc = identity(rows_);
    for (size_t i = 0; i < k; ++i) {
        acc = acc * (*this);
    }
    return acc;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Matrix::is_hermitian() const {
    if (!is_square()) {
        return false;
    }
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = i; j < cols_; ++j) {
            if ((*this)(i, j) != (*this)(j, i).conj()) {
                return false;
            }
        }
    }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw Error("matrix dimension mismatch in addition");
    }
    for (size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += o.entries_[i];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw Error("matrix dimension mismatch in subtraction");
    }
    for (size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= o.entries_[i];
    }
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw Error("matrix dimension mismatch in multiplication");
    }
    Matrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (size_t j = 0; j < b.cols_; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

Matrix operator*(const Scalar& s, Matrix a) {
    for (auto& e : a.entries_) {
        e *= s;
    }
    return a;
}

Matrix Matrix::operator-() const { return Scalar(-1) * (*this); }

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) {
        throw Error("matrix-vector dimension mismatch");
    }
    Vector out(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        Scalar acc;
        for (size_t j = 0; j < cols_; ++j) {
            acc += (*this)(i, j) * v[j];
        }
        out[i] = std::move(acc);
    }
    return out;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) {
        throw Error("row count mismatch in hcat");
    }
    Matrix m(a.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t j = 0; j < a.cols_; ++j) {
            m(i, j) = a(i, j);
        }
        for (size_t j = 0; j < b.cols_; ++j) {
            m(i, a.cols_ + j) = b(i, j);
        }
    }
    return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) {
        throw Error("column count mismatch in vcat");
    }
    Matrix m(a.rows_ + b.rows_, a.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t j = 0; j < a.cols_; ++j) {
            m(i, j) = a(i, j);
        }
    }
    for (size_t i = 0; i < b.rows_; ++i) {
        for (size_t j = 0; j < b.cols_; ++j) {
            m(a.rows_ + i, j) = b(i, j);
        }
    }
    return m;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t r1, size_t c1) const {
    if (r1 < r0 || c1 < c0 || r1 > rows_ || c1 > cols_) {
        throw Error("invalid block bounds");
    }
    Matrix m(r1 - r0, c1 - c0);
    for (size_t i = r0; i < r1; ++i) {
        for (size_t j = c0; j < c1; ++j) {
            m(i - r0, j - c0) = (*this)(i, j);
        }
    }
    return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (size_t j = 0; j < m.cols(); ++j) {
            os << (j == 0 ? "" : " ") << m(i, j);
        }
        os << (i + 1 == m.rows() ? "]" : "\n");
    }
    return os;
}

Vector unit_vector(size_t n, size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

Vector zero_vector(size_t n) { return Vector(n); }

bool is_zero_vector(const Vector& v) {
    for (const auto& e : v) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

Vector vec_add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw Error("vector dimension mismatch");
    }
    Vector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

Vector vec_sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw Error("vector dimension mismatch");
    }
    Vector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

Vector vec_scale(const Scalar& s, const Vector& v) {
    Vector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = s * v[i];
    }
    return out;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.matrix = m;
    Matrix& a = res.matrix;
    const size_t rows = a.rows();
    const size_t cols = a.cols();
    size_t lead = 0;
    for (size_t col = 0; col < cols && lead < rows; ++col) {
        // Leftmost pivot: topmost nonzero entry in this column at or
        // below the current row.
        size_t pivot = lead;
        while (pivot < rows && a(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != lead) {
            for (size_t j = 0; j < cols; ++j) {
                std::swap(a(pivot, j), a(lead, j));
            }
        }
        Scalar inv = Scalar(1) / a(lead, col);
        for (size_t j = col; j < cols; ++j) {
            a(lead, j) *= inv;
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == lead || a(i, col).is_zero()) {
                continue;
            }
            Scalar factor = a(i, col);
            for (size_t j = col; j < cols; ++j) {
                a(i, j) -= factor * a(lead, j);
            }
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = res.pivots.size();
    return res;
}

size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) {
        throw Error("inverse requires a square matrix");
    }
    const size_t n = m.rows();
    RrefResult r = rref(Matrix::hcat(m, Matrix::identity(n)));
    if (r.rank < n || r.pivots[n - 1] != n - 1) {
        throw Error("matrix is singular");
    }
    return r.matrix.block(0, n, n, 2 * n);
}

} // namespace jchain
