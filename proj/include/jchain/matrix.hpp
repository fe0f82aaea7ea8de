#pragma once

#include <initializer_list>
#include <vector>

#include "jchain/scalar.hpp"

namespace jchain {

using Vector = std::vector<Scalar>;

/// Dense rectangular matrix of exact scalars, row-major.
class Matrix {
public:
    Matrix() = default;
    /// rows x cols zero matrix.
    Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> init);

    static Matrix identity(size_t n);
    static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }
    /// Matrix whose rows are the given vectors (all of equal length).
    static Matrix from_rows(const std::vector<Vector>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    Vector row(size_t i) const;
    Vector col(size_t j) const;

    Matrix transpose() const;
    /// Conjugate transpose A*.
    Matrix conj_transpose() const;
    /// A^k by repeated multiplication; pow(A, 0) = identity. Square only.
    Matrix pow(size_t k) const;

    bool is_zero() const;
    bool is_hermitian() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, Matrix a);
    Matrix operator-() const;

    bool operator==(const Matrix& o) const = default;

    /// Matrix-vector product A*v.
    Vector apply(const Vector& v) const;

    /// [A | B] side by side.
    static Matrix hcat(const Matrix& a, const Matrix& b);
    /// [A ; B] stacked.
    static Matrix vcat(const Matrix& a, const Matrix& b);
    /// Rows [r0, r1) x cols [c0, c1).
    Matrix block(size_t r0, size_t c0, size_t r1, size_t c1) const;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Small vector helpers used throughout the chain computations.
Vector unit_vector(size_t n, size_t i);
Vector zero_vector(size_t n);
bool is_zero_vector(const Vector& v);
Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
Vector vec_scale(const Scalar& s, const Vector& v);

struct RrefResult {
    Matrix matrix;               // the reduced row echelon form
    std::vector<size_t> pivots;  // pivot column per nonzero row
    size_t rank = 0;
};

/// Reduced row echelon form with leftmost-pivot selection and full
/// reduction; deterministic and exact.
RrefResult rref(const Matrix& m);

size_t rank(const Matrix& m);

/// Exact inverse; throws Error if the matrix is singular.
Matrix inverse(const Matrix& m);

} // namespace jchain
