#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quot/field.hpp"

namespace quot {

/// Column vector, entries over one field.
using Vec = std::vector<Scalar>;

/// Dense row-major matrix over Q or F_p. All entries share the field tag.
class Matrix {
public:
    /// rows x cols zero matrix.
    Matrix(std::size_t rows, std::size_t cols, const Field& field);

    static Matrix identity(std::size_t n, const Field& field);
    /// Builds from row lists; all rows must have equal length and matching field.
    static Matrix from_rows(const Field& field, const std::vector<Vec>& rows);
    /// Builds from column vectors (rows = length of each column).
    static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Scalar& value);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    /// Sum of diagonal entries; square matrices only.
    Scalar trace() const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    /// Equal shape, field and entries. Matrices over different fields compare unequal.
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// A*B - B*A.
    static Matrix commutator(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> entries_;
};

struct EchelonForm {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots; // pivot column indices, increasing
};

/// Reduced row echelon form with deterministic pivoting: for each column left
/// to right, the pivot is the first not-yet-used row with a nonzero entry.
EchelonForm rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : Mx = 0}; size is cols - rank. One vector per free column,
/// ordered by free column index, with a 1 in that coordinate.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Some x with Mx = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// [a | b] side by side (equal row counts).
Matrix hstack(const Matrix& a, const Matrix& b);
/// a on top of b (equal column counts).
Matrix vstack(const Matrix& a, const Matrix& b);

Vec zero_vec(std::size_t len, const Field& field);
Vec unit_vec(std::size_t len, std::size_t k, const Field& field);
Vec mat_vec(const Matrix& m, const Vec& x);
Scalar dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& x);
bool is_zero(const Vec& x);

} // namespace quot
