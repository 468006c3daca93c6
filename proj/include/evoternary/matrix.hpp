#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evoternary/field.hpp"

namespace evoternary {

using Vec = std::vector<FieldElement>;

/// Dense matrix over a fixed field, row-major. Entry (k, i) is row k, column i.
/// All operations are pure; construction fills with zeros and set() populates.
class Matrix {
public:
    Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    static Matrix identity(const FieldSpec& field, std::size_t n);
    static Matrix diagonal(const FieldSpec& field, const Vec& entries);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, FieldElement v);

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const FieldElement& c) const;
    Matrix transpose() const;

    /// M * x for a column vector x.
    Vec apply(const Vec& x) const;

    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    Vec data_;
};

/// Gauss-Jordan elimination result: R = T * M with R in reduced row echelon
/// form and T invertible (the accumulated row operations).
struct RrefResult {
    Matrix R;
    Matrix T;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;  // ascending
};

RrefResult rref(const Matrix& M);

FieldElement determinant(const Matrix& M);  // pre: square

/// Pre: square, invertible; throws InvariantError on a singular input.
Matrix inverse(const Matrix& M);

/// For square M returns an invertible G with M * G * M = M. Deterministic:
/// built from the pivot-column permutation P of M and the row-reduction
/// T of M * P, as G = P * T. Reduces to inverse(M) when M is invertible.
Matrix generalized_inverse(const Matrix& M);

/// Basis of {x : M x = 0}; one vector per free column f, with entry 1 at f,
/// -R[k][f] at the k-th pivot column and 0 elsewhere, in ascending f order.
std::vector<Vec> right_null_basis(const Matrix& M);

/// Basis of {y : y M = 0}: the rows of T below the rank, in row order.
std::vector<Vec> left_null_basis(const Matrix& M);

}  // namespace evoternary
