#pragma once

#include <vector>

#include "ncq/scalar.hpp"

namespace ncq {

// Dense matrix over Scalar, row major. Entries are exact; elimination uses
// first-nonzero pivoting (no thresholds, arithmetic is exact).
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    // true when proportional to the identity (nonzero diagonal, zero elsewhere)
    bool is_scalar_multiple_of_identity() const;
    bool is_diagonal() const;

    Matrix pow(unsigned long k) const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

// In-place reduced row echelon form; returns pivot column indices in order.
std::vector<size_t> rref(Matrix& m);

size_t rank(Matrix m);

// Basis of the right nullspace, reduced-echelon representatives (each basis
// vector has entry 1 at its free column).
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

Scalar det(Matrix m);

}  // namespace ncq
