#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cobalt/scalar.hpp"

namespace cobalt {

// Dense matrix of exact cyclotomic scalars. Row-major storage; all
// operations are exact. A 0x0 matrix is the identity of the zero space.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(size_t rows, size_t cols, std::vector<Scalar> entries);

    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Scalar>& entries() const { return a_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;

    // Kronecker product; the left factor owns the most significant index.
    Matrix tensor(const Matrix& o) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_identity() const;
    bool is_zero() const;

    // If the matrix is s * identity, reports s.
    std::optional<Scalar> scalar_multiple_of_identity() const;

    Scalar determinant() const;                 // square only
    std::optional<Matrix> inverse() const;      // nullopt when singular

    std::string to_string() const;

private:
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

// Basis of the right null space {x : m x = 0}, as columns gathered into a
// matrix (cols() == nullity). Deterministic: reduced column echelon order.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

}  // namespace cobalt
