#include "cobalt/matrix.hpp"

#include <sstream>

#include "cobalt/errors.hpp"

namespace cobalt {

Matrix::Matrix(size_t rows, size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw Error("matrix entry count does not match shape");
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& v = at(i, k);
            if (v.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& w = o.at(k, j);
                if (w.is_zero()) continue;
                out.at(i, j) += v * w;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::tensor(const Matrix& o) const {
    Matrix out(rows_ * o.rows_, cols_ * o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (size_t k = 0; k < o.rows_; ++k)
                for (size_t l = 0; l < o.cols_; ++l)
                    out.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
        }
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

std::optional<Scalar> Matrix::scalar_multiple_of_identity() const {
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    const Scalar& s = at(0, 0);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j ? at(i, j) != s : !at(i, j).is_zero()) return std::nullopt;
        }
    return s;
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    size_t n = rows_;
    Matrix work = *this;
    Scalar det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Scalar(0);
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            det = -det;
        }
        const Scalar p = work.at(col, col);
        det *= p;
        Scalar pinv = p.inverse();
        for (size_t i = col + 1; i < n; ++i) {
            if (work.at(i, col).is_zero()) continue;
            Scalar f = work.at(i, col) * pinv;
            for (size_t j = col; j < n; ++j) work.at(i, j) -= f * work.at(col, j);
        }
    }
    return det;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    size_t n = rows_;
    Matrix work = *this;
    Matrix inv = Matrix::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Scalar pinv = work.at(col, col).inverse();
        for (size_t j = 0; j < n; ++j) {
            work.at(col, j) *= pinv;
            inv.at(col, j) *= pinv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || work.at(i, col).is_zero()) continue;
            Scalar f = work.at(i, col);
            for (size_t j = 0; j < n; ++j) {
                work.at(i, j) -= f * work.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
    }
    os << "]";
    return os.str();
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
    size_t rows = m.rows(), cols = m.cols();
    Matrix work = m;
    std::vector<long> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (size_t j = 0; j < cols; ++j) std::swap(work.at(pivot, j), work.at(rank, j));
        Scalar pinv = work.at(rank, col).inverse();
        for (size_t j = 0; j < cols; ++j) work.at(rank, j) *= pinv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || work.at(i, col).is_zero()) continue;
            Scalar f = work.at(i, col);
            for (size_t j = 0; j < cols; ++j) work.at(i, j) -= f * work.at(rank, j);
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<std::vector<Scalar>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<Scalar> vec(cols, Scalar(0));
        vec[free_col] = Scalar(1);
        for (size_t col = 0; col < cols; ++col) {
            long pr = pivot_of_col[col];
            if (pr >= 0) vec[col] = -work.at(static_cast<size_t>(pr), free_col);
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

}  // namespace cobalt
