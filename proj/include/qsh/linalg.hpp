#pragma once

// Exact linear algebra over Z[v^+-1, s^+-1] and its fraction field.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qsh/fraction.hpp"

namespace qsh {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }
  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using ScalarMatrix = Matrix<Scalar>;

// Rank by fraction-free (Bareiss) elimination with exact division.
std::size_t rank(PolyMatrix m);
std::size_t rank(const ScalarMatrix& m);

LaurentPoly determinant(PolyMatrix m);
Scalar determinant(const ScalarMatrix& m);

// Incremental row echelon form over the fraction field, rows kept primitive
// in Z[v^+-1, s^+-1].
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}
  // Returns true when the row enlarged the span.
  bool insert(std::vector<LaurentPoly> row);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t cols_;
  std::vector<std::pair<std::size_t, std::vector<LaurentPoly>>> rows_;  // sorted by pivot
};

struct SolveResult {
  enum class Status { unique, inconsistent, underdetermined };
  Status status = Status::inconsistent;
  std::size_t rank = 0;
  std::vector<Scalar> x;  // filled when unique
};

// Solves A x = b exactly (A may be rectangular).
SolveResult solve(const ScalarMatrix& a, const std::vector<Scalar>& b);

// Throws NonInvertibleError if singular.
ScalarMatrix inverse(const ScalarMatrix& m);

}  // namespace qsh
