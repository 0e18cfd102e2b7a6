#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "khov/errors.hpp"

namespace khov {

using Int = std::int64_t;

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "matrix sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using BigMatrix = Matrix<mpz_class>;

IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
BigMatrix to_big(const IntMatrix& m);

// Column-compressed integer matrix; entries of each column sorted by row.
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Int>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix from_dense(const IntMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_.size(); }
  const std::vector<Entry>& col(std::size_t c) const { return cols_[c]; }
  std::vector<Entry>& col(std::size_t c) { return cols_[c]; }

  // Adds v at (r, c); columns must be finalized with normalize() afterwards.
  void add(std::size_t r, std::size_t c, Int v) { cols_[c].emplace_back(static_cast<std::uint32_t>(r), v); }
  void normalize();

  std::size_t nonzeros() const;
  bool is_zero() const;
  IntMatrix to_dense() const;
  SparseMatrix scaled(Int s) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> cols_;
};

}  // namespace khov
