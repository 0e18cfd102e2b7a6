#include "khov/matrix.hpp"

#include <algorithm>

namespace khov {

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Int x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return out;
}

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = static_cast<long>(m(i, j));
  return out;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) s.add(i, j, m(i, j));
  return s;
}

void SparseMatrix::normalize() {
  for (auto& c : cols_) {
    std::sort(c.begin(), c.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < c.size();) {
      std::uint32_t row = c[r].first;
      Int sum = 0;
      for (; r < c.size() && c[r].first == row; ++r) sum += c[r].second;
      if (sum != 0) c[w++] = {row, sum};
    }
    c.resize(w);
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : cols_)
    for (const auto& e : c)
      if (e.second != 0) return false;
  return true;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows_, cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [r, v] : cols_[j]) m(r, j) += v;
  return m;
}

SparseMatrix SparseMatrix::scaled(Int s) const {
  SparseMatrix out = *this;
  if (s == 0) {
    for (auto& c : out.cols_) c.clear();
    return out;
  }
  for (auto& c : out.cols_)
    for (auto& e : c) e.second *= s;
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "sparse product");
  SparseMatrix out(a.rows(), b.cols());
  std::vector<Int> acc(a.rows(), 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    touched.clear();
    for (const auto& [k, bv] : b.col(j))
      for (const auto& [i, av] : a.col(k)) {
        if (acc[i] == 0) touched.push_back(i);
        acc[i] += av * bv;
      }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (auto i : touched) {
      if (acc[i] != 0) out.add(i, j, acc[i]);
      acc[i] = 0;
    }
  }
  return out;
}

}  // namespace khov
