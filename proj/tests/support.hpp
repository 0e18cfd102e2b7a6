// Test-side oracles. They share nothing with the library beyond the Diagram
// accessors and plain matrix storage.
#pragma once

#include <gmpxx.h>

#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "khov/complex.hpp"
#include "khov/corpus.hpp"
#include "khov/diagram.hpp"
#include "khov/matrix.hpp"

namespace testing {

// Circles of the smoothing I, counted by walking: each arc has two ends, and a
// smoothing glues arc ends pairwise at every crossing.
inline int walk_circles(const khov::Diagram& d, khov::Vertex I) {
  // end (label, which occurrence) -> partner end across the crossing and along the arc
  std::map<std::pair<int, int>, std::pair<int, int>> across;
  std::map<int, int> seen_count;
  std::map<std::pair<int, int>, std::pair<int, int>> slot_end;  // (crossing,pos) -> end
  for (int c = 0; c < d.n(); ++c)
    for (int p = 0; p < 4; ++p) {
      const int l = d.crossings()[c][p];
      slot_end[{c, p}] = {l, seen_count[l]++};
    }
  for (int c = 0; c < d.n(); ++c) {
    const bool one = (I >> c) & 1u;
    const std::vector<std::pair<int, int>> pairs =
        one ? std::vector<std::pair<int, int>>{{0, 3}, {1, 2}} : std::vector<std::pair<int, int>>{{0, 1}, {2, 3}};
    for (const auto& [a, b] : pairs) {
      across[slot_end[{c, a}]] = slot_end[{c, b}];
      across[slot_end[{c, b}]] = slot_end[{c, a}];
    }
  }
  std::set<std::pair<int, int>> visited;
  int circles = 0;
  for (const auto& [end, partner] : across) {
    if (visited.count(end)) continue;
    ++circles;
    auto cur = end;
    while (!visited.count(cur)) {
      visited.insert(cur);
      const std::pair<int, int> other{cur.first, 1 - cur.second};
      visited.insert(other);
      cur = across.at(other);
    }
  }
  return circles + d.free_loops();
}

// Fraction-free elimination: rank over Q.
inline std::size_t rank_q(khov::BigMatrix m) {
  std::size_t rank = 0;
  const std::size_t R = m.rows(), C = m.cols();
  mpz_class prev = 1;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t piv = rank;
    while (piv < R && m(piv, c) == 0) ++piv;
    if (piv == R) continue;
    for (std::size_t j = 0; j < C; ++j) std::swap(m(rank, j), m(piv, j));
    for (std::size_t i = rank + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

inline std::size_t rank_mod(const khov::BigMatrix& src, long prime) {
  std::vector<std::vector<long>> m(src.rows(), std::vector<long>(src.cols()));
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), src(i, j).get_mpz_t(), prime);
      m[i][j] = r.get_si();
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < src.cols() && rank < src.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < src.rows() && m[piv][c] == 0) ++piv;
    if (piv == src.rows()) continue;
    std::swap(m[rank], m[piv]);
    long inv = 1;
    for (long t = 1; t < prime; ++t)
      if (m[rank][c] * t % prime == 1) inv = t;
    for (auto& v : m[rank]) v = v * inv % prime;
    for (std::size_t i = 0; i < src.rows(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const long f = m[i][c];
      for (std::size_t j = 0; j < src.cols(); ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % prime + prime) % prime;
    }
    ++rank;
  }
  return rank;
}

// Bareiss determinant of a square matrix.
inline mpz_class det(khov::BigMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline khov::BigMatrix dense_block(const khov::SparseMatrix& s) {
  khov::BigMatrix m(s.rows(), s.cols());
  for (std::size_t c = 0; c < s.cols(); ++c)
    for (const auto& [r, v] : s.col(c)) m(r, c) = static_cast<long>(v);
  return m;
}

// Restriction of d[t] to quantum degree q.
inline khov::BigMatrix q_block(const khov::BigradedComplex& c, std::size_t t, int q) {
  std::vector<std::size_t> cols, rows;
  for (std::size_t j = 0; j < c.q[t].size(); ++j)
    if (c.q[t][j] == q) cols.push_back(j);
  for (std::size_t i = 0; i < c.q[t + 1].size(); ++i)
    if (c.q[t + 1][i] == q) rows.push_back(i);
  const khov::BigMatrix full = dense_block(c.d[t]);
  khov::BigMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = full(rows[i], cols[j]);
  return m;
}

// Random braid-closure diagrams with n crossings or fewer.
inline std::vector<khov::Diagram> random_diagrams(int count, int max_crossings, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<khov::Diagram> out;
  while (static_cast<int>(out.size()) < count) {
    const int strands = std::uniform_int_distribution<int>(2, 4)(rng);
    const int len = std::uniform_int_distribution<int>(1, max_crossings)(rng);
    std::vector<int> word;
    for (int i = 0; i < len; ++i) {
      const int g = std::uniform_int_distribution<int>(1, strands - 1)(rng);
      word.push_back(std::bernoulli_distribution(0.5)(rng) ? g : -g);
    }
    out.push_back(khov::braid_closure(strands, word));
  }
  return out;
}

inline const std::vector<khov::RingParams>& all_presets() {
  static const std::vector<khov::RingParams> p{{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, -1}};
  return p;
}

}  // namespace testing
