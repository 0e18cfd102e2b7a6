#include "khov/algebra.hpp"

#include <algorithm>
#include <bit>

#include "khov/errors.hpp"

namespace khov {

bool RingParams::valid() const noexcept {
  auto unit = [](int v) { return v == 1 || v == -1; };
  return unit(x) && unit(y) && unit(z);
}

IntMatrix mul(RingParams p) {
  IntMatrix m(2, 4);
  m(0, 0) = 1;          // 11 -> 1
  m(1, 1) = 1;          // 1x -> x
  m(1, 2) = p.x * p.z;  // x1 -> XZ x
  return m;
}

IntMatrix comul(RingParams p) {
  IntMatrix m(4, 2);
  m(2, 0) = 1;          // 1 -> x1 + YZ 1x
  m(1, 0) = p.y * p.z;
  m(3, 1) = 1;          // x -> xx
  return m;
}

std::pair<IntMatrix, IntMatrix> unit_counit(RingParams) {
  IntMatrix eta(2, 1), eps(1, 2);
  eta(0, 0) = 1;
  eps(0, 1) = 1;
  return {eta, eps};
}

IntMatrix perm(RingParams p) {
  // Z^{-1} = Z for z = ±1.
  IntMatrix m(4, 4);
  m(0, 0) = p.x;  // 11 -> X 11
  m(2, 1) = p.z;  // 1x -> Z^-1 x1
  m(1, 2) = p.z;  // x1 -> Z 1x
  m(3, 3) = p.y;  // xx -> Y xx
  return m;
}

namespace {

void check_factor(int k, int s) {
  if (k < 1 || k > 20) throw Error(Errc::IndexOutOfRange, "tensor power out of range");
  if (s < 0 || s >= k) throw Error(Errc::IndexOutOfRange, "factor " + std::to_string(s) + " out of range");
}

}  // namespace

IntMatrix t_merge(int k, int s, int t) {
  check_factor(k, s);
  check_factor(k, t);
  if (s == t) throw Error(Errc::EqualIndices, "T^{s,t} needs s != t");
  const std::uint32_t dim = std::uint32_t{1} << k;
  IntMatrix m(dim, dim);
  const std::uint32_t bs = factor_bit(k, s), bt = factor_bit(k, t);
  for (std::uint32_t b = 0; b < dim; ++b) {
    if (!(b & bs)) m(b | bs, b) += 1;
    if (!(b & bt)) m(b | bt, b) += 1;
  }
  return m;
}

IntMatrix t_split(int k, int s) {
  check_factor(k, s);
  const std::uint32_t dim = std::uint32_t{1} << k;
  IntMatrix m(dim, dim);
  const std::uint32_t bs = factor_bit(k, s);
  for (std::uint32_t b = 0; b < dim; ++b)
    if (!(b & bs)) m(b | bs, b) = 2;
  return m;
}

int x_degree(std::uint32_t basis) { return std::popcount(basis); }

void normalize(Tensor& v) {
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.basis < b.basis; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size();) {
    const std::uint32_t b = v[r].basis;
    Int sum = 0;
    for (; r < v.size() && v[r].basis == b; ++r) sum += v[r].coeff;
    if (sum != 0) v[w++] = Term{b, sum};
  }
  v.resize(w);
}

Tensor unit_tensor(int) { return Tensor{Term{0, 1}}; }

std::vector<Int> to_dense(const Tensor& v, int k) {
  std::vector<Int> out(std::size_t{1} << k, 0);
  for (const auto& t : v) out[t.basis] += t.coeff;
  return out;
}

Tensor from_dense(const std::vector<Int>& v) {
  Tensor out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back(Term{static_cast<std::uint32_t>(i), v[i]});
  return out;
}

Tensor swap_factors(const Tensor& v, int k, int pos, RingParams p) {
  const std::uint32_t hi = factor_bit(k, pos), lo = factor_bit(k, pos + 1);
  Tensor out;
  out.reserve(v.size());
  for (const auto& t : v) {
    const bool a = t.basis & hi, b = t.basis & lo;
    Int c = (!a && !b) ? p.x : (a && b) ? p.y : p.z;
    std::uint32_t nb = t.basis & ~(hi | lo);
    if (a) nb |= lo;
    if (b) nb |= hi;
    out.push_back(Term{nb, c * t.coeff});
  }
  normalize(out);
  return out;
}

Tensor merge_first(const Tensor& v, int k, RingParams p) {
  Tensor out;
  out.reserve(v.size());
  const std::uint32_t rest_mask = (std::uint32_t{1} << (k - 2)) - 1u;
  for (const auto& t : v) {
    const std::uint32_t rest = t.basis & rest_mask;
    const std::uint32_t pair = t.basis >> (k - 2);  // bit 1: factor 0, bit 0: factor 1
    const std::uint32_t xbit = std::uint32_t{1} << (k - 2);
    switch (pair) {
      case 0: out.push_back(Term{rest, t.coeff}); break;
      case 1: out.push_back(Term{xbit | rest, t.coeff}); break;
      case 2: out.push_back(Term{xbit | rest, p.x * p.z * t.coeff}); break;
      default: break;
    }
  }
  normalize(out);
  return out;
}

Tensor split_first(const Tensor& v, int k, RingParams p) {
  Tensor out;
  out.reserve(2 * v.size());
  const std::uint32_t rest_mask = (std::uint32_t{1} << (k - 1)) - 1u;
  for (const auto& t : v) {
    const std::uint32_t rest = t.basis & rest_mask;
    const int shift = k - 1;
    if (t.basis >> shift) {
      out.push_back(Term{(3u << shift) | rest, t.coeff});
    } else {
      out.push_back(Term{(2u << shift) | rest, t.coeff});
      out.push_back(Term{(1u << shift) | rest, p.y * p.z * t.coeff});
    }
  }
  normalize(out);
  return out;
}

Tensor reorder(const Tensor& v, std::vector<int> from, const std::vector<int>& to, RingParams p) {
  const int k = static_cast<int>(from.size());
  if (to.size() != from.size()) throw Error(Errc::DimensionMismatch, "reorder lengths differ");
  Tensor cur = v;
  for (int j = 0; j < k; ++j) {
    auto it = std::find(from.begin() + j, from.end(), to[j]);
    if (it == from.end()) throw Error(Errc::DimensionMismatch, "reorder targets are not a permutation");
    for (int r = static_cast<int>(it - from.begin()); r > j; --r) {
      cur = swap_factors(cur, k, r - 1, p);
      std::swap(from[r - 1], from[r]);
    }
  }
  return cur;
}

Tensor arrow_operator(const Tensor& v, int k, int s, int t, RingParams p) {
  check_factor(k, s);
  check_factor(k, t);
  std::vector<int> natural(k);
  for (int i = 0; i < k; ++i) natural[i] = i;
  std::vector<int> staged{s};
  if (s != t) staged.push_back(t);
  for (int i = 0; i < k; ++i)
    if (i != s && i != t) staged.push_back(i);
  Tensor w = reorder(v, natural, staged, p);
  if (s != t) {
    w = split_first(merge_first(w, k, p), k - 1, p);
  } else {
    w = merge_first(split_first(w, k, p), k + 1, p);
  }
  return reorder(w, staged, natural, p);
}

IntMatrix arrow_operator_matrix(int k, int s, int t, RingParams p) {
  const std::uint32_t dim = std::uint32_t{1} << k;
  IntMatrix m(dim, dim);
  for (std::uint32_t b = 0; b < dim; ++b)
    for (const auto& term : arrow_operator(Tensor{Term{b, 1}}, k, s, t, p)) m(term.basis, b) += term.coeff;
  return m;
}

}  // namespace khov
