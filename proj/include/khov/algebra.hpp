#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "khov/matrix.hpp"

namespace khov {

// Specialization of (X, Y, Z) to signs.
struct RingParams {
  int x = 1;
  int y = 1;
  int z = 1;

  static constexpr RingParams even() { return {1, 1, 1}; }
  static constexpr RingParams odd() { return {1, -1, 1}; }
  bool valid() const noexcept;
  friend bool operator==(const RingParams&, const RingParams&) = default;
};

// Structure maps in the basis (1, x) and (11, 1x, x1, xx).
IntMatrix mul(RingParams p);
IntMatrix comul(RingParams p);
std::pair<IntMatrix, IntMatrix> unit_counit(RingParams p);
IntMatrix perm(RingParams p);

// The integer operators of the arrow algebra on A^{⊗k}, factors 0-based:
// t_merge is multiplication by x_s + x_t, t_split by 2 x_s.
IntMatrix t_merge(int k, int s, int t);
IntMatrix t_split(int k, int s);

// Sparse elements of A^{⊗k}. Basis index: factor 0 is the most significant
// bit, and a set bit means x.
struct Term {
  std::uint32_t basis;
  Int coeff;
  friend bool operator==(const Term&, const Term&) = default;
};
using Tensor = std::vector<Term>;

inline std::uint32_t factor_bit(int k, int f) { return std::uint32_t{1} << (k - 1 - f); }
int x_degree(std::uint32_t basis);

void normalize(Tensor& v);
Tensor unit_tensor(int k);  // 1 ⊗ ... ⊗ 1
std::vector<Int> to_dense(const Tensor& v, int k);
Tensor from_dense(const std::vector<Int>& v);

// P on factors (pos, pos+1).
Tensor swap_factors(const Tensor& v, int k, int pos, RingParams p);
// m on the first two factors (k -> k-1), Δ on the first factor (k -> k+1).
Tensor merge_first(const Tensor& v, int k, RingParams p);
Tensor split_first(const Tensor& v, int k, RingParams p);
// Moves factors so that the factor ids listed in `from` end up in the order
// `to`, one adjacent transposition at a time.
Tensor reorder(const Tensor& v, std::vector<int> from, const std::vector<int>& to, RingParams p);

// Arrow operator at preset p: Δ∘m on factors (s, t) when s != t, m∘Δ on
// factor s when s == t. At the even preset these are t_merge and t_split.
Tensor arrow_operator(const Tensor& v, int k, int s, int t, RingParams p);
IntMatrix arrow_operator_matrix(int k, int s, int t, RingParams p);

}  // namespace khov
