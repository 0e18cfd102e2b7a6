#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace khov {

using BigVec = std::vector<mpz_class>;

// Row-style Hermite basis of a sublattice of Z^dim, grown one vector at a
// time. Each basis row remembers its combination of the inserted generators,
// so the transform to the generating set stays available.
class HermiteLattice {
 public:
  explicit HermiteLattice(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t generators() const noexcept { return generators_; }

  // Registers v as the next generator. Returns true if it enlarged the lattice.
  bool insert(const BigVec& v);

  // Coordinates of v in the current basis, or nullopt if v is outside.
  std::optional<BigVec> express(BigVec v) const;
  bool contains(const BigVec& v) const { return express(v).has_value(); }

  // Positive pivots and entries above each pivot reduced into [0, pivot).
  void canonicalize();

  const std::vector<BigVec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  // combos()[r][g]: coefficient of generator g in basis row r.
  const std::vector<BigVec>& combos() const noexcept { return combos_; }

 private:
  void add_row_multiple(BigVec& v, BigVec& vc, std::size_t r, const mpz_class& f) const;

  std::size_t dim_;
  std::size_t generators_ = 0;
  std::vector<BigVec> rows_;
  std::vector<BigVec> combos_;
  std::vector<std::size_t> pivots_;  // ascending
};

// Canonical Hermite basis of the span of the given rows.
std::vector<BigVec> hermite_basis(const std::vector<BigVec>& vectors, std::size_t dim);

}  // namespace khov
