#include "khov/lattice.hpp"

#include <algorithm>

#include "khov/errors.hpp"

namespace khov {

namespace {

std::size_t leading(const BigVec& v, std::size_t from = 0) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

}  // namespace

void HermiteLattice::add_row_multiple(BigVec& v, BigVec& vc, std::size_t r, const mpz_class& f) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (rows_[r][i] != 0) v[i] += f * rows_[r][i];
  for (std::size_t g = 0; g < combos_[r].size(); ++g)
    if (combos_[r][g] != 0) vc[g] += f * combos_[r][g];
}

bool HermiteLattice::insert(const BigVec& input) {
  if (input.size() != dim_) throw Error(Errc::DimensionMismatch, "lattice vector length");
  const std::size_t g = generators_++;
  for (auto& c : combos_) c.resize(generators_);
  if (express(input)) return false;

  BigVec v = input;
  BigVec vc(generators_);
  vc[g] = 1;
  std::size_t col = leading(v);
  while (col < dim_) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    if (it == pivots_.end() || *it != col) {
      const std::size_t at = static_cast<std::size_t>(it - pivots_.begin());
      if (v[col] < 0) {
        for (auto& x : v) x = -x;
        for (auto& x : vc) x = -x;
      }
      rows_.insert(rows_.begin() + at, std::move(v));
      combos_.insert(combos_.begin() + at, std::move(vc));
      pivots_.insert(pivots_.begin() + at, col);
      return true;
    }
    const std::size_t r = static_cast<std::size_t>(it - pivots_.begin());
    BigVec& row = rows_[r];
    BigVec& rc = combos_[r];
    const mpz_class a = row[col], b = v[col];
    mpz_class gcd, s, t;
    mpz_gcdext(gcd.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const mpz_class ag = a / gcd, bg = b / gcd;
    // [row'; v'] = [[s, t], [-b/g, a/g]] [row; v], determinant 1.
    for (std::size_t i = 0; i < dim_; ++i) {
      mpz_class nr = s * row[i] + t * v[i];
      mpz_class nv = ag * v[i] - bg * row[i];
      row[i] = std::move(nr);
      v[i] = std::move(nv);
    }
    for (std::size_t i = 0; i < generators_; ++i) {
      mpz_class nr = s * rc[i] + t * vc[i];
      mpz_class nv = ag * vc[i] - bg * rc[i];
      rc[i] = std::move(nr);
      vc[i] = std::move(nv);
    }
    if (row[col] < 0) {
      for (auto& x : row) x = -x;
      for (auto& x : rc) x = -x;
    }
    col = leading(v, col + 1);
  }
  // v was a rational but not an integral combination: the rows absorbed it.
  return true;
}

std::optional<BigVec> HermiteLattice::express(BigVec v) const {
  if (v.size() != dim_) throw Error(Errc::DimensionMismatch, "lattice vector length");
  BigVec coords(rows_.size());
  std::size_t col = leading(v);
  while (col < dim_) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    if (it == pivots_.end() || *it != col) return std::nullopt;
    const std::size_t r = static_cast<std::size_t>(it - pivots_.begin());
    const mpz_class& p = rows_[r][col];
    if (!mpz_divisible_p(v[col].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    const mpz_class f = v[col] / p;
    coords[r] = f;
    for (std::size_t i = col; i < dim_; ++i)
      if (rows_[r][i] != 0) v[i] -= f * rows_[r][i];
    col = leading(v, col + 1);
  }
  return coords;
}

void HermiteLattice::canonicalize() {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t col = pivots_[r];
    const mpz_class& p = rows_[r][col];
    for (std::size_t above = 0; above < r; ++above) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows_[above][col].get_mpz_t(), p.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t i = col; i < dim_; ++i) rows_[above][i] -= q * rows_[r][i];
      for (std::size_t g = 0; g < generators_; ++g) combos_[above][g] -= q * combos_[r][g];
    }
  }
}

std::vector<BigVec> hermite_basis(const std::vector<BigVec>& vectors, std::size_t dim) {
  HermiteLattice lat(dim);
  for (const auto& v : vectors) lat.insert(v);
  lat.canonicalize();
  return lat.rows();
}

}  // namespace khov
