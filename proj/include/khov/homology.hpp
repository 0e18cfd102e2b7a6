#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "khov/complex.hpp"
#include "khov/matrix.hpp"
#include "khov/parallel.hpp"

namespace khov {

// U * M * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal.
struct SmithForm {
  BigMatrix d;
  BigMatrix u;
  BigMatrix v;
};

SmithForm smith_normal_form(const BigMatrix& m);

// Nonzero invariant factors of m, ascending (units included).
std::vector<mpz_class> invariant_factors(BigMatrix m);

struct HomologyGroup {
  int h = 0;
  int q = 0;
  std::size_t betti = 0;
  std::vector<mpz_class> torsion;  // invariant factors >= 2, ascending
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Nonzero groups sorted by (h, q).
struct HomologyTable {
  Grading convention = Grading::Standard;
  std::vector<HomologyGroup> groups;

  const HomologyGroup* find(int h, int q) const;
  std::size_t total_betti() const;
  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

// Integer homology, computed blockwise per (h, q). Throws NotAComplex if d∘d != 0.
HomologyTable homology(const BigradedComplex& c, Exec exec = Exec::Parallel);

// Re-expresses a table in another quantum convention (paper q = -standard q).
HomologyTable to_convention(const HomologyTable& t, Grading g);

}  // namespace khov
