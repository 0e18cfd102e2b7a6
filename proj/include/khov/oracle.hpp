#pragma once

#include <map>
#include <string>

#include "khov/complex.hpp"
#include "khov/diagram.hpp"
#include "khov/homology.hpp"
#include "khov/matrix.hpp"
#include "khov/parallel.hpp"

namespace khov {

// Integer Laurent polynomial in q; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, Int coeff = 1);

  const std::map<int, Int>& terms() const noexcept { return terms_; }
  Int coeff(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(int exponent, Int coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // "-q^-9 + q^-5 + 2q^-1 - 1", exponents ascending; "0" when empty.
  std::string to_string() const;

 private:
  std::map<int, Int> terms_;
};

constexpr int kMaxBracketCrossings = 14;

// Σ_I (-q)^{|I|} (q + q^-1)^{k(I)}, from a dedicated union-find over the arcs.
LaurentPoly kauffman_bracket(const Diagram& d, Exec exec = Exec::Parallel);
// (-1)^{n-} q^{n+ - 2n-} <D>; the unknot gives q + q^-1.
LaurentPoly jones(const Diagram& d, Exec exec = Exec::Parallel);

// Σ (-1)^h betti q^q, torsion ignored. Tables in the paper convention are read back as standard.
LaurentPoly euler_characteristic(const HomologyTable& t);
LaurentPoly euler_characteristic(const BigradedComplex& c);

}  // namespace khov
