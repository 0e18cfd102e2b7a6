#include "khov/oracle.hpp"

#include <bit>
#include <numeric>
#include <vector>

#include "khov/errors.hpp"

namespace khov {

LaurentPoly LaurentPoly::monomial(int exponent, Int coeff) {
  LaurentPoly p;
  p.add(exponent, coeff);
  return p;
}

Int LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add(int exponent, Int coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(exponent, coeff);
  if (!fresh && (it->second += coeff) == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    Int mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag);
    s += "q";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

// Number of loops left after smoothing every crossing by the bits of I.
int count_loops(const Diagram& d, Vertex I, std::vector<int>& parent) {
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int loops = static_cast<int>(parent.size());
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --loops;
    }
  };
  const auto& xs = d.crossings();
  for (std::size_t c = 0; c < xs.size(); ++c) {
    const auto& x = xs[c];
    const int a = d.label_index(x[0]), b = d.label_index(x[1]), cc = d.label_index(x[2]), dd = d.label_index(x[3]);
    if ((I >> c) & 1u) {
      join(a, dd);
      join(b, cc);
    } else {
      join(a, b);
      join(cc, dd);
    }
  }
  return loops + d.free_loops();
}

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& d, Exec exec) {
  const int n = d.n();
  if (n > kMaxBracketCrossings) throw Error(Errc::TooLarge, "bracket needs at most 14 crossings");
  const int arcs = d.arc_count();
  const int max_loops = arcs + d.free_loops() + 1;
  // histogram[h * max_loops + k] counts states with |I| = h and k loops.
  std::vector<std::int64_t> histogram(static_cast<std::size_t>(n + 1) * max_loops, 0);
  const std::int64_t states = std::int64_t{1} << n;
  if (exec == Exec::Serial) {
    std::vector<int> parent(arcs);
    for (std::int64_t I = 0; I < states; ++I) {
      const int k = count_loops(d, static_cast<Vertex>(I), parent);
      ++histogram[static_cast<std::size_t>(std::popcount(static_cast<Vertex>(I))) * max_loops + k];
    }
  } else {
#pragma omp parallel
    {
      std::vector<std::int64_t> local(histogram.size(), 0);
      std::vector<int> parent(arcs);
#pragma omp for schedule(static)
      for (std::int64_t I = 0; I < states; ++I) {
        const int k = count_loops(d, static_cast<Vertex>(I), parent);
        ++local[static_cast<std::size_t>(std::popcount(static_cast<Vertex>(I))) * max_loops + k];
      }
#pragma omp critical
      for (std::size_t i = 0; i < histogram.size(); ++i) histogram[i] += local[i];
    }
  }

  const LaurentPoly loop = LaurentPoly::monomial(-1) + LaurentPoly::monomial(1);
  std::vector<LaurentPoly> loop_power{LaurentPoly::monomial(0)};
  for (int k = 1; k < max_loops; ++k) loop_power.push_back(loop_power.back() * loop);
  LaurentPoly out;
  for (int h = 0; h <= n; ++h)
    for (int k = 0; k < max_loops; ++k) {
      const std::int64_t count = histogram[static_cast<std::size_t>(h) * max_loops + k];
      if (count == 0) continue;
      out += LaurentPoly::monomial(h, (h % 2 ? -1 : 1) * count) * loop_power[k];
    }
  return out;
}

LaurentPoly jones(const Diagram& d, Exec exec) {
  const int np = d.n_plus(), nm = d.n_minus();
  return LaurentPoly::monomial(np - 2 * nm, nm % 2 ? -1 : 1) * kauffman_bracket(d, exec);
}

LaurentPoly euler_characteristic(const HomologyTable& t) {
  LaurentPoly out;
  const int sign_q = t.convention == Grading::Paper ? -1 : 1;
  for (const auto& g : t.groups) out.add(sign_q * g.q, (g.h % 2 ? -1 : 1) * static_cast<Int>(g.betti));
  return out;
}

LaurentPoly euler_characteristic(const BigradedComplex& c) {
  LaurentPoly out;
  for (std::size_t t = 0; t < c.degrees(); ++t) {
    const int h = c.h_min + static_cast<int>(t);
    for (int q : c.q[t]) out.add(q, h % 2 ? -1 : 1);
  }
  return out;
}

}  // namespace khov
