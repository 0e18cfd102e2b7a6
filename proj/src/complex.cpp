#include "khov/complex.hpp"

#include <algorithm>
#include <bit>

#include "khov/errors.hpp"

namespace khov {

std::size_t BigradedComplex::total_rank() const {
  std::size_t n = 0;
  for (const auto& g : q) n += g.size();
  return n;
}

bool is_complex(const BigradedComplex& c) {
  for (std::size_t t = 0; t + 1 < c.d.size(); ++t)
    if (!(c.d[t + 1] * c.d[t]).is_zero()) return false;
  return true;
}

bool preserves_q(const BigradedComplex& c) {
  for (std::size_t t = 0; t < c.d.size(); ++t)
    for (std::size_t j = 0; j < c.d[t].cols(); ++j)
      for (const auto& [r, v] : c.d[t].col(j))
        if (v != 0 && c.q[t + 1][r] != c.q[t][j]) return false;
  return true;
}

namespace {

std::vector<int> iota_vec(int k) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = i;
  return v;
}

}  // namespace

SparseMatrix edge_map(const Resolution& rI, const Resolution& rJ, int i, RingParams p) {
  const Vertex bit = Vertex{1} << i;
  if (i < 0 || i >= rI.n || (rI.index & bit) || rJ.index != (rI.index | bit))
    throw Error(Errc::NotAnEdge, "resolutions are not joined along coordinate " + std::to_string(i));
  const int kI = rI.k(), kJ = rJ.k();
  const Arrow& a = rI.arrows[i];
  const bool merge = !a.is_loop();
  if (merge ? kJ != kI - 1 : kJ != kI + 1) throw Error(Errc::NotAnEdge, "circle counts do not match the edge");
  // The local factors go first so that m and Δ act from the left. Staging
  // them last fails to keep faces ±-proportional away from the even preset.
  std::vector<int> staged, after;
  if (merge) {
    staged = {a.source, a.target};
    after = {carry_circle(rI, rJ, a.source)};
  } else {
    staged = {a.source};
    after = {rJ.arrows[i].source, rJ.arrows[i].target};
  }
  for (int c = 0; c < kI; ++c)
    if (c != a.source && c != a.target) {
      staged.push_back(c);
      after.push_back(carry_circle(rI, rJ, c));
    }

  const std::vector<int> natural_I = iota_vec(kI), natural_J = iota_vec(kJ);
  SparseMatrix m(std::size_t{1} << kJ, std::size_t{1} << kI);
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << kI); ++b) {
    Tensor v = reorder(Tensor{Term{b, 1}}, natural_I, staged, p);
    v = merge ? merge_first(v, kI, p) : split_first(v, kI, p);
    v = reorder(v, after, natural_J, p);
    for (const auto& t : v) m.add(t.basis, b, t.coeff);
  }
  m.normalize();
  return m;
}

SignAssignment solve_signs(int n, const std::vector<CubeFace>& faces, const EdgeMapLookup& edge, Exec exec) {
  SignAssignment out(n);
  if (n < 2) return out;

  // Column order: non-tree edges first, tree edges (I has no ones below i) last.
  const std::size_t slots = static_cast<std::size_t>(n) << n;
  std::vector<std::int64_t> column(slots, -1);
  std::vector<std::pair<Vertex, int>> edge_of;
  for (int pass = 0; pass < 2; ++pass)
    for (Vertex I = 0; I < (Vertex{1} << n); ++I)
      for (int i = 0; i < n; ++i) {
        if ((I >> i) & 1u) continue;
        const bool tree = (I & ((Vertex{1} << i) - 1u)) == 0;
        if (tree != (pass == 1)) continue;
        column[static_cast<std::size_t>(I) * n + i] = static_cast<std::int64_t>(edge_of.size());
        edge_of.emplace_back(I, i);
      }
  const std::size_t vars = edge_of.size();
  const std::size_t words = (vars + 64) / 64;  // last bit of the row holds the right-hand side
  const std::size_t rhs_bit = vars;

  // lambda per face: 0 = unconstrained, +1 / -1 = paths equal / opposite.
  std::vector<int> lambda(faces.size(), 0);
  parallel_for(exec, faces.size(), [&](std::size_t f) {
    const auto& F = faces[f];
    const Vertex bi = Vertex{1} << F.i, bj = Vertex{1} << F.j;
    const SparseMatrix p1 = edge(F.base | bi, F.j) * edge(F.base, F.i);
    const SparseMatrix p2 = edge(F.base | bj, F.i) * edge(F.base, F.j);
    const bool z1 = p1.is_zero(), z2 = p2.is_zero();
    if (z1 && z2) return;
    if (z1 != z2) throw Error(Errc::FaceNotProportional, "one path of a face vanishes");
    if (p1 == p2) {
      lambda[f] = 1;
    } else if (p1 == p2.scaled(-1)) {
      lambda[f] = -1;
    } else {
      throw Error(Errc::FaceNotProportional, "face paths differ by more than a sign");
    }
  });

  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivot_of_row;
  std::vector<std::int64_t> row_of_pivot(vars, -1);
  auto lowest = [&](const std::vector<std::uint64_t>& r) -> std::size_t {
    for (std::size_t w = 0; w < words; ++w)
      if (r[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(r[w]));
    return words * 64;
  };
  auto set_bit = [](std::vector<std::uint64_t>& r, std::size_t b) { r[b / 64] ^= std::uint64_t{1} << (b % 64); };

  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (lambda[f] == 0) continue;
    const auto& F = faces[f];
    const Vertex bi = Vertex{1} << F.i, bj = Vertex{1} << F.j;
    std::vector<std::uint64_t> r(words, 0);
    set_bit(r, column[static_cast<std::size_t>(F.base) * n + F.i]);
    set_bit(r, column[static_cast<std::size_t>(F.base) * n + F.j]);
    set_bit(r, column[static_cast<std::size_t>(F.base | bi) * n + F.j]);
    set_bit(r, column[static_cast<std::size_t>(F.base | bj) * n + F.i]);
    if (lambda[f] == 1) set_bit(r, rhs_bit);
    for (;;) {
      const std::size_t lead = lowest(r);
      if (lead >= vars) {
        if (lead == rhs_bit) throw Error(Errc::Unsolvable, "sign system is inconsistent");
        break;
      }
      const std::int64_t pr = row_of_pivot[lead];
      if (pr < 0) {
        row_of_pivot[lead] = static_cast<std::int64_t>(rows.size());
        pivot_of_row.push_back(lead);
        rows.push_back(std::move(r));
        break;
      }
      const auto& other = rows[static_cast<std::size_t>(pr)];
      for (std::size_t w = lead / 64; w < words; ++w) r[w] ^= other[w];
    }
  }

  // Back substitution in descending pivot order; free variables stay 0.
  std::vector<std::uint8_t> value(vars, 0);
  std::vector<std::size_t> order(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) order[r] = r;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_of_row[a] > pivot_of_row[b]; });
  for (std::size_t r : order) {
    const auto& row = rows[r];
    const std::size_t piv = pivot_of_row[r];
    std::uint8_t acc = (row[rhs_bit / 64] >> (rhs_bit % 64)) & 1u;
    for (std::size_t w = piv / 64; w < words; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        const std::size_t b = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (b == piv || b >= vars) continue;
        acc ^= value[b];
      }
    }
    value[piv] = acc;
  }
  for (std::size_t v = 0; v < vars; ++v) out.set(edge_of[v].first, edge_of[v].second, value[v] ? -1 : 1);
  return out;
}

BigradedComplex assemble_complex(int n, int h_min, const std::vector<std::vector<int>>& vertex_q,
                                 const EdgeMapLookup& edge, const SignAssignment& signs) {
  BigradedComplex c;
  c.h_min = h_min;
  c.q.resize(n + 1);
  std::vector<std::size_t> offset(vertex_q.size(), 0);
  for (int h = 0; h <= n; ++h)
    for (Vertex I : vertices_of_height(n, h)) {
      offset[I] = c.q[h].size();
      c.q[h].insert(c.q[h].end(), vertex_q[I].begin(), vertex_q[I].end());
    }
  for (int h = 0; h < n; ++h) {
    SparseMatrix m(c.q[h + 1].size(), c.q[h].size());
    for (Vertex I : vertices_of_height(n, h))
      for (int i = 0; i < n; ++i) {
        if ((I >> i) & 1u) continue;
        const Vertex J = I | (Vertex{1} << i);
        const SparseMatrix& e = edge(I, i);
        const Int s = signs(I, i);
        for (std::size_t col = 0; col < e.cols(); ++col)
          for (const auto& [r, v] : e.col(col)) m.add(offset[J] + r, offset[I] + col, s * v);
      }
    m.normalize();
    c.d.push_back(std::move(m));
  }
  return c;
}

BigradedComplex build_unreduced(const Diagram& d, RingParams p, ArrowConvention conv, Exec exec) {
  if (!p.valid()) throw Error(Errc::IndexOutOfRange, "preset values must be +1 or -1");
  if (d.n() > kMaxHomologyCrossings) throw Error(Errc::TooLarge, "homology needs at most 12 crossings");
  const int n = d.n();
  const auto res = resolve_all(d, conv, exec);
  std::vector<SparseMatrix> maps(static_cast<std::size_t>(n) << n);
  parallel_for(exec, res.size() * static_cast<std::size_t>(n), [&](std::size_t slot) {
    const Vertex I = static_cast<Vertex>(slot / n);
    const int i = static_cast<int>(slot % n);
    if ((I >> i) & 1u) return;
    maps[slot] = edge_map(res[I], res[I | (Vertex{1} << i)], i, p);
  });
  const EdgeMapLookup lookup = [&](Vertex I, int i) -> const SparseMatrix& {
    return maps[static_cast<std::size_t>(I) * n + i];
  };
  const SignAssignment signs = solve_signs(n, cube_faces(n), lookup, exec);

  std::vector<std::vector<int>> vq(res.size());
  const int shift = d.n_plus() - 2 * d.n_minus();
  for (const auto& r : res) {
    const int k = r.k();
    auto& qs = vq[r.index];
    qs.resize(std::size_t{1} << k);
    for (std::uint32_t b = 0; b < qs.size(); ++b) qs[b] = k - 2 * x_degree(b) + r.height() + shift;
  }
  return assemble_complex(n, -d.n_minus(), vq, lookup, signs);
}

}  // namespace khov
