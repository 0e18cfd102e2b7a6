#include "khov/reduced.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

#include "khov/errors.hpp"

namespace khov {

namespace {

std::pair<int, int> endpoints(const Resolution& r, const Symbol& s) {
  if (s.kind == Symbol::Arrow) {
    if (s.index < 0 || s.index >= static_cast<int>(r.arrows.size()))
      throw Error(Errc::UnknownSymbol, "no arrow a" + std::to_string(s.index));
    return {r.arrows[s.index].source, r.arrows[s.index].target};
  }
  if (s.index < 0 || s.index >= r.k()) throw Error(Errc::UnknownSymbol, "no circle " + std::to_string(s.index));
  return {s.index, s.index};
}

// Position of each basis tensor among the tensors of its x-degree.
struct DegreeIndex {
  std::vector<std::uint32_t> position;
  std::vector<std::vector<std::uint32_t>> members;

  explicit DegreeIndex(int k) : position(std::size_t{1} << k), members(k + 1) {
    for (std::uint32_t b = 0; b < position.size(); ++b) {
      auto& m = members[std::popcount(b)];
      position[b] = static_cast<std::uint32_t>(m.size());
      m.push_back(b);
    }
  }

  BigVec coords(const Tensor& v, int degree) const {
    BigVec out(members[degree].size());
    for (const auto& t : v) out[position[t.basis]] = static_cast<long>(t.coeff);
    return out;
  }
};

Int to_int(const mpz_class& v) {
  if (!v.fits_slong_p()) throw Error(Errc::TooLarge, "coefficient exceeds 64 bits");
  return v.get_si();
}

}  // namespace

Tensor ev_unit(const Resolution& r, const ArrowMonomial& w, RingParams p) {
  Tensor v = unit_tensor(r.k());
  for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it) {
    const auto [s, t] = endpoints(r, *it);
    v = arrow_operator(v, r.k(), s, t, p);
  }
  return v;
}

IntMatrix ev(const Resolution& r, const ArrowMonomial& w, RingParams p) {
  IntMatrix m = IntMatrix::identity(std::size_t{1} << r.k());
  for (const auto& sym : w.symbols) {
    const auto [s, t] = endpoints(r, sym);
    m = m * arrow_operator_matrix(r.k(), s, t, p);
  }
  return m;
}

std::vector<Int> e1(const IntMatrix& op, int k) {
  const std::size_t dim = std::size_t{1} << k;
  if (op.rows() != dim || op.cols() != dim) throw Error(Errc::DimensionMismatch, "operator size is not 2^k");
  std::vector<Int> out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = op(i, 0);
  return out;
}

OperatorLattice::OperatorLattice(const Resolution& r, RingParams p) : index_(r.index), k_(r.k()), p_(p) {
  const DegreeIndex deg(k_);
  for (int d = 0; d <= k_; ++d) lattices_.emplace_back(deg.members[d].size());
  words_.resize(k_ + 1);

  // One generator per distinct (source, target) pair.
  std::vector<int> gens;
  std::vector<std::pair<int, int>> seen;
  for (const auto& a : r.arrows) {
    const std::pair<int, int> st{a.source, a.target};
    if (std::find(seen.begin(), seen.end(), st) != seen.end()) continue;
    seen.push_back(st);
    gens.push_back(a.crossing);
  }

  std::deque<std::pair<ArrowMonomial, Tensor>> queue;
  ArrowMonomial empty;
  Tensor one = unit_tensor(k_);
  lattices_[0].insert(deg.coords(one, 0));
  words_[0].push_back(empty);
  queue.emplace_back(std::move(empty), std::move(one));
  while (!queue.empty()) {
    auto [w, v] = std::move(queue.front());
    queue.pop_front();
    const int d = x_degree(v.front().basis);
    if (d == k_) continue;
    for (int g : gens) {
      const Arrow& a = r.arrows[g];
      Tensor u = arrow_operator(v, k_, a.source, a.target, p);
      if (u.empty()) continue;
      ArrowMonomial w2;
      w2.symbols.reserve(w.symbols.size() + 1);
      w2.symbols.push_back({Symbol::Arrow, g});
      w2.symbols.insert(w2.symbols.end(), w.symbols.begin(), w.symbols.end());
      words_[d + 1].push_back(w2);
      if (lattices_[d + 1].insert(deg.coords(u, d + 1))) queue.emplace_back(std::move(w2), std::move(u));
    }
  }

  for (int d = 0; d <= k_; ++d) {
    lattices_[d].canonicalize();
    first_of_degree_.push_back(basis_.size());
    for (std::size_t row = 0; row < lattices_[d].rank(); ++row) basis_.push_back({d, row});
  }
}

Tensor OperatorLattice::basis_vector(std::size_t b) const {
  const auto [d, row] = basis_.at(b);
  const DegreeIndex deg(k_);
  Tensor out;
  const BigVec& v = lattices_[d].rows()[row];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back(Term{deg.members[d][i], to_int(v[i])});
  normalize(out);
  return out;
}

IntMatrix OperatorLattice::materialize(const Resolution& r, std::size_t b) const {
  const auto [d, row] = basis_.at(b);
  const std::size_t dim = std::size_t{1} << k_;
  IntMatrix out(dim, dim);
  const BigVec& combo = lattices_[d].combos()[row];
  for (std::size_t g = 0; g < combo.size(); ++g)
    if (combo[g] != 0) out = out + to_int(combo[g]) * ev(r, words_[d][g], p_);
  return out;
}

std::optional<std::vector<Int>> OperatorLattice::express(const Tensor& v) const {
  std::vector<Int> out(basis_.size(), 0);
  if (v.empty()) return out;
  const int d = x_degree(v.front().basis);
  for (const auto& t : v)
    if (x_degree(t.basis) != d) return std::nullopt;
  const DegreeIndex deg(k_);
  const auto coords = lattices_[d].express(deg.coords(v, d));
  if (!coords) return std::nullopt;
  for (std::size_t row = 0; row < coords->size(); ++row) out[first_of_degree_[d] + row] = to_int((*coords)[row]);
  return out;
}

OperatorLattice operator_lattice(const Resolution& r, RingParams p) { return OperatorLattice(r, p); }

ArrowMonomial transform_monomial(const Resolution& rI, const Resolution& rJ, const ArrowMonomial& w, int i) {
  if (i < 0 || i >= rI.n || ((rI.index >> i) & 1u) || rJ.index != (rI.index | (Vertex{1} << i)))
    throw Error(Errc::NotAnEdge, "resolutions are not joined along coordinate " + std::to_string(i));
  ArrowMonomial out;
  if (rI.arrows[i].is_loop()) out.symbols.push_back({Symbol::Arrow, i});
  for (const auto& s : w.symbols) {
    if (s.kind == Symbol::Arrow) {
      out.symbols.push_back(s);
    } else {
      out.symbols.push_back({Symbol::Vertex, carry_circle(rI, rJ, s.index)});
    }
  }
  return out;
}

namespace {

// e1 of the image of every basis element of O_I, as monomial sums in D(J).
std::vector<Tensor> induced_images(const Resolution& rI, const OperatorLattice& oI, const Resolution& rJ, int i,
                                   RingParams p) {
  std::map<std::pair<int, std::size_t>, Tensor> cache;
  std::vector<Tensor> images;
  for (const auto& [d, row] : oI.basis()) {
    const BigVec& combo = oI.lattice(d).combos()[row];
    std::map<std::uint32_t, Int> acc;
    for (std::size_t g = 0; g < combo.size(); ++g) {
      if (combo[g] == 0) continue;
      auto it = cache.find({d, g});
      if (it == cache.end())
        it = cache.emplace(std::pair{d, g}, ev_unit(rJ, transform_monomial(rI, rJ, oI.words(d)[g], i), p)).first;
      const Int c = to_int(combo[g]);
      for (const auto& t : it->second) acc[t.basis] += c * t.coeff;
    }
    Tensor v;
    for (const auto& [b, c] : acc)
      if (c != 0) v.push_back(Term{b, c});
    images.push_back(std::move(v));
  }
  return images;
}

}  // namespace

SparseMatrix induced_map(const Resolution& rI, const OperatorLattice& oI, const Resolution& rJ,
                         const OperatorLattice& oJ, int i, RingParams p) {
  const auto images = induced_images(rI, oI, rJ, i, p);
  SparseMatrix m(oJ.rank(), oI.rank());
  for (std::size_t b = 0; b < images.size(); ++b) {
    const auto coords = oJ.express(images[b]);
    if (!coords) throw Error(Errc::BasisExpressionFailure, "image leaves the target lattice");
    for (std::size_t r = 0; r < coords->size(); ++r)
      if ((*coords)[r] != 0) m.add(r, b, (*coords)[r]);
  }
  m.normalize();
  return m;
}

ReducedCube build_reduced_cube(const Diagram& d, RingParams p, ArrowConvention conv, Exec exec) {
  if (!p.valid()) throw Error(Errc::IndexOutOfRange, "preset values must be +1 or -1");
  if (d.n() > kMaxHomologyCrossings) throw Error(Errc::TooLarge, "homology needs at most 12 crossings");
  ReducedCube cube;
  const int n = d.n();
  cube.resolutions = resolve_all(d, conv, exec);
  const auto& res = cube.resolutions;
  cube.lattices.resize(res.size());
  parallel_for(exec, res.size(), [&](std::size_t I) { cube.lattices[I] = OperatorLattice(res[I], p); });

  cube.maps.resize(static_cast<std::size_t>(n) << n);
  parallel_for(exec, cube.maps.size(), [&](std::size_t slot) {
    const Vertex I = static_cast<Vertex>(slot / n);
    const int i = static_cast<int>(slot % n);
    if ((I >> i) & 1u) return;
    const Vertex J = I | (Vertex{1} << i);
    cube.maps[slot] = induced_map(res[I], cube.lattices[I], res[J], cube.lattices[J], i, p);
  });
  const EdgeMapLookup lookup = [&](Vertex I, int i) -> const SparseMatrix& {
    return cube.maps[static_cast<std::size_t>(I) * n + i];
  };
  cube.signs = solve_signs(n, cube_faces(n), lookup, exec);

  // q of an element is q of its e1 image, lowered by one.
  std::vector<std::vector<int>> vq(res.size());
  const int shift = d.n_plus() - 2 * d.n_minus() - 1;
  for (const auto& r : res)
    for (const auto& [deg, row] : cube.lattices[r.index].basis())
      vq[r.index].push_back(r.k() - 2 * deg + r.height() + shift);
  cube.complex = assemble_complex(n, -d.n_minus(), vq, lookup, cube.signs);
  return cube;
}

BigradedComplex build_reduced(const Diagram& d, RingParams p, ArrowConvention conv, Exec exec) {
  return build_reduced_cube(d, p, conv, exec).complex;
}

namespace {

Tensor apply_sparse(const SparseMatrix& m, const Tensor& v) {
  std::map<std::uint32_t, Int> acc;
  for (const auto& t : v)
    for (const auto& [r, c] : m.col(t.basis)) acc[r] += c * t.coeff;
  Tensor out;
  for (const auto& [b, c] : acc)
    if (c != 0) out.push_back(Term{b, c});
  return out;
}

Tensor scaled(Tensor v, Int s) {
  for (auto& t : v) t.coeff *= s;
  return v;
}

}  // namespace

CommutingSquareReport check_commuting_square(const Diagram& d, RingParams p, Exec exec) {
  if (d.n() > kMaxHomologyCrossings) throw Error(Errc::TooLarge, "homology needs at most 12 crossings");
  const auto res = resolve_all(d, ArrowConvention::Normal, exec);
  std::vector<OperatorLattice> lat(res.size());
  parallel_for(exec, res.size(), [&](std::size_t I) { lat[I] = OperatorLattice(res[I], p); });

  const auto edges = cube_edges(d);
  std::vector<std::vector<SquareViolation>> found(edges.size());
  std::vector<std::size_t> checked(edges.size(), 0);
  parallel_for(exec, edges.size(), [&](std::size_t e) {
    const auto& E = edges[e];
    const auto& rI = res[E.from];
    const auto& rJ = res[E.to];
    const SparseMatrix khov_map = edge_map(rI, rJ, E.crossing, p);
    SparseMatrix red;
    try {
      red = induced_map(rI, lat[E.from], rJ, lat[E.to], E.crossing, p);
    } catch (const Error& err) {
      found[e].push_back({E.from, E.crossing, 0, err.what()});
      return;
    }
    const bool strict = p == RingParams::even();
    Int lambda = 0;
    for (std::size_t b = 0; b < lat[E.from].rank(); ++b) {
      ++checked[e];
      Tensor lhs;
      for (const auto& [r, c] : red.col(b)) {
        for (const auto& t : lat[E.to].basis_vector(r)) lhs.push_back(Term{t.basis, c * t.coeff});
      }
      normalize(lhs);
      const Tensor rhs = apply_sparse(khov_map, lat[E.from].basis_vector(b));
      if (lhs.empty() && rhs.empty()) continue;
      if (lambda == 0) lambda = (!lhs.empty() && scaled(rhs, -1) == lhs) ? -1 : 1;
      if (strict) lambda = 1;
      if (lhs != scaled(rhs, lambda))
        found[e].push_back({E.from, E.crossing, b, lambda > 0 ? "e1 images differ" : "e1 images differ beyond one sign"});
    }
  });

  CommutingSquareReport report;
  report.edges = edges.size();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    report.elements += checked[e];
    for (auto& v : found[e]) report.violations.push_back(std::move(v));
  }
  return report;
}

std::vector<AdmissibleSubgraph> enumerate_admissible(const Resolution& r) {
  const int k = r.k();
  const int m = static_cast<int>(r.arrows.size());
  if (k > kMaxGraphCircles || m > kMaxGraphArrows)
    throw Error(Errc::TooLarge, "admissible subgraphs need k <= 8 and at most 12 arrows");
  std::vector<bool> has_loop(k, false);
  for (const auto& a : r.arrows)
    if (a.is_loop()) has_loop[a.source] = true;

  std::vector<AdmissibleSubgraph> out;
  std::vector<int> parent(k), nv(k), ne(k), nd(k);
  for (std::uint32_t E = 0; E < (std::uint32_t{1} << m); ++E) {
    std::uint32_t touched = 0;
    for (int a = 0; a < m; ++a)
      if ((E >> a) & 1u) touched |= (1u << r.arrows[a].source) | (1u << r.arrows[a].target);
    for (std::uint32_t D = 0; D < (std::uint32_t{1} << k); ++D) {
      const std::uint32_t V = touched | D;
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (int a = 0; a < m; ++a)
        if ((E >> a) & 1u) parent[find(r.arrows[a].source)] = find(r.arrows[a].target);
      std::fill(nv.begin(), nv.end(), 0);
      std::fill(ne.begin(), ne.end(), 0);
      std::fill(nd.begin(), nd.end(), 0);
      for (int v = 0; v < k; ++v)
        if ((V >> v) & 1u) {
          ++nv[find(v)];
          if ((D >> v) & 1u) ++nd[find(v)];
        }
      for (int a = 0; a < m; ++a)
        if ((E >> a) & 1u) ++ne[find(r.arrows[a].source)];
      bool ok = true;
      for (int v = 0; v < k && ok; ++v) {
        if (!((V >> v) & 1u) || find(v) != v) continue;
        const int betti = ne[v] - nv[v] + 1;
        if (ne[v] == 0) {
          ok = nd[v] == 1 && has_loop[v];
        } else if (betti == 0) {
          ok = nd[v] <= 1;
        } else {
          ok = betti == 1 && nd[v] == 0;
        }
      }
      if (!ok) continue;
      AdmissibleSubgraph g;
      for (int a = 0; a < m; ++a)
        if ((E >> a) & 1u) g.arrows.push_back(a);
      for (int v = 0; v < k; ++v)
        if ((D >> v) & 1u) g.distinguished.push_back(v);
      out.push_back(std::move(g));
    }
  }
  return out;
}

namespace {

ArrowMonomial as_monomial(const AdmissibleSubgraph& g) {
  ArrowMonomial w;
  for (int a : g.arrows) w.symbols.push_back({Symbol::Arrow, a});
  for (int v : g.distinguished) w.symbols.push_back({Symbol::Vertex, v});
  return w;
}

}  // namespace

IntMatrix psi(const AdmissibleSubgraph& g, const Resolution& r) { return ev(r, as_monomial(g), RingParams::even()); }

GraphSpanReport check_graph_span(const Resolution& r) {
  const auto graphs = enumerate_admissible(r);
  const OperatorLattice lattice(r, RingParams::even());
  const int k = r.k();
  const DegreeIndex deg(k);
  std::vector<HermiteLattice> span;
  for (int d = 0; d <= k; ++d) span.emplace_back(deg.members[d].size());
  for (const auto& g : graphs) {
    const Tensor v = ev_unit(r, as_monomial(g), RingParams::even());
    if (v.empty()) continue;
    const int d = x_degree(v.front().basis);
    span[d].insert(deg.coords(v, d));
  }
  GraphSpanReport rep;
  rep.subgraphs = graphs.size();
  rep.lattice_rank = lattice.rank();
  rep.equal = true;
  for (int d = 0; d <= k; ++d) {
    span[d].canonicalize();
    rep.span_rank += span[d].rank();
    if (span[d].rows() != lattice.lattice(d).rows()) rep.equal = false;
  }
  rep.kernel_rank = rep.subgraphs - rep.span_rank;
  return rep;
}

CycleRelationReport check_cycle_relations(int max_length) {
  CycleRelationReport rep;
  for (int len = 2; len <= max_length; ++len)
    for (int extra = 0; extra <= 1; ++extra) {
      const int k = len + extra;
      const std::size_t dim = std::size_t{1} << k;
      IntMatrix odd(dim, dim), even(dim, dim);
      for (int j = 0; j < len; ++j) {
        const int a = j, b = (j + 1) % len;
        // Alternate the arrow directions around the cycle.
        const IntMatrix l = (j % 2 == 0) ? t_merge(k, a, b) : t_merge(k, b, a);
        // 0-based even j are the odd-numbered arrows l_1, l_3, ...
        if (j % 2 == 0) {
          odd = odd + l;
        } else {
          even = even + l;
        }
      }
      if (len % 2 == 1) even = even + t_split(k, 0);  // l_len and l_1 share circle 0
      ++rep.instances;
      if (!(odd == even))
        rep.failures.push_back("cycle of length " + std::to_string(len) + " on " + std::to_string(k) + " circles");
    }
  return rep;
}

}  // namespace khov
