#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "khov/diagram.hpp"
#include "khov/errors.hpp"

namespace khov {

namespace {

int top_label(const Diagram& d) { return d.labels().empty() ? 0 : d.labels().back(); }

void require_label(const Diagram& d, int label) {
  if (d.label_index(label) < 0) throw Error(Errc::SiteNotFound, "no arc labelled " + std::to_string(label));
}

int& at(std::vector<PdTuple>& xs, Slot s) { return xs[s.crossing][s.pos]; }

MoveResult r1_plus(const Diagram& d, const MoveSpec& m) {
  auto xs = d.crossings();
  int loops = d.free_loops();
  const int top = top_label(d);
  if (m.site.empty()) {
    if (loops == 0) throw Error(Errc::SiteNotFound, "R1+ without an arc needs a crossingless loop");
    const int e = top + 1, l = top + 2;
    xs.push_back(m.chirality ? PdTuple{e, e, l, l} : PdTuple{e, l, l, e});
    return {Diagram::make(std::move(xs), loops - 1), MoveSpec{MoveKind::R1Minus, {l}, m.chirality}};
  }
  if (m.site.size() != 1) throw Error(Errc::SiteNotFound, "R1+ takes one arc");
  const int e = m.site[0];
  require_label(d, e);
  const int loop = top + 1, out = top + 2;
  at(xs, d.head(e)) = out;
  xs.push_back(m.chirality ? PdTuple{e, out, loop, loop} : PdTuple{e, loop, loop, out});
  return {Diagram::make(std::move(xs), loops), MoveSpec{MoveKind::R1Minus, {loop}, m.chirality}};
}

MoveResult r1_minus(const Diagram& d, const MoveSpec& m) {
  if (m.site.size() != 1) throw Error(Errc::SiteNotFound, "R1- takes one arc");
  const int l = m.site[0];
  require_label(d, l);
  const Slot h = d.head(l), t = d.tail(l);
  if (h.crossing != t.crossing || (h.pos - t.pos + 4) % 2 == 0)
    throw Error(Errc::PatternMismatch, "arc " + std::to_string(l) + " is not a kink loop");
  const int c = h.crossing;
  const bool positive = d.sign(c) > 0;
  const auto& x = d.crossings()[c];
  std::vector<int> rest;
  for (int p = 0; p < 4; ++p)
    if (p != h.pos && p != t.pos) rest.push_back(x[p]);
  std::vector<PdTuple> xs;
  for (int i = 0; i < d.n(); ++i)
    if (i != c) xs.push_back(d.crossings()[i]);
  int loops = d.free_loops();
  if (rest[0] == rest[1]) {
    ++loops;
    return {Diagram::make(std::move(xs), loops), MoveSpec{MoveKind::R1Plus, {}, positive}};
  }
  const int keep = std::min(rest[0], rest[1]), drop = std::max(rest[0], rest[1]);
  for (auto& y : xs)
    for (int& v : y)
      if (v == drop) v = keep;
  return {Diagram::make(std::move(xs), loops), MoveSpec{MoveKind::R1Plus, {keep}, positive}};
}

// A strip picture of the face: e runs along the top, f along the bottom, and
// e is pushed down through f, creating crossings C1 (west) and C2 (east).
MoveResult r2_plus(const Diagram& d, const MoveSpec& m) {
  if (m.site.size() != 2) throw Error(Errc::SiteNotFound, "R2+ takes two arcs");
  const int e = m.site[0], f = m.site[1];
  require_label(d, e);
  require_label(d, f);
  if (e == f) throw Error(Errc::PatternMismatch, "R2+ needs two distinct arcs");

  const FaceSide* se = nullptr;
  const FaceSide* sf = nullptr;
  const auto fs = faces(d);
  for (const auto& face : fs) {
    se = sf = nullptr;
    for (const auto& side : face) {
      if (side.label == e && !se) se = &side;
      if (side.label == f && !sf) sf = &side;
    }
    if (se && sf) break;
  }
  if (!se || !sf) throw Error(Errc::PatternMismatch, "arcs do not share a face");

  const bool e_east = d.tail(e) == se->from;   // e traversed west to east
  const bool f_west = d.tail(f) == sf->from;   // f traversed east to west
  const int top = top_label(d);
  const int me = top + 1, he = top + 2, mf = top + 3, hf = top + 4;

  auto xs = d.crossings();
  at(xs, d.head(e)) = he;
  at(xs, d.head(f)) = hf;
  const int e_west_label = e_east ? e : he, e_east_label = e_east ? he : e;
  const int f_east_label = f_west ? f : hf, f_west_label = f_west ? hf : f;

  struct End {
    int angle, label;
    bool on_e, incoming;
  };
  const bool e_over = m.chirality;
  auto build = [&](std::array<End, 4> ends) {
    int start = -1;
    for (const auto& en : ends)
      if (en.on_e != e_over && en.incoming) start = en.angle;
    std::sort(ends.begin(), ends.end(), [&](const End& a, const End& b) {
      return (a.angle - start + 360) % 360 < (b.angle - start + 360) % 360;
    });
    return PdTuple{ends[0].label, ends[1].label, ends[2].label, ends[3].label};
  };
  const bool f_east = !f_west;
  PdTuple c1 = build({End{135, e_west_label, true, e_east}, End{315, me, true, !e_east},
                      End{180, f_west_label, false, f_east}, End{0, mf, false, !f_east}});
  PdTuple c2 = build({End{225, me, true, e_east}, End{45, e_east_label, true, !e_east},
                      End{180, mf, false, f_east}, End{0, f_east_label, false, !f_east}});
  xs.push_back(c1);
  xs.push_back(c2);
  return {Diagram::make(std::move(xs), d.free_loops()), MoveSpec{MoveKind::R2Minus, {me, mf}, true}};
}

MoveResult r2_minus(const Diagram& d, const MoveSpec& m) {
  if (m.site.size() != 2) throw Error(Errc::SiteNotFound, "R2- takes two arcs");
  const int u = m.site[0], v = m.site[1];
  require_label(d, u);
  require_label(d, v);
  bool bigon = false;
  for (const auto& face : faces(d))
    if (face.size() == 2 && std::set<int>{face[0].label, face[1].label} == std::set<int>{u, v} && u != v)
      bigon = true;
  if (!bigon) throw Error(Errc::PatternMismatch, "arcs do not bound a bigon");

  const Slot u0 = d.head(u), u1 = d.tail(u), v0 = d.head(v), v1 = d.tail(v);
  const bool u_over = u0.pos % 2 == 1;
  if ((u1.pos % 2 == 1) != u_over || (v0.pos % 2 == 1) == u_over || (v1.pos % 2 == 1) == u_over)
    throw Error(Errc::PatternMismatch, "bigon is a clasp, not a Reidemeister II pattern");
  const int ca = u0.crossing, cb = u1.crossing;
  if (ca == cb) throw Error(Errc::PatternMismatch, "bigon crossings coincide");

  const auto& xs0 = d.crossings();
  std::map<int, int> parent;
  auto find = [&](int x) {
    if (!parent.count(x)) parent[x] = x;
    while (parent[x] != x) x = parent[x];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  auto through = [&](Slot s) { return xs0[s.crossing][(s.pos + 2) % 4]; };
  unite(u, through(u0));
  unite(u, through(u1));
  unite(v, through(v0));
  unite(v, through(v1));

  std::vector<PdTuple> xs;
  for (int i = 0; i < d.n(); ++i)
    if (i != ca && i != cb) {
      PdTuple y = xs0[i];
      for (int& l : y) l = find(l);
      xs.push_back(y);
    }
  std::set<int> present;
  for (const auto& y : xs) present.insert(y.begin(), y.end());
  std::set<int> classes{find(u), find(v)};
  int loops = d.free_loops();
  for (int r : classes)
    if (!present.count(r)) ++loops;
  MoveSpec inv{MoveKind::R2Plus, {find(u), find(v)}, true};
  return {Diagram::make(std::move(xs), loops), inv};
}

MoveResult r3(const Diagram& d, const MoveSpec& m) {
  if (m.site.size() != 3) throw Error(Errc::SiteNotFound, "R3 takes three arcs");
  for (int l : m.site) require_label(d, l);
  const std::set<int> want(m.site.begin(), m.site.end());
  if (want.size() != 3) throw Error(Errc::PatternMismatch, "R3 needs three distinct arcs");
  bool found = false;
  for (const auto& face : faces(d)) {
    if (face.size() != 3) continue;
    std::set<int> got, cs;
    for (const auto& s : face) {
      got.insert(s.label);
      cs.insert(s.from.crossing);
    }
    if (got == want && cs.size() == 3) found = true;
  }
  if (!found) throw Error(Errc::PatternMismatch, "arcs do not bound a triangle");

  int over_over = 0, under_under = 0, mixed = 0;
  for (int l : m.site) {
    const bool a = d.head(l).pos % 2 == 1, b = d.tail(l).pos % 2 == 1;
    if (a && b)
      ++over_over;
    else if (!a && !b)
      ++under_under;
    else
      ++mixed;
  }
  if (over_over != 1 || under_under != 1 || mixed != 1)
    throw Error(Errc::PatternMismatch, "triangle is cyclic; no strand can slide");

  const auto& xs0 = d.crossings();
  auto xs = xs0;
  for (int l : m.site) {
    const Slot t = d.tail(l), h = d.head(l);
    const Slot t_in{t.crossing, (t.pos + 2) % 4}, h_out{h.crossing, (h.pos + 2) % 4};
    const int p = xs0[t_in.crossing][t_in.pos], q = xs0[h_out.crossing][h_out.pos];
    at(xs, t_in) = l;
    at(xs, t) = q;
    at(xs, h) = p;
    at(xs, h_out) = l;
  }
  return {Diagram::make(std::move(xs), d.free_loops()), MoveSpec{MoveKind::R3, m.site, m.chirality}};
}

}  // namespace

MoveResult apply_move_with_inverse(const Diagram& d, const MoveSpec& m) {
  switch (m.kind) {
    case MoveKind::R1Plus: return r1_plus(d, m);
    case MoveKind::R1Minus: return r1_minus(d, m);
    case MoveKind::R2Plus: return r2_plus(d, m);
    case MoveKind::R2Minus: return r2_minus(d, m);
    case MoveKind::R3: return r3(d, m);
  }
  throw Error(Errc::PatternMismatch, "unknown move");
}

Diagram apply_move(const Diagram& d, const MoveSpec& m) { return apply_move_with_inverse(d, m).diagram; }

}  // namespace khov
