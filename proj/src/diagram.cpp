#include "khov/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "khov/errors.hpp"

namespace khov {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Orientation solver. Slots a/c are fixed by the convention; b/d follow from
// the two-occurrence rule on labels and the pass-through rule at crossings.
std::vector<std::array<bool, 4>> orient(const std::vector<PdTuple>& xs,
                                        const std::vector<std::array<Slot, 2>>& occ,
                                        const std::vector<int>& labels) {
  const int n = static_cast<int>(xs.size());
  std::vector<std::array<int, 4>> in(n, {-1, -1, -1, -1});
  for (int c = 0; c < n; ++c) {
    in[c][0] = 1;
    in[c][2] = 0;
  }
  auto conflict = [] { throw Error(Errc::NonPlanarInconsistency, "arc orientations are inconsistent"); };
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t li = 0; li < labels.size(); ++li) {
        const Slot s0 = occ[li][0], s1 = occ[li][1];
        int& v0 = in[s0.crossing][s0.pos];
        int& v1 = in[s1.crossing][s1.pos];
        if (v0 >= 0 && v1 >= 0) {
          if (v0 == v1) conflict();
        } else if (v0 >= 0) {
          v1 = 1 - v0;
          changed = true;
        } else if (v1 >= 0) {
          v0 = 1 - v1;
          changed = true;
        }
      }
      for (int c = 0; c < n; ++c) {
        int& b = in[c][1];
        int& d = in[c][3];
        if (b >= 0 && d >= 0) {
          if (b == d) conflict();
        } else if (b >= 0) {
          d = 1 - b;
          changed = true;
        } else if (d >= 0) {
          b = 1 - d;
          changed = true;
        }
      }
    }
  };
  propagate();
  // Components that only ever pass over: pick a direction from label order.
  for (int c = 0; c < n; ++c) {
    if (in[c][1] >= 0) continue;
    const int b = xs[c][1], d = xs[c][3];
    in[c][3] = (b == d + 1 || (d != b + 1 && d < b)) ? 1 : 0;
    in[c][1] = 1 - in[c][3];
    propagate();
  }
  std::vector<std::array<bool, 4>> out(n);
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) out[c][p] = in[c][p] == 1;
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (i_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == ',')) ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= s_.size();
  }
  bool accept(std::string_view word) {
    skip_space();
    if (s_.substr(i_, word.size()) == word) {
      i_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char ch) {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ >= s_.size() || s_[i_] != ch) fail(std::string("expected '") + ch + "'");
    ++i_;
  }
  int integer() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a positive integer");
    if (i_ - start > 9) fail("integer too long");
    int v = std::stoi(std::string(s_.substr(start, i_ - start)));
    if (v <= 0) fail("labels must be positive");
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::MalformedSyntax, what + " at offset " + std::to_string(i_));
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Diagram Diagram::make(std::vector<PdTuple> crossings, int free_loops) {
  if (free_loops < 0) throw Error(Errc::MalformedSyntax, "negative loop count");
  if (crossings.empty() && free_loops == 0) throw Error(Errc::MalformedSyntax, "diagram has no components");
  Diagram d;
  d.crossings_ = std::move(crossings);
  d.free_loops_ = free_loops;
  const int n = d.n();

  std::map<int, int> counts;
  for (const auto& x : d.crossings_)
    for (int l : x) {
      if (l <= 0) throw Error(Errc::MalformedSyntax, "labels must be positive");
      ++counts[l];
    }
  for (const auto& [l, c] : counts)
    if (c != 2)
      throw Error(Errc::ArcCountMismatch, "label " + std::to_string(l) + " occurs " + std::to_string(c) + " times");
  for (const auto& [l, c] : counts) d.labels_.push_back(l);

  d.occurrences_.assign(d.labels_.size(), {Slot{}, Slot{}});
  std::vector<int> fill(d.labels_.size(), 0);
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      int li = d.label_index(d.crossings_[c][p]);
      d.occurrences_[li][fill[li]++] = Slot{c, p};
    }

  d.incoming_ = orient(d.crossings_, d.occurrences_, d.labels_);

  // Planarity: the rotation system must be a sphere on every connected piece.
  if (n > 0) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& o : d.occurrences_) parent[find_root(parent, o[0].crossing)] = find_root(parent, o[1].crossing);
    int pieces = 0;
    for (int c = 0; c < n; ++c) pieces += find_root(parent, c) == c;
    const auto fs = faces(d);
    if (static_cast<int>(fs.size()) != n + 2 * pieces)
      throw Error(Errc::NonPlanarInconsistency, "diagram is not planar (" + std::to_string(fs.size()) +
                                                    " faces for " + std::to_string(n) + " crossings)");
  }

  d.signs_.resize(n);
  for (int c = 0; c < n; ++c) {
    d.signs_[c] = d.incoming_[c][3] ? 1 : -1;
    (d.signs_[c] > 0 ? d.n_plus_ : d.n_minus_)++;
  }

  std::vector<bool> seen(d.labels_.size(), false);
  for (std::size_t li = 0; li < d.labels_.size(); ++li) {
    if (seen[li]) continue;
    std::vector<int> strand;
    int cur = static_cast<int>(li);
    while (!seen[cur]) {
      seen[cur] = true;
      strand.push_back(d.labels_[cur]);
      Slot h = d.head(d.labels_[cur]);
      cur = d.label_index(d.crossings_[h.crossing][(h.pos + 2) % 4]);
    }
    if (cur != static_cast<int>(li)) throw Error(Errc::NonPlanarInconsistency, "strand tracing does not close");
    d.strands_.push_back(std::move(strand));
  }
  d.components_ = static_cast<int>(d.strands_.size()) + free_loops;
  return d;
}

int Diagram::label_index(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

Slot Diagram::head(int label) const {
  int li = label_index(label);
  if (li < 0) throw Error(Errc::SiteNotFound, "no arc " + std::to_string(label));
  const auto& o = occurrences_[li];
  return incoming_[o[0].crossing][o[0].pos] ? o[0] : o[1];
}

Slot Diagram::tail(int label) const {
  int li = label_index(label);
  if (li < 0) throw Error(Errc::SiteNotFound, "no arc " + std::to_string(label));
  const auto& o = occurrences_[li];
  return incoming_[o[0].crossing][o[0].pos] ? o[1] : o[0];
}

std::vector<std::vector<FaceSide>> faces(const Diagram& d) {
  const auto& xs = d.crossings();
  const int n = d.n();
  // The other occurrence of the label at (c, p).
  std::map<int, std::array<Slot, 2>> occ;
  std::map<int, int> fill;
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) occ[xs[c][p]][fill[xs[c][p]]++] = Slot{c, p};
  auto other = [&](Slot s) {
    const auto& o = occ.at(xs[s.crossing][s.pos]);
    return o[0] == s ? o[1] : o[0];
  };
  std::vector<std::vector<FaceSide>> out;
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      if (seen[c][p]) continue;
      std::vector<FaceSide> face;
      Slot s{c, p};
      while (!seen[s.crossing][s.pos]) {
        seen[s.crossing][s.pos] = true;
        Slot t = other(s);
        face.push_back(FaceSide{xs[s.crossing][s.pos], s, t});
        s = Slot{t.crossing, (t.pos + 1) % 4};
      }
      out.push_back(std::move(face));
    }
  return out;
}

Diagram parse_pd(std::string_view text) {
  Cursor cur(text);
  bool wrapped = cur.accept("PD[");
  std::vector<PdTuple> xs;
  int loops = 0;
  while (!cur.done()) {
    if (wrapped && cur.accept("]")) {
      if (!cur.done()) cur.fail("trailing text after PD[...]");
      wrapped = false;
      break;
    }
    if (cur.accept("X[")) {
      PdTuple t{};
      for (int k = 0; k < 4; ++k) {
        t[k] = cur.integer();
        if (k < 3) cur.expect(',');
      }
      cur.expect(']');
      xs.push_back(t);
    } else if (cur.accept("Loop[")) {
      cur.integer();
      cur.expect(']');
      ++loops;
    } else {
      cur.fail("expected X[a,b,c,d]");
    }
  }
  if (wrapped) cur.fail("unterminated PD[");
  if (xs.empty() && loops == 0) loops = 1;
  return Diagram::make(std::move(xs), loops);
}

Diagram parse_gauss(std::string_view text) {
  struct Event {
    int crossing;
    bool over;
    int sign;  // 0 when not given
  };
  std::vector<std::vector<Event>> comps(1);
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> void {
    throw Error(Errc::MalformedSyntax, what + " at offset " + std::to_string(i));
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
    } else if (ch == '|') {
      comps.emplace_back();
      ++i;
    } else if (ch == 'O' || ch == 'U' || ch == 'o' || ch == 'u') {
      Event e{0, ch == 'O' || ch == 'o', 0};
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i || i - start > 9) fail("expected crossing number");
      e.crossing = std::stoi(std::string(text.substr(start, i - start)));
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) e.sign = text[i++] == '+' ? 1 : -1;
      comps.back().push_back(e);
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }

  struct Info {
    int over_count = 0, under_count = 0, sign = 0;
  };
  std::map<int, Info> info;
  for (const auto& comp : comps)
    for (const auto& e : comp) {
      auto& in = info[e.crossing];
      (e.over ? in.over_count : in.under_count)++;
      if (e.sign != 0) {
        if (in.sign != 0 && in.sign != e.sign)
          throw Error(Errc::MalformedSyntax, "crossing " + std::to_string(e.crossing) + " has conflicting signs");
        in.sign = e.sign;
      }
    }
  for (const auto& [c, in] : info) {
    if (in.over_count != 1 || in.under_count != 1)
      throw Error(Errc::UnbalancedCode,
                  "crossing " + std::to_string(c) + " must be visited once over and once under");
    if (in.sign == 0) throw Error(Errc::MalformedSyntax, "crossing " + std::to_string(c) + " has no sign");
  }

  std::map<int, int> index;
  for (const auto& [c, in] : info) index.emplace(c, static_cast<int>(index.size()));
  std::vector<PdTuple> xs(index.size(), PdTuple{0, 0, 0, 0});
  int loops = 0;
  int base = 0;
  for (const auto& comp : comps) {
    const int len = static_cast<int>(comp.size());
    if (len == 0) {
      ++loops;
      continue;
    }
    // Arc base+t+1 enters event t and leaves event t-1.
    for (int t = 0; t < len; ++t) {
      const auto& e = comp[t];
      const int in_arc = base + t + 1;
      const int out_arc = base + (t + 1) % len + 1;
      auto& x = xs[index.at(e.crossing)];
      if (!e.over) {
        x[0] = in_arc;
        x[2] = out_arc;
      } else if (info.at(e.crossing).sign > 0) {
        x[3] = in_arc;
        x[1] = out_arc;
      } else {
        x[1] = in_arc;
        x[3] = out_arc;
      }
    }
    base += len;
  }
  // Components separated by '|' with nothing at all mean a bare unknot.
  if (xs.empty() && loops == 0) loops = 1;
  return Diagram::make(std::move(xs), loops);
}

std::string to_pd(const Diagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : d.crossings()) {
    if (!first) os << ' ';
    first = false;
    os << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ']';
  }
  if (d.n() > 0 || d.free_loops() != 1)
    for (int i = 0; i < d.free_loops(); ++i) {
      if (!first) os << ' ';
      first = false;
      os << "Loop[" << i + 1 << ']';
    }
  return os.str();
}

std::pair<int, int> crossing_signs(const Diagram& d) { return {d.n_plus(), d.n_minus()}; }

Diagram mirror(const Diagram& d) {
  std::vector<PdTuple> xs;
  xs.reserve(d.n());
  for (int c = 0; c < d.n(); ++c) {
    const auto& x = d.crossings()[c];
    if (d.incoming(c, 3))
      xs.push_back({x[3], x[0], x[1], x[2]});
    else
      xs.push_back({x[1], x[2], x[3], x[0]});
  }
  return Diagram::make(std::move(xs), d.free_loops());
}

}  // namespace khov
