#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace khov {

// One PD crossing (a,b,c,d): counterclockwise from the incoming under-arc.
// a -> c is the under strand, b/d the over strand.
using PdTuple = std::array<int, 4>;

// Where an arc label sits: crossing index and slot 0..3.
struct Slot {
  int crossing = -1;
  int pos = -1;
  friend bool operator==(const Slot&, const Slot&) = default;
};

// An oriented link diagram. Built only through Diagram::make, which validates
// the input and derives orientation, signs and components.
class Diagram {
 public:
  static Diagram make(std::vector<PdTuple> crossings, int free_loops = 0);

  const std::vector<PdTuple>& crossings() const noexcept { return crossings_; }
  int n() const noexcept { return static_cast<int>(crossings_.size()); }
  int free_loops() const noexcept { return free_loops_; }
  int components() const noexcept { return components_; }
  int n_plus() const noexcept { return n_plus_; }
  int n_minus() const noexcept { return n_minus_; }
  int sign(int crossing) const { return signs_[crossing]; }
  const std::vector<int>& signs() const noexcept { return signs_; }

  // Sorted distinct arc labels; arc_count() == 2n.
  const std::vector<int>& labels() const noexcept { return labels_; }
  int arc_count() const noexcept { return static_cast<int>(labels_.size()); }
  // Dense index of a label in labels(), or -1.
  int label_index(int label) const;

  // Slot where the arc ends (enters a crossing) and where it starts.
  Slot head(int label) const;
  Slot tail(int label) const;
  // Whether slot (c, pos) is where its arc enters crossing c.
  bool incoming(int crossing, int pos) const { return incoming_[crossing][pos]; }

  // Arc labels of each traced link component, in orientation order.
  const std::vector<std::vector<int>>& strands() const noexcept { return strands_; }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_;
  }

 private:
  std::vector<PdTuple> crossings_;
  int free_loops_ = 0;
  int components_ = 0;
  int n_plus_ = 0;
  int n_minus_ = 0;
  std::vector<int> signs_;
  std::vector<int> labels_;
  std::vector<std::array<bool, 4>> incoming_;
  std::vector<std::array<Slot, 2>> occurrences_;  // per label index
  std::vector<std::vector<int>> strands_;
};

Diagram parse_pd(std::string_view text);
Diagram parse_gauss(std::string_view text);
std::string to_pd(const Diagram& d);
std::pair<int, int> crossing_signs(const Diagram& d);
Diagram mirror(const Diagram& d);

// Faces of the underlying 4-valent map; each face lists the boundary arcs in
// traversal order, as (label, starting slot) pairs, with the face on the right.
struct FaceSide {
  int label;
  Slot from;
  Slot to;
};
std::vector<std::vector<FaceSide>> faces(const Diagram& d);

enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

// R1+: site = {arc} (empty on a crossingless loop); chirality = positive kink.
// R1-: site = {loop arc}.  R2+: site = {e, f}; chirality = e passes over f.
// R2-: site = {bigon arc, bigon arc}.  R3: site = the three triangle arcs.
struct MoveSpec {
  MoveKind kind = MoveKind::R1Plus;
  std::vector<int> site;
  bool chirality = true;
};

struct MoveResult {
  Diagram diagram;
  MoveSpec inverse;
};

MoveResult apply_move_with_inverse(const Diagram& d, const MoveSpec& m);
Diagram apply_move(const Diagram& d, const MoveSpec& m);

}  // namespace khov
