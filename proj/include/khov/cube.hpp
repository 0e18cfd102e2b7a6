#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "khov/diagram.hpp"
#include "khov/parallel.hpp"

namespace khov {

// Resolution indices are bit masks: bit i is the smoothing of crossing i.
using Vertex = std::uint32_t;

constexpr int kMaxCubeDimension = 24;

enum class ArrowConvention { Normal, Flipped };

struct Arrow {
  int crossing;
  int source;  // circle index
  int target;
  bool is_loop() const noexcept { return source == target; }
};

struct Resolution {
  Vertex index = 0;
  int n = 0;
  // Arc labels of each circle, sorted; circles sorted by minimal label.
  // Crossingless components come last with empty label lists.
  std::vector<std::vector<int>> circles;
  std::vector<Arrow> arrows;
  // circle_of[label_index] for every arc of the diagram.
  std::vector<int> circle_of;

  int k() const noexcept { return static_cast<int>(circles.size()); }
  int height() const noexcept;
};

Resolution resolve(const Diagram& d, Vertex I, ArrowConvention conv = ArrowConvention::Normal);

// Circle of `to` holding the smallest arc label of circle c of `from`.
// Crossingless circles are matched by their position from the end.
int carry_circle(const Resolution& from, const Resolution& to, int c);

// (-1)^(number of ones of I below coordinate i).
int khovanov_sign(Vertex I, int i);

enum class EdgeKind { Merge, Split };

struct CubeEdge {
  Vertex from;
  Vertex to;
  int crossing;
  int sign;
  EdgeKind kind;
};

// Ordered by (from, crossing).
std::vector<CubeEdge> cube_edges(const Diagram& d);

struct CubeFace {
  Vertex base;
  int i;
  int j;  // i < j
  friend bool operator==(const CubeFace&, const CubeFace&) = default;
};

// Ordered by (base, i, j).
std::vector<CubeFace> cube_faces(int n);
inline std::vector<CubeFace> cube_faces(const Diagram& d) { return cube_faces(d.n()); }

// All 2^n resolutions, index-aligned with the vertex masks.
std::vector<Resolution> resolve_all(const Diagram& d, ArrowConvention conv, Exec exec = Exec::Parallel);

// Vertices with |I| = h, ascending.
std::vector<Vertex> vertices_of_height(int n, int h);

}  // namespace khov
