#include "khov/cube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "khov/errors.hpp"
#include "khov/parallel.hpp"

namespace khov {

int Resolution::height() const noexcept { return std::popcount(index); }

Resolution resolve(const Diagram& d, Vertex I, ArrowConvention conv) {
  const int n = d.n();
  if (n > kMaxCubeDimension) throw Error(Errc::TooLarge, "too many crossings for the cube");
  Resolution r;
  r.index = I;
  r.n = n;
  const int arcs = d.arc_count();
  std::vector<int> parent(arcs);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int c = 0; c < n; ++c) {
    const auto& x = d.crossings()[c];
    const int a = d.label_index(x[0]), b = d.label_index(x[1]), cc = d.label_index(x[2]), dd = d.label_index(x[3]);
    if ((I >> c) & 1u) {
      unite(a, dd);
      unite(b, cc);
    } else {
      unite(a, b);
      unite(cc, dd);
    }
  }
  // Label indices ascend with labels, so the root is the minimal label.
  std::vector<int> circle_of_root(arcs, -1);
  r.circle_of.assign(arcs, -1);
  for (int li = 0; li < arcs; ++li) {
    const int root = find(li);
    if (circle_of_root[root] < 0) {
      circle_of_root[root] = r.k();
      r.circles.emplace_back();
    }
    r.circle_of[li] = circle_of_root[root];
    r.circles[r.circle_of[li]].push_back(d.labels()[li]);
  }
  for (int i = 0; i < d.free_loops(); ++i) r.circles.emplace_back();

  r.arrows.reserve(n);
  for (int c = 0; c < n; ++c) {
    const auto& x = d.crossings()[c];
    int src = r.circle_of[d.label_index(x[2])];
    int dst = r.circle_of[d.label_index(x[0])];
    if (conv == ArrowConvention::Flipped) std::swap(src, dst);
    r.arrows.push_back(Arrow{c, src, dst});
  }
  return r;
}

int khovanov_sign(Vertex I, int i) {
  if (i < 0 || i >= kMaxCubeDimension) throw Error(Errc::IndexOutOfRange, "coordinate out of range");
  if ((I >> i) & 1u) throw Error(Errc::CoordinateAlreadyOne, "coordinate " + std::to_string(i) + " is already 1");
  const Vertex below = I & ((Vertex{1} << i) - 1u);
  return std::popcount(below) % 2 == 0 ? 1 : -1;
}

std::vector<CubeEdge> cube_edges(const Diagram& d) {
  const int n = d.n();
  std::vector<CubeEdge> out;
  if (n == 0) return out;
  out.reserve(static_cast<std::size_t>(n) << (n - 1));
  for (Vertex I = 0; I < (Vertex{1} << n); ++I) {
    bool needed = false;
    for (int i = 0; i < n; ++i) needed |= !((I >> i) & 1u);
    if (!needed) continue;
    const Resolution r = resolve(d, I);
    for (int i = 0; i < n; ++i) {
      if ((I >> i) & 1u) continue;
      const Arrow& a = r.arrows[i];
      out.push_back(CubeEdge{I, I | (Vertex{1} << i), i, khovanov_sign(I, i),
                             a.is_loop() ? EdgeKind::Split : EdgeKind::Merge});
    }
  }
  return out;
}

std::vector<CubeFace> cube_faces(int n) {
  std::vector<CubeFace> out;
  for (Vertex I = 0; I < (Vertex{1} << n); ++I)
    for (int i = 0; i < n; ++i) {
      if ((I >> i) & 1u) continue;
      for (int j = i + 1; j < n; ++j)
        if (!((I >> j) & 1u)) out.push_back(CubeFace{I, i, j});
    }
  return out;
}

int carry_circle(const Resolution& rI, const Resolution& rJ, int c) {
  if (rI.circles[c].empty()) {
    const int loops = rI.k() - c;  // position counted from the end
    return rJ.k() - loops;
  }
  const int label = rI.circles[c].front();
  for (int j = 0; j < rJ.k(); ++j)
    if (std::binary_search(rJ.circles[j].begin(), rJ.circles[j].end(), label)) return j;
  throw Error(Errc::DimensionMismatch, "circle has no image");
}

std::vector<Resolution> resolve_all(const Diagram& d, ArrowConvention conv, Exec exec) {
  const std::size_t count = std::size_t{1} << d.n();
  std::vector<Resolution> out(count);
  parallel_for(exec, count, [&](std::size_t I) { out[I] = resolve(d, static_cast<Vertex>(I), conv); });
  return out;
}

std::vector<Vertex> vertices_of_height(int n, int h) {
  std::vector<Vertex> out;
  for (Vertex I = 0; I < (Vertex{1} << n); ++I)
    if (std::popcount(I) == h) out.push_back(I);
  return out;
}

}  // namespace khov
