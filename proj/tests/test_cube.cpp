#include <doctest.h>

#include <algorithm>
#include <set>

#include "khov/corpus.hpp"
#include "khov/cube.hpp"
#include "khov/errors.hpp"
#include "support.hpp"

using namespace khov;

namespace {

const Diagram& trefoil() {
  static const Diagram d = parse_pd(corpus_entry("trefoil").pd);
  return d;
}

}  // namespace

TEST_CASE("resolve: trefoil circle counts at the corners") {
  CHECK(resolve(trefoil(), 0b000).k() == 3);
  CHECK(resolve(trefoil(), 0b111).k() == 2);
  CHECK(testing::walk_circles(trefoil(), 0b000) == 3);
  CHECK(testing::walk_circles(trefoil(), 0b111) == 2);
}

TEST_CASE("resolve: the crossingless unknot has one circle and no arrows") {
  const Resolution r = resolve(parse_pd(""), 0);
  CHECK(r.k() == 1);
  CHECK(r.arrows.empty());
}

TEST_CASE("resolve: circle counts agree with the walking oracle") {
  std::vector<Diagram> ds;
  for (const auto& e : corpus()) ds.push_back(parse_pd(e.pd));
  for (const auto& d : testing::random_diagrams(25, 7, 3)) ds.push_back(d);
  for (const auto& d : ds)
    for (Vertex I = 0; I < (Vertex{1} << d.n()); ++I) CHECK(resolve(d, I).k() == testing::walk_circles(d, I));
}

TEST_CASE("resolve: structural invariants") {
  for (const auto& e : corpus()) {
    const Diagram d = parse_pd(e.pd);
    for (Vertex I = 0; I < (Vertex{1} << d.n()); ++I) {
      const Resolution r = resolve(d, I);
      CHECK(r.height() == std::popcount(I));
      REQUIRE(r.arrows.size() == static_cast<std::size_t>(d.n()));
      for (int c = 0; c < d.n(); ++c) {
        CHECK(r.arrows[c].crossing == c);
        CHECK(r.arrows[c].source >= 0);
        CHECK(r.arrows[c].source < r.k());
        CHECK(r.arrows[c].target >= 0);
        CHECK(r.arrows[c].target < r.k());
      }
      // Circles partition the arcs and are ordered by minimal label.
      std::multiset<int> seen;
      int last_min = 0;
      for (const auto& circle : r.circles) {
        if (circle.empty()) continue;
        CHECK(std::is_sorted(circle.begin(), circle.end()));
        CHECK(circle.front() > last_min);
        last_min = circle.front();
        seen.insert(circle.begin(), circle.end());
      }
      CHECK(std::vector<int>(seen.begin(), seen.end()) == d.labels());
      for (std::size_t a = 0; a < d.labels().size(); ++a) {
        const auto& circle = r.circles[r.circle_of[a]];
        CHECK(std::binary_search(circle.begin(), circle.end(), d.labels()[a]));
      }
    }
  }
}

TEST_CASE("resolve: flipping swaps every arrow") {
  const Resolution a = resolve(trefoil(), 0b010);
  const Resolution b = resolve(trefoil(), 0b010, ArrowConvention::Flipped);
  CHECK(a.circles == b.circles);
  for (std::size_t c = 0; c < a.arrows.size(); ++c) {
    CHECK(a.arrows[c].source == b.arrows[c].target);
    CHECK(a.arrows[c].target == b.arrows[c].source);
  }
}

TEST_CASE("resolve_all matches resolve, serial and parallel") {
  const Diagram d = parse_pd(corpus_entry("figure-eight-r2").pd);
  const auto serial = resolve_all(d, ArrowConvention::Normal, Exec::Serial);
  const auto parallel = resolve_all(d, ArrowConvention::Normal, Exec::Parallel);
  REQUIRE(serial.size() == 64);
  REQUIRE(parallel.size() == 64);
  for (Vertex I = 0; I < 64; ++I) {
    CHECK(serial[I].circles == parallel[I].circles);
    CHECK(serial[I].circles == resolve(d, I).circles);
    CHECK(serial[I].index == I);
  }
}

TEST_CASE("khovanov_sign") {
  CHECK(khovanov_sign(0b000, 0) == 1);
  CHECK(khovanov_sign(0b101, 1) == -1);
  CHECK(khovanov_sign(0b011, 2) == 1);
  CHECK_THROWS_AS(khovanov_sign(0b001, 0), Error);
  try {
    khovanov_sign(0b010, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CoordinateAlreadyOne);
  }
}

TEST_CASE("cube_edges: counts, heights and kinds") {
  CHECK(cube_edges(parse_pd("")).empty());
  CHECK(cube_edges(parse_pd(corpus_entry("hopf").pd)).size() == 4);
  for (const auto& e : corpus()) {
    const Diagram d = parse_pd(e.pd);
    const auto edges = cube_edges(d);
    CHECK(edges.size() == (d.n() == 0 ? 0u : static_cast<std::size_t>(d.n()) << (d.n() - 1)));
    for (const auto& edge : edges) {
      CHECK(edge.to == (edge.from | (Vertex{1} << edge.crossing)));
      CHECK(edge.from != edge.to);
      CHECK(edge.sign == khovanov_sign(edge.from, edge.crossing));
      const int kI = testing::walk_circles(d, edge.from);
      const int kJ = testing::walk_circles(d, edge.to);
      CHECK(std::abs(kJ - kI) == 1);
      CHECK((edge.kind == EdgeKind::Merge) == (kJ == kI - 1));
    }
  }
}

TEST_CASE("cube_faces: counts and anticommuting signs") {
  CHECK(cube_faces(1).empty());
  CHECK(cube_faces(2).size() == 1);
  CHECK(cube_faces(3).size() == 6);
  CHECK(cube_faces(5).size() == 10u * 8u);
  for (const auto& f : cube_faces(5)) {
    CHECK(f.i < f.j);
    CHECK(((f.base >> f.i) & 1u) == 0);
    CHECK(((f.base >> f.j) & 1u) == 0);
    const Vertex bi = f.base | (Vertex{1} << f.i);
    const Vertex bj = f.base | (Vertex{1} << f.j);
    const int product =
        khovanov_sign(f.base, f.i) * khovanov_sign(bi, f.j) * khovanov_sign(f.base, f.j) * khovanov_sign(bj, f.i);
    CHECK(product == -1);
  }
}

TEST_CASE("vertices_of_height") {
  CHECK(vertices_of_height(3, 0) == std::vector<Vertex>{0});
  CHECK(vertices_of_height(3, 2) == std::vector<Vertex>{0b011, 0b101, 0b110});
  CHECK(vertices_of_height(4, 4) == std::vector<Vertex>{0b1111});
}

TEST_CASE("carry_circle follows the smallest label") {
  const Diagram& d = trefoil();
  const Resolution from = resolve(d, 0b000);
  const Resolution to = resolve(d, 0b001);
  for (int c = 0; c < from.k(); ++c) {
    const int target = carry_circle(from, to, c);
    const auto& circle = to.circles[target];
    CHECK(std::binary_search(circle.begin(), circle.end(), from.circles[c].front()));
  }
}
