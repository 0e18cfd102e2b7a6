#include <doctest.h>

#include <map>

#include "khov/corpus.hpp"
#include "khov/diagram.hpp"
#include "khov/errors.hpp"
#include "khov/oracle.hpp"
#include "support.hpp"

using namespace khov;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::MalformedSyntax;
}

}  // namespace

TEST_CASE("parse_pd: empty text is the crossingless unknot") {
  const Diagram d = parse_pd("");
  CHECK(d.n() == 0);
  CHECK(d.free_loops() == 1);
  CHECK(d.components() == 1);
}

TEST_CASE("parse_pd: left trefoil") {
  const Diagram d = parse_pd(kTrefoil);
  CHECK(d.n() == 3);
  CHECK(d.components() == 1);
  CHECK(d.n_minus() == 3);
  CHECK(d.n_plus() == 0);
}

TEST_CASE("parse_pd: accepts the PD[...] wrapper and loose spacing") {
  CHECK(parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]") == parse_pd(kTrefoil));
  CHECK(parse_pd("  X[ 1 ,4,2,5]X[3,6,4,1]\nX[5,2,6,3] ") == parse_pd(kTrefoil));
}

TEST_CASE("parse_pd: the non-planar 3-crossing code is rejected") {
  CHECK(code_of([] { parse_pd("X[1,4,2,3] X[3,6,4,5] X[5,2,6,1]"); }) == Errc::NonPlanarInconsistency);
}

TEST_CASE("parse_pd: validation errors") {
  CHECK(code_of([] { parse_pd("X[1,4,2,3] X[2,3,1,5]"); }) == Errc::ArcCountMismatch);
  CHECK(code_of([] { parse_pd("X[1,1,2"); }) == Errc::MalformedSyntax);
  CHECK(code_of([] { parse_pd("Y[1,1,2,2]"); }) == Errc::MalformedSyntax);
  // A single kink is well formed.
  CHECK(parse_pd("X[1,1,2,2]").n() == 1);
}

TEST_CASE("parse_gauss: trefoil agrees with the PD trefoil through the Jones oracle") {
  const Diagram g = parse_gauss("O1-U2-O3-U1-O2-U3-");
  CHECK(g.n() == 3);
  CHECK(g.n_minus() == 3);
  CHECK(jones(g) == jones(parse_pd(kTrefoil)));
}

TEST_CASE("parse_gauss: empty and unbalanced codes") {
  const Diagram u = parse_gauss("");
  CHECK(u.n() == 0);
  CHECK(u.free_loops() == 1);
  CHECK(code_of([] { parse_gauss("O1-O1-"); }) == Errc::UnbalancedCode);
  CHECK(code_of([] { parse_gauss("O1U1"); }) == Errc::MalformedSyntax);
  CHECK(code_of([] { parse_gauss("O1+U1-"); }) == Errc::MalformedSyntax);
  CHECK(code_of([] { parse_gauss("O1-Q1-"); }) == Errc::MalformedSyntax);
}

TEST_CASE("parse_gauss: two components") {
  const Diagram hopf = parse_gauss("O1-U2- | U1-O2-");
  CHECK(hopf.components() == 2);
  CHECK(jones(hopf) == jones(parse_pd(corpus_entry("hopf").pd)));
}

TEST_CASE("crossing_signs") {
  CHECK(crossing_signs(parse_pd("")) == std::pair{0, 0});
  CHECK(crossing_signs(parse_pd(kTrefoil)) == std::pair{0, 3});
  CHECK(crossing_signs(mirror(parse_pd(kTrefoil))) == std::pair{3, 0});
  CHECK(crossing_signs(parse_pd("X[1,1,2,2]")) == std::pair{1, 0});
  CHECK(crossing_signs(parse_pd("X[1,2,2,1]")) == std::pair{0, 1});
}

TEST_CASE("mirror flips every sign and the Jones polynomial") {
  for (const auto& e : corpus()) {
    const Diagram d = parse_pd(e.pd);
    const Diagram m = mirror(d);
    CHECK(m.n_plus() == d.n_minus());
    CHECK(m.n_minus() == d.n_plus());
    LaurentPoly flipped;
    for (const auto& [ex, c] : jones(d).terms()) flipped.add(-ex, c);
    CHECK(jones(m) == flipped);
  }
}

TEST_CASE("to_pd round-trips") {
  for (const auto& e : corpus()) {
    const Diagram d = parse_pd(e.pd);
    CHECK(parse_pd(to_pd(d)) == d);
  }
  const Diagram two_loops = parse_pd("Loop[1] Loop[2]");
  CHECK(two_loops.free_loops() == 2);
  CHECK(parse_pd(to_pd(two_loops)) == two_loops);
  for (const auto& d : testing::random_diagrams(30, 8, 11)) CHECK(parse_pd(to_pd(d)) == d);
}

TEST_CASE("every label occurs exactly twice and components close up") {
  for (const auto& d : testing::random_diagrams(40, 8, 5)) {
    std::map<int, int> count;
    for (const auto& x : d.crossings())
      for (int l : x) ++count[l];
    for (const auto& [l, c] : count) CHECK(c == 2);
    std::size_t arcs = 0;
    for (const auto& s : d.strands()) arcs += s.size();
    CHECK(arcs == static_cast<std::size_t>(d.arc_count()));
    CHECK(d.n_plus() + d.n_minus() == d.n());
  }
}

TEST_CASE("apply_move: R1 on the unknot and back") {
  const Diagram u = parse_pd("");
  const auto kink = apply_move_with_inverse(u, {MoveKind::R1Plus, {}, true});
  CHECK(kink.diagram.n() == 1);
  CHECK(kink.diagram.n_plus() == 1);
  const Diagram back = apply_move(kink.diagram, kink.inverse);
  CHECK(back.n() == 0);
  CHECK(back.free_loops() == 1);
}

TEST_CASE("apply_move: R2 on the trefoil keeps the Jones polynomial") {
  const Diagram t = parse_pd(kTrefoil);
  const Diagram t2 = apply_move(t, {MoveKind::R2Plus, {1, 3}, true});
  CHECK(t2.n() == 5);
  CHECK(jones(t2) == jones(t));
}

TEST_CASE("apply_move: errors") {
  const Diagram t = parse_pd(kTrefoil);
  CHECK(code_of([&] { apply_move(t, {MoveKind::R1Plus, {99}, true}); }) == Errc::SiteNotFound);
  CHECK(code_of([&] { apply_move(t, {MoveKind::R1Minus, {1}, true}); }) == Errc::PatternMismatch);
  CHECK(code_of([&] { apply_move(t, {MoveKind::R3, {1, 2, 3}, true}); }) == Errc::PatternMismatch);
}

TEST_CASE("apply_move then its inverse preserves the Jones polynomial") {
  const std::vector<Diagram> seeds{parse_pd(kTrefoil), parse_pd(corpus_entry("figure-eight").pd),
                                   parse_pd(corpus_entry("hopf").pd)};
  int moves = 0;
  for (const auto& d : seeds) {
    const LaurentPoly j = jones(d);
    for (int a : d.labels())
      for (bool chir : {true, false}) {
        const auto r1 = apply_move_with_inverse(d, {MoveKind::R1Plus, {a}, chir});
        CHECK(jones(r1.diagram) == j);
        CHECK(jones(apply_move(r1.diagram, r1.inverse)) == j);
        ++moves;
        for (int b : d.labels()) {
          if (a == b) continue;
          try {
            const auto r2 = apply_move_with_inverse(d, {MoveKind::R2Plus, {a, b}, chir});
            CHECK(jones(r2.diagram) == j);
            CHECK(apply_move(r2.diagram, r2.inverse) == d);
            ++moves;
          } catch (const Error& e) {
            CHECK(e.code() == Errc::PatternMismatch);
          }
        }
      }
  }
  CHECK(moves > 50);
}

TEST_CASE("R3 on the R2-extended figure-eight") {
  const Diagram f2 = parse_pd(corpus_entry("figure-eight-r2").pd);
  const auto r3 = apply_move_with_inverse(f2, {MoveKind::R3, {1, 4, 6}, true});
  CHECK(r3.diagram.n() == 6);
  CHECK(r3.diagram == parse_pd(corpus_entry("figure-eight-r2r3").pd));
  CHECK(jones(r3.diagram) == jones(f2));
  CHECK(apply_move(r3.diagram, r3.inverse) == f2);
}

TEST_CASE("corpus classes share a Jones polynomial") {
  std::map<std::string, LaurentPoly> seen;
  for (const auto& e : corpus()) {
    const LaurentPoly j = jones(parse_pd(e.pd));
    auto [it, fresh] = seen.emplace(e.equivalence_class, j);
    if (!fresh) CHECK_MESSAGE(it->second == j, e.name);
  }
}
