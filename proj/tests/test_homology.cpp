#include <doctest.h>

#include <random>

#include "khov/corpus.hpp"
#include "khov/errors.hpp"
#include "khov/homology.hpp"
#include "khov/oracle.hpp"
#include "support.hpp"

using namespace khov;

namespace {

BigMatrix big(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size(), c = rows.begin()->size();
  BigMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

BigMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long bound) {
  BigMatrix m(r, c);
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

void check_smith(const BigMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(testing::det(s.u)) == 1);
  CHECK(abs(testing::det(s.v)) == 1);
  mpz_class prev = 1;
  bool zero_seen = false;
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j) {
      if (i != j) {
        CHECK(s.d(i, j) == 0);
        continue;
      }
      const mpz_class& v = s.d(i, i);
      if (v == 0) {
        zero_seen = true;
        continue;
      }
      CHECK(!zero_seen);
      CHECK(v > 0);
      CHECK(v % prev == 0);
      prev = v;
    }
  CHECK(testing::rank_q(m) == testing::rank_q(s.d));
}

// Homology of one (t, q) block predicted by ranks over Q, F_2 and F_3.
struct Expected {
  std::size_t betti;
  std::size_t two_torsion;    // number of invariant factors divisible by 2
  std::size_t three_torsion;  // ... by 3
};

Expected block_oracle(const BigradedComplex& c, std::size_t t, int q) {
  std::size_t dim = 0;
  for (int g : c.q[t]) dim += g == q;
  std::size_t out_rank = 0, in_rank = 0, in_mod2 = 0, in_mod3 = 0;
  if (t + 1 < c.degrees()) out_rank = testing::rank_q(testing::q_block(c, t, q));
  if (t > 0) {
    const BigMatrix in = testing::q_block(c, t - 1, q);
    in_rank = testing::rank_q(in);
    in_mod2 = testing::rank_mod(in, 2);
    in_mod3 = testing::rank_mod(in, 3);
  }
  return {dim - out_rank - in_rank, in_rank - in_mod2, in_rank - in_mod3};
}

void check_against_oracle(const BigradedComplex& c) {
  const HomologyTable table = homology(c);
  std::set<std::pair<int, int>> bidegrees;
  for (std::size_t t = 0; t < c.degrees(); ++t)
    for (int q : c.q[t]) bidegrees.insert({static_cast<int>(t), q});
  std::size_t groups = 0;
  for (const auto& [t, q] : bidegrees) {
    const Expected e = block_oracle(c, t, q);
    const HomologyGroup* g = table.find(c.h_min + t, q);
    std::size_t two = 0, three = 0;
    if (g) {
      for (const auto& f : g->torsion) {
        two += f % 2 == 0;
        three += f % 3 == 0;
      }
    }
    CHECK((g ? g->betti : 0) == e.betti);
    CHECK(two == e.two_torsion);
    CHECK(three == e.three_torsion);
    groups += e.betti > 0 || e.two_torsion > 0 || e.three_torsion > 0;
  }
  CHECK(table.groups.size() >= groups);
}

HomologyTable table_of(const char* name, RingParams p = RingParams::even()) {
  return homology(build_unreduced(parse_pd(corpus_entry(name).pd), p));
}

}  // namespace

TEST_CASE("smith_normal_form: examples") {
  CHECK(smith_normal_form(big({{0}})).d == big({{0}}));
  CHECK(smith_normal_form(big({{2, 4}, {6, 8}})).d == big({{2, 0}, {0, 4}}));
  CHECK(smith_normal_form(big({{2, 0}, {0, 3}})).d == big({{1, 0}, {0, 6}}));
  check_smith(big({{0, 0, 0}, {0, 0, 0}}));
  check_smith(big({{4, 6, 10}}));
}

TEST_CASE("smith_normal_form: random matrices re-multiply") {
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    check_smith(random_matrix(rng, r, c, 9));
  }
  check_smith(random_matrix(rng, 6, 7, 9));
}

TEST_CASE("smith_normal_form: entries beyond 64 bits") {
  BigMatrix m(2, 2);
  m(0, 0) = mpz_class("123456789012345678901234567890");
  m(0, 1) = mpz_class("98765432109876543210");
  m(1, 0) = 7;
  m(1, 1) = mpz_class("-555555555555555555555");
  check_smith(m);
}

TEST_CASE("invariant_factors") {
  CHECK(invariant_factors(big({{2, 4}, {6, 8}})) == std::vector<mpz_class>{2, 4});
  CHECK(invariant_factors(big({{0, 0}})).empty());
  CHECK(invariant_factors(big({{6, 0}, {0, 4}})) == std::vector<mpz_class>{2, 12});
}

TEST_CASE("homology: a single generator") {
  BigradedComplex c;
  c.h_min = 0;
  c.q = {{1}};
  const HomologyTable t = homology(c);
  REQUIRE(t.groups.size() == 1);
  CHECK(t.groups[0] == HomologyGroup{0, 1, 1, {}});
}

TEST_CASE("homology: the unknot") {
  const HomologyTable t = homology(build_unreduced(parse_pd("")));
  REQUIRE(t.groups.size() == 2);
  CHECK(t.groups[0] == HomologyGroup{0, -1, 1, {}});
  CHECK(t.groups[1] == HomologyGroup{0, 1, 1, {}});
  CHECK(to_convention(t, Grading::Paper).groups[0] == HomologyGroup{0, -1, 1, {}});
}

TEST_CASE("homology: NotAComplex") {
  BigradedComplex c;
  c.q = {{0}, {0}, {0}};
  c.d = {SparseMatrix::from_dense(IntMatrix::identity(1)), SparseMatrix::from_dense(IntMatrix::identity(1))};
  try {
    homology(c);
    FAIL("expected NotAComplex");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAComplex);
  }
}

TEST_CASE("homology: the left trefoil at the even preset") {
  const HomologyTable t = table_of("trefoil");
  const std::vector<HomologyGroup> expect{
      {-3, -9, 1, {}}, {-2, -7, 0, {2}}, {-2, -5, 1, {}}, {0, -3, 1, {}}, {0, -1, 1, {}}};
  CHECK(t.groups == expect);
}

TEST_CASE("homology: the figure-eight at the even preset") {
  const HomologyTable t = table_of("figure-eight");
  const std::vector<HomologyGroup> expect{{-2, -5, 1, {}}, {-1, -3, 0, {2}}, {-1, -1, 1, {}}, {0, -1, 1, {}},
                                          {0, 1, 1, {}},   {1, 1, 1, {}},    {2, 3, 0, {2}},  {2, 5, 1, {}}};
  CHECK(t.groups == expect);
}

TEST_CASE("homology: the odd preset is torsion-free on small knots") {
  for (const char* name : {"trefoil", "figure-eight"}) {
    const HomologyTable t = table_of(name, RingParams::odd());
    for (const auto& g : t.groups) CHECK(g.torsion.empty());
  }
  CHECK(table_of("trefoil", RingParams::odd()).total_betti() == 6);
  CHECK(table_of("figure-eight", RingParams::odd()).total_betti() == 10);
}

TEST_CASE("homology: tables match the rank oracles") {
  for (const auto& e : corpus())
    for (const auto& p : testing::all_presets()) check_against_oracle(build_unreduced(parse_pd(e.pd), p));
  for (const auto& d : testing::random_diagrams(12, 7, 99)) {
    check_against_oracle(build_unreduced(d));
    check_against_oracle(build_unreduced(d, RingParams::odd()));
  }
}

TEST_CASE("homology: Euler characteristic of table and complex agree") {
  for (const auto& d : testing::random_diagrams(20, 7, 17))
    for (const auto& p : testing::all_presets()) {
      const BigradedComplex c = build_unreduced(d, p);
      CHECK(euler_characteristic(homology(c)) == euler_characteristic(c));
    }
}

TEST_CASE("homology: generator order does not matter") {
  const BigradedComplex c = build_unreduced(parse_pd(corpus_entry("figure-eight").pd));
  std::mt19937 rng(5);
  BigradedComplex shuffled = c;
  std::vector<std::vector<std::size_t>> perm(c.degrees());
  for (std::size_t t = 0; t < c.degrees(); ++t) {
    perm[t].resize(c.rank(t));
    std::iota(perm[t].begin(), perm[t].end(), 0);
    std::shuffle(perm[t].begin(), perm[t].end(), rng);
    for (std::size_t g = 0; g < c.rank(t); ++g) shuffled.q[t][perm[t][g]] = c.q[t][g];
  }
  for (std::size_t t = 0; t < c.d.size(); ++t) {
    SparseMatrix m(c.d[t].rows(), c.d[t].cols());
    for (std::size_t col = 0; col < c.d[t].cols(); ++col)
      for (const auto& [r, v] : c.d[t].col(col)) m.add(perm[t + 1][r], perm[t][col], v);
    m.normalize();
    shuffled.d[t] = m;
  }
  CHECK(homology(shuffled) == homology(c));
}

TEST_CASE("homology: serial and parallel agree") {
  const BigradedComplex c = build_unreduced(parse_pd(corpus_entry("figure-eight-r2r3").pd), RingParams{-1, -1, -1});
  CHECK(homology(c, Exec::Serial) == homology(c, Exec::Parallel));
}

TEST_CASE("to_convention negates q and round-trips") {
  const HomologyTable t = table_of("trefoil");
  const HomologyTable paper = to_convention(t, Grading::Paper);
  CHECK(paper.convention == Grading::Paper);
  CHECK(paper.find(-3, 9) != nullptr);
  CHECK(paper.find(-2, 7)->torsion == std::vector<mpz_class>{2});
  CHECK(to_convention(paper, Grading::Standard) == t);
}
