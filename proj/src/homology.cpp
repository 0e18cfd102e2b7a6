#include "khov/homology.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>
#include <utility>

#include "khov/errors.hpp"

namespace khov {

namespace {

void swap_rows(BigMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(BigMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row a += f * row b
void add_row(BigMatrix& m, std::size_t a, std::size_t b, const mpz_class& f) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(b, j) != 0) m(a, j) += f * m(b, j);
}

// col a += f * col b
void add_col(BigMatrix& m, std::size_t a, std::size_t b, const mpz_class& f) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, b) != 0) m(i, a) += f * m(i, b);
}

// Diagonalizes d in place, mirroring row operations into u and column
// operations into v when they are given. Returns the diagonal length.
std::size_t diagonalize(BigMatrix& d, BigMatrix* u, BigMatrix* v, bool divisibility) {
  const std::size_t R = d.rows(), C = d.cols();
  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    for (;;) {
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (d(i, j) != 0 && (pi == R || abs(d(i, j)) < abs(d(pi, pj)))) pi = i, pj = j;
      if (pi == R) return t;
      swap_rows(d, t, pi);
      if (u) swap_rows(*u, t, pi);
      swap_cols(d, t, pj);
      if (v) swap_cols(*v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (d(i, t) == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        f = -f;
        add_row(d, i, t, f);
        if (u) add_row(*u, i, t, f);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (d(t, j) == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        f = -f;
        add_col(d, j, t, f);
        if (v) add_col(*v, j, t, f);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      if (divisibility) {
        std::size_t bad = R;
        for (std::size_t i = t + 1; i < R && bad == R; ++i)
          for (std::size_t j = t + 1; j < C; ++j)
            if (d(i, j) % d(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad != R) {
          add_row(d, t, bad, 1);
          if (u) add_row(*u, t, bad, 1);
          continue;
        }
      }
      break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < C; ++j) d(t, j) = -d(t, j);
      if (u)
        for (std::size_t j = 0; j < R; ++j) (*u)(t, j) = -(*u)(t, j);
    }
  }
  return t;
}

}  // namespace

SmithForm smith_normal_form(const BigMatrix& m) {
  SmithForm s{m, BigMatrix::identity(m.rows()), BigMatrix::identity(m.cols())};
  diagonalize(s.d, &s.u, &s.v, true);
  return s;
}

std::vector<mpz_class> invariant_factors(BigMatrix m) {
  const std::size_t len = diagonalize(m, nullptr, nullptr, false);
  std::vector<mpz_class> diag;
  for (std::size_t i = 0; i < len; ++i) diag.push_back(abs(m(i, i)));
  // diag(a, b) ~ diag(gcd, lcm) restores the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g = gcd(diag[i], diag[j]);
      mpz_class l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

struct BlockResult {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;
};

// Eliminates unit pivots sparsely, then finishes the remainder densely.
BlockResult reduce_block(std::vector<SparseRow> rows, std::size_t ncols) {
  BlockResult out;
  std::vector<std::unordered_set<std::uint32_t>> col_rows(ncols);
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);

  auto eliminate = [&](std::uint32_t r, std::uint32_t c) {
    const SparseRow& pivot = rows[r];
    const mpz_class pv = std::find_if(pivot.begin(), pivot.end(), [&](const auto& e) { return e.first == c; })->second;
    const std::vector<std::uint32_t> targets(col_rows[c].begin(), col_rows[c].end());
    for (std::uint32_t r2 : targets) {
      if (r2 == r) continue;
      SparseRow& row = rows[r2];
      const mpz_class f = std::find_if(row.begin(), row.end(), [&](const auto& e) { return e.first == c; })->second * pv;
      SparseRow merged;
      merged.reserve(row.size() + pivot.size());
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
          merged.push_back(std::move(row[a++]));
        } else if (a == row.size() || pivot[b].first < row[a].first) {
          merged.emplace_back(pivot[b].first, -f * pivot[b].second);
          col_rows[pivot[b].first].insert(r2);
          ++b;
        } else {
          mpz_class val = row[a].second - f * pivot[b].second;
          if (val != 0) {
            merged.emplace_back(row[a].first, std::move(val));
          } else {
            col_rows[row[a].first].erase(r2);
          }
          ++a;
          ++b;
        }
      }
      row = std::move(merged);
    }
    for (const auto& [cc, v] : rows[r]) col_rows[cc].erase(r);
    rows[r].clear();
    ++out.rank;
  };

  for (bool progress = true; progress;) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::uint32_t r = 0; r < rows.size(); ++r)
      if (!rows[r].empty()) order.push_back(r);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return rows[a].size() < rows[b].size(); });
    for (std::uint32_t r : order) {
      std::int64_t best = -1;
      std::size_t cost = 0;
      for (const auto& [c, v] : rows[r])
        if (abs(v) == 1 && (best < 0 || col_rows[c].size() < cost)) {
          best = c;
          cost = col_rows[c].size();
        }
      if (best < 0) continue;
      eliminate(r, static_cast<std::uint32_t>(best));
      progress = true;
    }
  }

  std::vector<std::uint32_t> live_rows;
  std::map<std::uint32_t, std::size_t> live_cols;
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) {
      live_rows.push_back(r);
      for (const auto& [c, v] : rows[r]) live_cols.emplace(c, 0);
    }
  if (live_rows.empty()) return out;
  std::size_t idx = 0;
  for (auto& [c, i] : live_cols) i = idx++;
  BigMatrix dense(live_rows.size(), live_cols.size());
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, v] : rows[live_rows[i]]) dense(i, live_cols[c]) = v;
  for (auto& f : invariant_factors(std::move(dense))) {
    ++out.rank;
    if (f > 1) out.torsion.push_back(std::move(f));
  }
  return out;
}

}  // namespace

const HomologyGroup* HomologyTable::find(int h, int q) const {
  for (const auto& g : groups)
    if (g.h == h && g.q == q) return &g;
  return nullptr;
}

std::size_t HomologyTable::total_betti() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.betti;
  return n;
}

HomologyTable homology(const BigradedComplex& c, Exec exec) {
  if (!is_complex(c)) throw Error(Errc::NotAComplex, "boundary composite is nonzero");
  if (!preserves_q(c)) throw Error(Errc::NotAComplex, "boundary does not preserve the quantum degree");
  const std::size_t T = c.degrees();

  // Generators of each degree split by q, with their block-local positions.
  std::vector<std::map<int, std::vector<std::uint32_t>>> by_q(T);
  std::vector<std::vector<std::uint32_t>> local(T);
  for (std::size_t t = 0; t < T; ++t) {
    local[t].resize(c.q[t].size());
    for (std::uint32_t g = 0; g < c.q[t].size(); ++g) {
      auto& bucket = by_q[t][c.q[t][g]];
      local[t][g] = static_cast<std::uint32_t>(bucket.size());
      bucket.push_back(g);
    }
  }

  struct Task {
    std::size_t t;
    int q;
  };
  std::vector<Task> tasks;
  for (std::size_t t = 0; t < c.d.size(); ++t)
    for (const auto& [q, gens] : by_q[t])
      if (by_q[t + 1].count(q)) tasks.push_back({t, q});
  std::vector<BlockResult> results(tasks.size());
  parallel_for(exec, tasks.size(), [&](std::size_t k) {
    const auto [t, q] = tasks[k];
    const auto& cols = by_q[t].at(q);
    std::vector<SparseRow> rows(by_q[t + 1].at(q).size());
    for (std::uint32_t j = 0; j < cols.size(); ++j)
      for (const auto& [r, v] : c.d[t].col(cols[j])) rows[local[t + 1][r]].emplace_back(j, mpz_class(static_cast<long>(v)));
    results[k] = reduce_block(std::move(rows), cols.size());
  });
  std::map<std::pair<std::size_t, int>, const BlockResult*> block;
  for (std::size_t k = 0; k < tasks.size(); ++k) block[{tasks[k].t, tasks[k].q}] = &results[k];

  HomologyTable table;
  for (std::size_t t = 0; t < T; ++t)
    for (const auto& [q, gens] : by_q[t]) {
      std::size_t rank_out = 0, rank_in = 0;
      HomologyGroup g;
      g.h = c.h_min + static_cast<int>(t);
      g.q = q;
      if (auto it = block.find({t, q}); it != block.end()) rank_out = it->second->rank;
      if (t > 0)
        if (auto it = block.find({t - 1, q}); it != block.end()) {
          rank_in = it->second->rank;
          g.torsion = it->second->torsion;
        }
      g.betti = gens.size() - rank_out - rank_in;
      if (g.betti > 0 || !g.torsion.empty()) table.groups.push_back(std::move(g));
    }
  return table;
}

HomologyTable to_convention(const HomologyTable& t, Grading g) {
  if (t.convention == g) return t;
  HomologyTable out = t;
  out.convention = g;
  for (auto& grp : out.groups) grp.q = -grp.q;
  std::sort(out.groups.begin(), out.groups.end(),
            [](const HomologyGroup& a, const HomologyGroup& b) { return std::pair(a.h, a.q) < std::pair(b.h, b.q); });
  return out;
}

}  // namespace khov
