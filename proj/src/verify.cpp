#include "khov/verify.hpp"

#include <functional>
#include <map>

#include "khov/corpus.hpp"
#include "khov/errors.hpp"
#include "khov/homology.hpp"
#include "khov/oracle.hpp"
#include "khov/reduced.hpp"

namespace khov {

namespace {

using BuildFn = std::function<BigradedComplex(const Diagram&, RingParams, ArrowConvention, Exec)>;

struct Theory {
  std::string name;
  BuildFn build;
};

std::vector<Theory> theories(const VerifyOptions& opt) {
  std::vector<Theory> out;
  if (opt.unreduced)
    out.push_back({"unreduced", [](const Diagram& d, RingParams p, ArrowConvention c, Exec e) {
                     return build_unreduced(d, p, c, e);
                   }});
  if (opt.reduced)
    out.push_back({"reduced", [](const Diagram& d, RingParams p, ArrowConvention c, Exec e) {
                     return build_reduced(d, p, c, e);
                   }});
  return out;
}

// Runs body and turns a library error into a failed check.
CheckResult guarded(std::string suite, std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(suite), std::move(name), false, ""};
  try {
    r.detail = body();
    r.pass = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

std::string describe(const HomologyTable& t) {
  std::string s;
  for (const auto& g : t.groups) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(g.h) + "," + std::to_string(g.q) + ")";
    if (g.betti) s += "Z" + (g.betti > 1 ? "^" + std::to_string(g.betti) : std::string());
    for (const auto& f : g.torsion) s += "+Z" + f.get_str();
  }
  return s.empty() ? "0" : s;
}

std::vector<CheckResult> suite_d2(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const std::vector<RingParams> all{{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, -1}};
  for (const auto& e : corpus())
    for (const auto& p : all)
      for (const auto& th : theories(opt))
        out.push_back(guarded("d2", e.name + " " + th.name + " " + preset_name(p), [&]() -> std::string {
          const auto c = th.build(parse_pd(e.pd), p, ArrowConvention::Normal, opt.exec);
          if (!is_complex(c)) return "d∘d is nonzero";
          if (!preserves_q(c)) return "differential changes q";
          return "";
        }));
  return out;
}

std::vector<CheckResult> suite_euler(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const LaurentPoly loop = LaurentPoly::monomial(-1) + LaurentPoly::monomial(1);
  for (const auto& e : corpus())
    for (const auto& p : opt.presets) {
      const Diagram d = parse_pd(e.pd);
      if (opt.unreduced)
        out.push_back(guarded("euler", e.name + " unreduced " + preset_name(p), [&]() -> std::string {
          const auto chi = euler_characteristic(build_unreduced(d, p, ArrowConvention::Normal, opt.exec));
          const auto j = jones(d, opt.exec);
          return chi == j ? "" : "chi " + chi.to_string() + " vs jones " + j.to_string();
        }));
      if (opt.reduced)
        out.push_back(guarded("euler", e.name + " reduced " + preset_name(p), [&]() -> std::string {
          const auto chi = euler_characteristic(build_unreduced(d, p, ArrowConvention::Normal, opt.exec));
          const auto red = euler_characteristic(build_reduced(d, p, ArrowConvention::Normal, opt.exec));
          return loop * red == chi ? "" : "(q+q^-1)(" + red.to_string() + ") vs " + chi.to_string();
        }));
    }
  return out;
}

std::vector<CheckResult> suite_square(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  for (const auto& e : corpus())
    for (const auto& p : opt.presets)
      out.push_back(guarded("commuting-square", e.name + " " + preset_name(p), [&]() -> std::string {
        const auto rep = check_commuting_square(parse_pd(e.pd), p, opt.exec);
        if (rep.ok()) return "";
        const auto& v = rep.violations.front();
        return std::to_string(rep.violations.size()) + " violations, first at vertex " + std::to_string(v.from) +
               " crossing " + std::to_string(v.crossing) + ": " + v.detail;
      }));
  return out;
}

std::vector<CheckResult> suite_graph(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  for (const auto& e : corpus()) {
    const Diagram d = parse_pd(e.pd);
    if (d.n() > 6) continue;
    out.push_back(guarded("graph-span", e.name, [&]() -> std::string {
      const auto res = resolve_all(d, ArrowConvention::Normal, opt.exec);
      for (const auto& r : res) {
        const auto rep = check_graph_span(r);
        if (!rep.equal)
          return "vertex " + std::to_string(r.index) + ": span rank " + std::to_string(rep.span_rank) +
                 " vs lattice rank " + std::to_string(rep.lattice_rank);
      }
      return "";
    }));
  }
  out.push_back(guarded("graph-span", "cycle relations", []() -> std::string {
    const auto rep = check_cycle_relations();
    if (rep.instances < 10) return "too few instances";
    return rep.ok() ? "" : rep.failures.front();
  }));
  return out;
}

std::vector<CheckResult> suite_rm(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::map<std::string, std::vector<const CorpusEntry*>> classes;
  for (const auto& e : corpus()) classes[e.equivalence_class].push_back(&e);
  for (const auto& [cls, members] : classes) {
    if (members.size() < 2) continue;
    for (const auto& p : opt.presets)
      for (const auto& th : theories(opt))
        out.push_back(guarded("rm-invariance", cls + " " + th.name + " " + preset_name(p), [&]() -> std::string {
          const auto ref = homology(th.build(parse_pd(members.front()->pd), p, ArrowConvention::Normal, opt.exec), opt.exec);
          for (std::size_t i = 1; i < members.size(); ++i) {
            const auto t =
                homology(th.build(parse_pd(members[i]->pd), p, ArrowConvention::Normal, opt.exec), opt.exec);
            if (!(t == ref))
              return members[i]->name + " gives " + describe(t) + " but " + members.front()->name + " gives " +
                     describe(ref);
          }
          return "";
        }));
  }
  return out;
}

std::vector<CheckResult> suite_flip(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  for (const auto& e : corpus())
    for (const auto& p : opt.presets)
      for (const auto& th : theories(opt))
        out.push_back(guarded("arrow-flip", e.name + " " + th.name + " " + preset_name(p), [&]() -> std::string {
          const Diagram d = parse_pd(e.pd);
          const auto a = homology(th.build(d, p, ArrowConvention::Normal, opt.exec), opt.exec);
          const auto b = homology(th.build(d, p, ArrowConvention::Flipped, opt.exec), opt.exec);
          return a == b ? "" : "normal " + describe(a) + " vs flipped " + describe(b);
        }));
  return out;
}

}  // namespace

std::string preset_name(RingParams p) {
  if (p == RingParams::even()) return "even";
  if (p == RingParams::odd()) return "odd";
  auto s = [](int v) { return v > 0 ? std::string("+1") : std::string("-1"); };
  return "(" + s(p.x) + "," + s(p.y) + "," + s(p.z) + ")";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"d2", "euler", "commuting-square", "graph-span", "rm-invariance",
                                              "arrow-flip"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (suite == "d2") return suite_d2(opt);
  if (suite == "euler") return suite_euler(opt);
  if (suite == "commuting-square") return suite_square(opt);
  if (suite == "graph-span") return suite_graph(opt);
  if (suite == "rm-invariance") return suite_rm(opt);
  if (suite == "arrow-flip") return suite_flip(opt);
  throw Error(Errc::UnknownSymbol, "unknown suite " + suite);
}

}  // namespace khov
