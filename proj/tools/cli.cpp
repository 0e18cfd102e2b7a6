#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "khov/complex.hpp"
#include "khov/diagram.hpp"
#include "khov/errors.hpp"
#include "khov/homology.hpp"
#include "khov/oracle.hpp"
#include "khov/reduced.hpp"
#include "khov/verify.hpp"

namespace khov::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string pd, gauss, file;
  std::string theory = "even";
  int x = 1, y = 1, z = 1;
  bool reduced = false;
  std::string convention = "standard";
  std::string format = "json";
  std::string arrows = "normal";
  std::string suite = "all";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool looks_like_pd(const std::string& text) {
  return text.find('X') != std::string::npos || text.find("Loop") != std::string::npos ||
         text.find_first_not_of(" \t\r\n") == std::string::npos;
}

// The input text and the parsed diagram.
std::pair<std::string, Diagram> load(const RunConfig& cfg, const CLI::App& sub) {
  const int given = static_cast<int>(sub.count("--pd") + sub.count("--gauss") + sub.count("--file"));
  if (given != 1) throw UsageError("give exactly one of --pd, --gauss, --file");
  if (sub.count("--pd")) return {cfg.pd, parse_pd(cfg.pd)};
  if (sub.count("--gauss")) return {cfg.gauss, parse_gauss(cfg.gauss)};
  std::ifstream in(cfg.file);
  if (!in) throw UsageError("cannot read " + cfg.file);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return {text, looks_like_pd(text) ? parse_pd(text) : parse_gauss(text)};
}

RingParams preset(const RunConfig& cfg, const CLI::App& sub) {
  RingParams p = cfg.theory == "odd" ? RingParams::odd() : RingParams::even();
  if (cfg.theory == "custom" || sub.count("--x") || sub.count("--y") || sub.count("--z")) {
    if (cfg.theory != "custom") throw UsageError("--x/--y/--z need --theory custom");
    p = {cfg.x, cfg.y, cfg.z};
  }
  return p;
}

json torsion_json(const std::vector<mpz_class>& t) {
  json arr = json::array();
  for (const auto& f : t) {
    if (f.fits_slong_p()) {
      arr.push_back(f.get_si());
    } else {
      arr.push_back(f.get_str());
    }
  }
  return arr;
}

void print_table(std::ostream& out, const HomologyTable& t) {
  out << std::setw(5) << "h" << std::setw(6) << "q" << std::setw(7) << "betti"
      << "  torsion\n";
  for (const auto& g : t.groups) {
    out << std::setw(5) << g.h << std::setw(6) << g.q << std::setw(7) << g.betti;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) out << (i ? " " : "  ") << "Z/" << g.torsion[i].get_str();
    out << "\n";
  }
}

int cmd_homology(const RunConfig& cfg, const CLI::App& sub, std::ostream& out) {
  const auto [text, d] = load(cfg, sub);
  const RingParams p = preset(cfg, sub);
  const ArrowConvention conv = cfg.arrows == "flipped" ? ArrowConvention::Flipped : ArrowConvention::Normal;
  const BigradedComplex c = cfg.reduced ? build_reduced(d, p, conv) : build_unreduced(d, p, conv);
  HomologyTable table = homology(c);
  table = to_convention(table, cfg.convention == "paper" ? Grading::Paper : Grading::Standard);
  if (cfg.format == "table") {
    print_table(out, table);
    return kOk;
  }
  json j;
  j["input"] = text;
  j["theory"] = {{"x", p.x}, {"y", p.y}, {"z", p.z}};
  j["reduced"] = cfg.reduced;
  j["convention"] = cfg.convention;
  json groups = json::array();
  for (const auto& g : table.groups)
    groups.push_back({{"h", g.h}, {"q", g.q}, {"betti", g.betti}, {"torsion", torsion_json(g.torsion)}});
  j["groups"] = groups;
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_jones(const RunConfig& cfg, const CLI::App& sub, std::ostream& out) {
  const auto [text, d] = load(cfg, sub);
  const LaurentPoly j = jones(d);
  if (cfg.format == "table") {
    out << j.to_string() << "\n";
    return kOk;
  }
  json o;
  o["input"] = text;
  o["jones"] = j.to_string();
  out << o.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const CLI::App& sub, std::ostream& out) {
  VerifyOptions opt;
  if (cfg.reduced) opt.unreduced = false;
  if (sub.count("--theory")) opt.presets = {preset(cfg, sub)};
  const auto results = run_suite(cfg.suite, opt);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  if (cfg.format == "table") {
    for (const auto& r : results)
      out << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.name << (r.pass ? "" : " -- " + r.detail) << "\n";
    out << results.size() - failed << " passed, " << failed << " failed\n";
  } else {
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back({{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    json o;
    o["checks"] = checks;
    o["passed"] = results.size() - failed;
    o["failed"] = failed;
    out << o.dump(2) << "\n";
  }
  return failed == 0 ? kOk : kInternal;
}

int exit_code(Errc c) {
  switch (c) {
    case Errc::MalformedSyntax:
    case Errc::ArcCountMismatch:
    case Errc::NonPlanarInconsistency:
    case Errc::UnbalancedCode:
      return kParseError;
    case Errc::TooLarge:
      return kTooLarge;
    default:
      return kInternal;
  }
}

void add_input(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--pd", cfg.pd, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
  sub.add_option("--gauss", cfg.gauss, "signed Gauss code, e.g. \"O1-U2-O3-U1-O2-U3-\"");
  sub.add_option("--file", cfg.file, "file holding a PD or Gauss code");
}

void add_theory(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--theory", cfg.theory, "coefficient preset")->check(CLI::IsMember({"even", "odd", "custom"}));
  const auto unit = CLI::IsMember({-1, 1});
  sub.add_option("--x", cfg.x, "X for --theory custom")->check(unit);
  sub.add_option("--y", cfg.y, "Y for --theory custom")->check(unit);
  sub.add_option("--z", cfg.z, "Z for --theory custom")->check(unit);
  sub.add_flag("--reduced", cfg.reduced, "use the reduced arrow complex");
}

void add_format(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

int run(const std::vector<std::string>& input, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = input;
  if (args.empty() || (args.front().size() > 1 && args.front()[0] == '-' && args.front() != "--help" &&
                       args.front() != "-h"))
    args.insert(args.begin(), "homology");

  RunConfig cfg;
  CLI::App app{"Khovanov homology of knot and link diagrams", "khovanov"};
  app.require_subcommand(1);

  auto* hom = app.add_subcommand("homology", "homology table of a diagram");
  add_input(*hom, cfg);
  add_theory(*hom, cfg);
  add_format(*hom, cfg);
  hom->add_option("--grading-convention", cfg.convention, "quantum grading sign")
      ->check(CLI::IsMember({"paper", "standard"}));
  hom->add_option("--arrows", cfg.arrows, "arrow convention")->check(CLI::IsMember({"normal", "flipped"}));

  auto* jon = app.add_subcommand("jones", "Jones polynomial from the Kauffman bracket");
  add_input(*jon, cfg);
  add_format(*jon, cfg);

  auto* ver = app.add_subcommand("verify", "run built-in verification suites");
  add_theory(*ver, cfg);
  add_format(*ver, cfg);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ver->add_option("--suite", cfg.suite, "suite name or all")->check(CLI::IsMember(suites));

  // CLI11 parses argv-style vectors back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  try {
    if (*hom) return cmd_homology(cfg, *hom, out);
    if (*jon) return cmd_jones(cfg, *jon, out);
    return cmd_verify(cfg, *ver, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace khov::cli
