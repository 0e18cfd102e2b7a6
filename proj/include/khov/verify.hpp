#pragma once

#include <string>
#include <vector>

#include "khov/algebra.hpp"
#include "khov/parallel.hpp"

namespace khov {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  bool unreduced = true;
  bool reduced = true;
  std::vector<RingParams> presets{RingParams::even(), RingParams::odd()};
  Exec exec = Exec::Parallel;
};

// d2, euler, commuting-square, graph-span, rm-invariance, arrow-flip.
const std::vector<std::string>& suite_names();

// Runs one suite (or "all") over the built-in corpus.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt = {});

std::string preset_name(RingParams p);

}  // namespace khov
