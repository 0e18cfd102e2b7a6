// Serial reference against the OpenMP path for the heavy kernels.
#include <benchmark/benchmark.h>

#include "khov/complex.hpp"
#include "khov/corpus.hpp"
#include "khov/homology.hpp"
#include "khov/oracle.hpp"
#include "khov/reduced.hpp"

namespace {

using khov::Exec;

const khov::Diagram& torus_3_4() {
  static const khov::Diagram d = khov::braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2});
  return d;
}

const khov::Diagram& figure_eight_r2r3() {
  static const khov::Diagram d = khov::parse_pd(khov::corpus_entry("figure-eight-r2r3").pd);
  return d;
}

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_Bracket(benchmark::State& s) {
  const auto d = khov::braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2});
  for (auto _ : s) benchmark::DoNotOptimize(khov::kauffman_bracket(d, exec_of(s)));
}

void BM_BuildUnreduced(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(khov::build_unreduced(torus_3_4(), khov::RingParams::even(),
                                                                  khov::ArrowConvention::Normal, exec_of(s)));
}

void BM_Homology(benchmark::State& s) {
  const auto c = khov::build_unreduced(torus_3_4());
  for (auto _ : s) benchmark::DoNotOptimize(khov::homology(c, exec_of(s)));
}

void BM_BuildReduced(benchmark::State& s) {
  for (auto _ : s)
    benchmark::DoNotOptimize(khov::build_reduced(figure_eight_r2r3(), khov::RingParams::odd(),
                                                 khov::ArrowConvention::Normal, exec_of(s)));
}

}  // namespace

BENCHMARK(BM_Bracket)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildUnreduced)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Homology)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildReduced)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
