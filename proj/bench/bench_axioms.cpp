// Serial reference vs OpenMP path for the exhaustive checkers.

#include <benchmark/benchmark.h>

#include "gray/axioms.hpp"
#include "gray/fixtures.hpp"
#include "gray/free.hpp"
#include "gray/path.hpp"

using namespace gray;

namespace {

CategoryPtr chaotic2() {
  static const CategoryPtr C = [] {
    auto c = std::make_shared<FiniteGrayCategory>(fixtures::chaotic2());
    c->freeze();
    return CategoryPtr(c);
  }();
  return C;
}

const PathCategory& path_chaotic2() {
  static const PathCategory P = build_path(chaotic2());
  return P;
}

const GrTruncation& truncation(int L) {
  static const GrTruncation T2(chaotic2(), 2), T3(chaotic2(), 3);
  return L == 2 ? T2 : T3;
}

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_AxiomsPath(benchmark::State& s) {
  const FiniteGrayCategory& C = *path_chaotic2().cat;
  for (auto _ : s) benchmark::DoNotOptimize(check_gray_axioms(C, exec_of(s)));
}

void BM_Truncation(benchmark::State& s) {
  const GrTruncation& T = truncation(int(s.range(1)));
  for (auto _ : s) benchmark::DoNotOptimize(check_truncation(T, exec_of(s)));
}

void BM_FunctorS(benchmark::State& s) {
  const GrayFunctorData& S = path_chaotic2().S;
  for (auto _ : s) benchmark::DoNotOptimize(check_gray_functor(S, 3, exec_of(s)));
}

}  // namespace

// range(0): 0 serial, 1 parallel
BENCHMARK(BM_AxiomsPath)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Truncation)->Args({0, 2})->Args({1, 2})->Args({0, 3})->Args({1, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FunctorS)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
