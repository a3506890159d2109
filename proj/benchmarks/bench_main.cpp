#include <benchmark/benchmark.h>

#include "hecke/specht.hpp"
#include "hecke/unitarity.hpp"

namespace {

using namespace hecke;

const std::vector<Partition>& shapes() {
  static const std::vector<Partition> s{Partition({3, 2}), Partition({4, 2}), Partition({3, 2, 1}), Partition({4, 2, 1}), Partition({4, 3, 1})};
  return s;
}

void BM_BuildSpecht(benchmark::State& state) {
  const auto& p = shapes()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(build_specht(p));
  state.SetLabel(p.to_string());
}
BENCHMARK(BM_BuildSpecht)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_GramDeterminant(benchmark::State& state) {
  const auto sd = build_specht(shapes()[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(gram_determinant(sd));
  state.SetLabel(sd.shape.to_string());
}
BENCHMARK(BM_GramDeterminant)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Signature(benchmark::State& state) {
  const auto sd = build_specht(shapes()[static_cast<std::size_t>(state.range(0))]);
  const auto h = hermitian_gram(sd, RationalC(2, 9)).h;
  for (auto _ : state) benchmark::DoNotOptimize(signature(h));
  state.SetLabel(sd.shape.to_string() + " dim " + std::to_string(sd.dimension()));
}
BENCHMARK(BM_Signature)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_CycloMultiply(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const CycloNum a = CycloNum::zeta(m) + CycloNum(mpq_class(3, 7)) * CycloNum::zeta(m, 3) - CycloNum::zeta(m, 5);
  const CycloNum b = CycloNum(2) - CycloNum::zeta(m, 2) + CycloNum(mpq_class(1, 5)) * CycloNum::zeta(m, m - 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMultiply)->Arg(5)->Arg(12)->Arg(16)->Arg(30)->Arg(60);

void BM_ScanLocus(benchmark::State& state) {
  const auto p = shapes()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    SpechtCache cache;
    benchmark::DoNotOptimize(scan_locus(p, 12, cache, 1));
  }
  state.SetLabel(p.to_string());
}
BENCHMARK(BM_ScanLocus)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyTheorem(benchmark::State& state) {
  for (auto _ : state) {
    SpechtCache cache;
    benchmark::DoNotOptimize(verify_theorem(static_cast<int>(state.range(0)), 12, cache, 1));
  }
}
BENCHMARK(BM_VerifyTheorem)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
