#include <random>

#include <benchmark/benchmark.h>

#include "cechkit/colimit.hpp"
#include "cechkit/groebner.hpp"
#include "cechkit/taylor.hpp"
#include "cechkit/wpr.hpp"

using namespace cechkit;

namespace {

Ring plane_ring(std::vector<std::string> vars) { return Ring(PrimeField(32003), std::move(vars)); }

std::vector<Polynomial> parse_all(const Ring& r, std::initializer_list<const char*> text) {
  std::vector<Polynomial> out;
  for (const char* t : text) out.push_back(r.parse(t));
  return out;
}

void BM_Rank(benchmark::State& state) {
  const PrimeField f(32003);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 g(7);
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(static_cast<std::int64_t>(g() % 32003));
  for (auto _ : state) benchmark::DoNotOptimize(rank(f, m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

// Homogeneous cyclic-3 style system plus a quadric.
void BM_Buchberger(benchmark::State& state) {
  const Ring r = plane_ring({"x", "y", "z", "w"});
  const auto gens = parse_all(r, {"x + y + z + w", "x*y + y*z + z*w + w*x", "x*y*z + y*z*w + z*w*x + w*x*y",
                                  "x*y*z*w - w^4"});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(r, gens));
}
BENCHMARK(BM_Buchberger)->Unit(benchmark::kMillisecond);

void BM_CechColimit(benchmark::State& state) {
  const Ring r = plane_ring({"x", "y"});
  const GradedRing a(r);
  const Sequence s(a, parse_all(r, {"x", "y"}));
  const FPGradedModule m = FPGradedModule::free(GradedFreeModule{{0}});
  ColimitParams params{-8, 2, static_cast<int>(state.range(0)), 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(cech_cohomology(a, s, m, 2, params));
}
BENCHMARK(BM_CechColimit)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ExtColimit(benchmark::State& state) {
  const Ring r = plane_ring({"x", "y"});
  const GradedRing a(r);
  const Sequence s(a, parse_all(r, {"x", "y", "x*y"}));
  const FPGradedModule m = FPGradedModule::free(GradedFreeModule{{0}});
  const ColimitParams params{-6, 2, 8, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(ext_colimit_local_cohomology(a, s, m, 2, params));
}
BENCHMARK(BM_ExtColimit)->Unit(benchmark::kMillisecond);

void BM_WprSearch(benchmark::State& state) {
  const Ring r = plane_ring({"x", "y"});
  const GradedRing a(r);
  const Sequence s(a, parse_all(r, {"x", "x*y"}));
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_weakly_proregular(a, s, {1, 2, 3}, 8, std::nullopt, threads));
}
BENCHMARK(BM_WprSearch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
