// Microbenchmarks for the exponent-vector kernels and the polynomial paths
// they drive. Not part of the test suite; build target: bench_kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "apoly/identity.hpp"
#include "apoly/kernels.hpp"
#include "apoly/polynomial.hpp"

using namespace apoly;

namespace {

std::vector<ExpVec> random_vecs(std::size_t count, unsigned max_lane,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> d(0, max_lane);
  std::vector<ExpVec> out(count);
  for (auto& e : out) {
    e = ExpVec::zero();
    for (std::size_t i = 0; i < kMaxVars; ++i)
      e.lanes[i] = static_cast<std::uint16_t>(d(rng));
  }
  return out;
}

const ExpVecKernels& kernels_for(const benchmark::State& state) {
  return state.range(0) == 0 ? scalar_kernels() : *avx2_kernels();
}

bool have_variant(benchmark::State& state) {
  if (state.range(0) == 1 && !avx2_kernels()) {
    state.SkipWithError("avx2 unavailable on this host");
    return false;
  }
  return true;
}

void bm_add_shift_many(benchmark::State& state) {
  if (!have_variant(state)) return;
  const auto& K = kernels_for(state);
  const auto src = random_vecs(4096, 20, 1);
  std::vector<ExpVec> dst(src.size());
  const ExpVec shift = random_vecs(1, 20, 2)[0];
  for (auto _ : state) {
    K.add_shift_many(src.data(), src.size(), shift, dst.data());
    benchmark::DoNotOptimize(dst.data());
  }
  state.SetItemsProcessed(state.iterations() * src.size());
}

void bm_cmp_grlex(benchmark::State& state) {
  if (!have_variant(state)) return;
  const auto& K = kernels_for(state);
  const auto vecs = random_vecs(4096, 6, 3);
  std::size_t i = 0;
  long long acc = 0;
  for (auto _ : state) {
    acc += K.cmp_grlex(vecs[i & 4095], vecs[(i * 7 + 1) & 4095]);
    ++i;
  }
  benchmark::DoNotOptimize(acc);
  state.SetItemsProcessed(state.iterations());
}

void bm_poly_multiply(benchmark::State& state) {
  if (!have_variant(state)) return;
  select_kernels(state.range(0) == 0 ? "scalar" : "avx2");
  const Polynomial a = route_definition(4);
  const Polynomial b = route_determinant(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
  select_kernels("auto");
}

void bm_route_definition_n5(benchmark::State& state) {
  if (!have_variant(state)) return;
  select_kernels(state.range(0) == 0 ? "scalar" : "avx2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(route_definition(5));
  }
  select_kernels("auto");
}

BENCHMARK(bm_add_shift_many)->Arg(0)->Arg(1)->ArgNames({"simd"});
BENCHMARK(bm_cmp_grlex)->Arg(0)->Arg(1)->ArgNames({"simd"});
BENCHMARK(bm_poly_multiply)->Arg(0)->Arg(1)->ArgNames({"simd"})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(bm_route_definition_n5)->Arg(0)->Arg(1)->ArgNames({"simd"})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
