#include <benchmark/benchmark.h>

#include <random>

#include "hypercert/field.hpp"
#include "hypercert/hyperalgebra.hpp"
#include "hypercert/matrix.hpp"
#include "hypercert/projectivity.hpp"
#include "hypercert/rational_module.hpp"
#include "hypercert/unipotent_group.hpp"

using namespace hypercert;

static void BM_FieldMul(benchmark::State& state) {
  const FieldPtr f = build_field(3, static_cast<std::uint32_t>(state.range(0)));
  std::mt19937 rng(1);
  std::uniform_int_distribution<elem_t> pick(1, f->order() - 1);
  elem_t acc = 1;
  for (auto _ : state) {
    acc = f->mul(acc, pick(rng));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(2)->Arg(4);

static void BM_Rank(benchmark::State& state) {
  const FieldPtr f = build_field(3, 2);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<elem_t> pick(0, f->order() - 1);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = pick(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(27)->Arg(81)->Arg(243);

static void BM_HeisenbergAlgebra(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const FieldPtr f = build_field(p, 1);
  for (auto _ : state) benchmark::DoNotOptimize(heisenberg_algebra(p, 1, f).dim());
}
BENCHMARK(BM_HeisenbergAlgebra)->Arg(2)->Arg(3);

static void BM_BasisConversionSteinberg(benchmark::State& state) {
  const FieldPtr f = build_field(3, 2);
  const auto a = line_algebra(3, 2, f);
  const auto g = enumerate_group(a);
  const auto st = steinberg(f, 3, 2);
  const auto gens = extract_weight_basis(st, a).generators;
  for (auto _ : state) benchmark::DoNotOptimize(basis_conversion(st, a, g, gens).expressions.rows());
}
BENCHMARK(BM_BasisConversionSteinberg);

static void BM_RegularModuleA2(benchmark::State& state) {
  const FieldPtr f = build_field(3, 1);
  const auto a = heisenberg_algebra(3, 1, f);
  for (auto _ : state) benchmark::DoNotOptimize(regular_module(a).dim());
}
BENCHMARK(BM_RegularModuleA2);

static void BM_NormRankA2(benchmark::State& state) {
  const FieldPtr f = build_field(3, 1);
  const auto a = heisenberg_algebra(3, 1, f);
  const auto m = regular_module(a);
  const auto g = enumerate_group(a);
  for (auto _ : state) benchmark::DoNotOptimize(norm_rank_test(m, g).criterion_rank);
}
BENCHMARK(BM_NormRankA2);
BENCHMARK_MAIN();
