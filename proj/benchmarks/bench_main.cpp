#include <benchmark/benchmark.h>

#include "kpush/g2.hpp"
#include "kpush/linalg.hpp"
#include "kpush/random.hpp"
#include "kpush/spaces.hpp"
#include "kpush_cli/expression.hpp"

using namespace kpush;

namespace {

LaurentPolynomial dense_poly(RandomSource& rng, const TablePtr& table, int terms) {
  RandomPolyOptions options;
  options.min_terms = terms;
  options.max_terms = terms;
  options.max_exponent = 4;
  options.param_probability = 0.5;
  return random_laurent(rng, table, {0, 1}, {2, 3, 4}, options);
}

void BM_Multiply(benchmark::State& state) {
  RandomSource rng(1);
  const auto table = VariableTable::standard(2, 3);
  const auto p = dense_poly(rng, table, static_cast<int>(state.range(0)));
  const auto q = dense_poly(rng, table, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_ExactDivide(benchmark::State& state) {
  RandomSource rng(2);
  const auto table = VariableTable::standard(2, 3);
  const auto d = dense_poly(rng, table, 8);
  const auto p = dense_poly(rng, table, static_cast<int>(state.range(0))) * d;
  for (auto _ : state) benchmark::DoNotOptimize(exact_divide(p, d));
}
BENCHMARK(BM_ExactDivide)->RangeMultiplier(4)->Range(4, 64);

void BM_ParseExpression(benchmark::State& state) {
  const auto table = VariableTable::standard(2, 2);
  const std::string src = "G[5,4]*(1 - z1/t1)^3 + z1^-2*z2^-2*t2 - 7/3";
  for (auto _ : state) benchmark::DoNotOptimize(cli::parse_polynomial(src, table));
}
BENCHMARK(BM_ParseExpression);

void push_forward(benchmark::State& state, const SpaceDescriptor& space, bool residue) {
  RandomSource rng(3);
  const auto f = random_admissible(rng, space);
  for (auto _ : state) {
    benchmark::DoNotOptimize(residue ? residue_pushforward(space, f) : localization_pushforward(space, f));
  }
}
BENCHMARK_CAPTURE(push_forward, residue_gr25, SpaceDescriptor::grassmannian(2, 5), true);
BENCHMARK_CAPTURE(push_forward, localization_gr25, SpaceDescriptor::grassmannian(2, 5), false);
BENCHMARK_CAPTURE(push_forward, residue_gr36, SpaceDescriptor::grassmannian(3, 6), true);
BENCHMARK_CAPTURE(push_forward, localization_gr36, SpaceDescriptor::grassmannian(3, 6), false);
BENCHMARK_CAPTURE(push_forward, residue_fl4, SpaceDescriptor::full_flag(4), true);
BENCHMARK_CAPTURE(push_forward, residue_lg3, SpaceDescriptor::lagrangian(3), true);
BENCHMARK_CAPTURE(push_forward, residue_g2p2, SpaceDescriptor::g2p2(), true);

void BM_G2Table(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(grothendieck_table());
}
BENCHMARK(BM_G2Table)->Unit(benchmark::kMillisecond);

void BM_IntersectionMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(intersection_matrix());
}
BENCHMARK(BM_IntersectionMatrix)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_BareissSolve(benchmark::State& state) {
  const auto matrix = intersection_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_class_solve(matrix));
}
BENCHMARK(BM_BareissSolve)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
