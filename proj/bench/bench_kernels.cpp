// Serial reference path (jobs = 1) against the OpenMP path (jobs = 0, all cores).
#include <benchmark/benchmark.h>

#include "dq/parser.hpp"
#include "dq/presentation.hpp"
#include "dq/quotient.hpp"
#include "dq/verify.hpp"

namespace {

using namespace dq;

const std::vector<std::string> kVars{"x1", "x2", "x3"};

PoissonStructure su2() {
  return PoissonStructure::from_upper(3, {{{0, 1}, parse_poly("x3", kVars)},
                                          {{1, 2}, parse_poly("x1", kVars)},
                                          {{0, 2}, parse_poly("-x2", kVars)}});
}

void BM_Associativity(benchmark::State& state) {
  const Exec ex{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    // fresh spec so the enveloping-algebra caches start cold
    const auto S = StarProductSpec::gutt(su2(), 4);
    benchmark::DoNotOptimize(verify_associativity(S, 4, ex).checked);
  }
}
BENCHMARK(BM_Associativity)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_MoyalAssociativity(benchmark::State& state) {
  const Exec ex{static_cast<int>(state.range(0))};
  const auto P = PoissonStructure::from_upper(2, {{{0, 1}, Poly(2, 1)}});
  const auto S = StarProductSpec::moyal(P, 5);
  for (auto _ : state) benchmark::DoNotOptimize(verify_associativity(S, 6, ex).checked);
}
BENCHMARK(BM_MoyalAssociativity)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_StarBasis(benchmark::State& state) {
  const Exec ex{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    const auto S = StarProductSpec::gutt(su2(), 4);
    StarBasis B(S, 6, ex);
    benchmark::DoNotOptimize(B.inverse().nonzeros());
  }
}
BENCHMARK(BM_StarBasis)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_ReductionSystem(benchmark::State& state) {
  const Exec ex{static_cast<int>(state.range(0))};
  const Poly C = parse_poly("x1^2 + x2^2 + x3^2 - 1", kVars);
  for (auto _ : state) {
    const auto S = StarProductSpec::gutt(su2(), 3);
    const auto L = lift_generators(S, {C}, LiftingStrategy::identity);
    const auto Q = quotient_basis(buchberger({C}), 5);
    benchmark::DoNotOptimize(build_reduction_system(S, L, Q, ex).solved.size());
  }
}
BENCHMARK(BM_ReductionSystem)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
