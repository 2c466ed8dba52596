#include <benchmark/benchmark.h>

#include "oclat/deduction.hpp"
#include "oclat/gset.hpp"
#include "oclat/gset_symmetry.hpp"
#include "oclat/permutation.hpp"
#include "oclat/word.hpp"

namespace {

using namespace oclat;

const std::vector<Partition>& lambdas() {
  static const std::vector<Partition> all{Partition({2, 1}), Partition({2, 2}), Partition({2, 1, 1}),
                                          Partition({3, 2}), Partition({2, 2, 1}),
                                          Partition({1, 1, 1, 1, 1})};
  return all;
}

void BM_Transversal(benchmark::State& state) {
  const auto& lambda = lambdas()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    benchmark::DoNotOptimize(transversal(lambda));
  }
  state.SetLabel(to_string(lambda));
}
BENCHMARK(BM_Transversal)->DenseRange(0, 5);

void BM_FromTransversal(benchmark::State& state) {
  const auto& lambda = lambdas()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    benchmark::DoNotOptimize(from_transversal(lambda));
  }
  state.SetLabel(to_string(lambda));
}
BENCHMARK(BM_FromTransversal)->DenseRange(0, 5);

void BM_ConScan(benchmark::State& state) {
  const auto a = from_transversal(lambdas()[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_congruences(a, {.strategy = ConStrategy::scan}));
  }
  state.SetLabel(to_string(lambdas()[static_cast<std::size_t>(state.range(0))]));
}
BENCHMARK(BM_ConScan)->Arg(0)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ConPrincipalJoin(benchmark::State& state) {
  const auto a = from_transversal(lambdas()[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_congruences(a, {.strategy = ConStrategy::principal_join}));
  }
  state.SetLabel(to_string(lambdas()[static_cast<std::size_t>(state.range(0))]));
}
BENCHMARK(BM_ConPrincipalJoin)->Arg(0)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FreeCongruenceRepresentatives(benchmark::State& state) {
  const auto a = from_transversal(lambdas()[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_congruence_representatives(a));
  }
  state.SetLabel(to_string(lambdas()[static_cast<std::size_t>(state.range(0))]));
}
BENCHMARK(BM_FreeCongruenceRepresentatives)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_AllSubgroups(benchmark::State& state) {
  const auto g = symmetric_group(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_subgroups(g));
  }
}
BENCHMARK(BM_AllSubgroups)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_InducedCongruence(benchmark::State& state) {
  const Partition lambda({2, 2, 1, 1});
  const auto e = s_lambda_identity_set(Partition({2, 1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(induced_congruence(e, lambda));
  }
}
BENCHMARK(BM_InducedCongruence)->Unit(benchmark::kMillisecond);

}  // namespace
