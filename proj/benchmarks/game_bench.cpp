#include <benchmark/benchmark.h>

#include "channelgame/analytic.hpp"
#include "channelgame/cost.hpp"
#include "channelgame/equilibrium.hpp"
#include "channelgame/topology.hpp"

using namespace channelgame;

namespace {

Rat q(long num, long den) {
  Rat r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

void BM_RoutingFieldBipartite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameParams params{n, Rat(1), 1};
  StrategyProfile p = generate(TopologyFamily::bipartite(n / 8), params);
  FeePolicy policy = FeePolicy::uniform(q(1, 100));
  for (auto _ : state) {
    RoutingField field(p, policy);
    benchmark::DoNotOptimize(field.sigma(n - 1, n - 2));
  }
}
BENCHMARK(BM_RoutingFieldBipartite)->Arg(16)->Arg(64)->Arg(128);

void BM_RoutingFieldPerNodeFees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameParams params{n, Rat(1), 1};
  StrategyProfile p = generate(TopologyFamily::bipartite(n / 8), params);
  std::vector<Rat> fees;
  for (int i = 0; i < n; ++i) fees.push_back(q(i % 5, 100));
  FeePolicy policy = FeePolicy::per_node(fees);
  for (auto _ : state) {
    RoutingField field(p, policy);
    benchmark::DoNotOptimize(field.sigma(n - 1, n - 2));
  }
}
BENCHMARK(BM_RoutingFieldPerNodeFees)->Arg(16)->Arg(64);

void BM_AllNodeCosts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameParams params{n, Rat(1), 2};
  StrategyProfile p = generate(TopologyFamily::bipartite(n / 8), params);
  FeePolicy policy = FeePolicy::uniform(q(1, 100));
  PaymentScenario scenario = PaymentScenario::homogeneous(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_node_costs(p, policy, scenario, params));
  }
}
BENCHMARK(BM_AllNodeCosts)->Arg(16)->Arg(64);

void BM_ExhaustiveCheckStar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameParams params{n, Rat(1), 1};
  StrategyProfile star = generate(TopologyFamily::star(), params);
  FeePolicy policy = FeePolicy::uniform(q(3, 10));
  PaymentScenario scenario = PaymentScenario::homogeneous(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_nash_exhaustive(star, policy, scenario, params));
  }
}
BENCHMARK(BM_ExhaustiveCheckStar)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_RestrictedCheckBipartite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GameParams params{n, Rat(1), 1};
  StrategyProfile bip = generate(TopologyFamily::bipartite(10), params);
  FeePolicy policy = FeePolicy::uniform(q(105, 10000));
  PaymentScenario scenario = PaymentScenario::homogeneous(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_nash_restricted(bip, TopologyFamily::bipartite(10), policy, scenario, params));
  }
}
BENCHMARK(BM_RestrictedCheckBipartite)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_BipartiteBounds(benchmark::State& state) {
  GameParams params{static_cast<int>(state.range(0)), Rat(1), 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bipartite_bounds(params, state.range(0) / 4));
  }
}
BENCHMARK(BM_BipartiteBounds)->Arg(1000)->Arg(100000);

void BM_BoundSweep(benchmark::State& state) {
  GameParams params{static_cast<int>(state.range(0)), Rat(1), 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(figure1_data(params));
  }
}
BENCHMARK(BM_BoundSweep)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_LemmaScan(benchmark::State& state) {
  GameParams params{static_cast<int>(state.range(0)), Rat(1), 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma_properties_scan(params, q(1, 10), true));
  }
}
BENCHMARK(BM_LemmaScan)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
