#include <doctest.h>

#include <algorithm>
#include <algorithm>
#include <random>

#include "channelgame/cost.hpp"
#include "channelgame/topology.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace channelgame;
using channelgame::testutil::q;

namespace {

GameParams params_n(int n, Rat fb = Rat(1), long k = 1) { return GameParams{n, fb, k}; }

}  // namespace

TEST_CASE("star costs match the closed forms") {
  const GameParams params = params_n(5);
  StrategyProfile star = generate(TopologyFamily::star(), params);
  PaymentScenario scenario = PaymentScenario::homogeneous(params);
  FeePolicy policy = FeePolicy::uniform(Rat(1, 10));

  CostBreakdown center = node_cost(star, policy, scenario, params, 0);
  CHECK(center.channel_cost == Rat(4));
  CHECK(center.onchain_cost == Rat(0));
  CHECK(center.sending_fees == Rat(0));
  CHECK(center.revenue == Rat(6, 5));
  CHECK(center.total == Rat(14, 5));

  CostBreakdown outer = node_cost(star, policy, scenario, params, 3);
  CHECK(outer.total == Rat(3, 10));
  CHECK(outer.channel_cost == Rat(0));
  CHECK(outer.sending_fees == Rat(3, 10));

  CHECK_THROWS_AS(node_cost(star, policy, scenario, params, 9), std::invalid_argument);
}

TEST_CASE("empty graph pays everything on-chain") {
  const GameParams params = params_n(3);
  StrategyProfile empty(3);
  PaymentScenario scenario = PaymentScenario::homogeneous(params);
  for (NodeId u = 0; u < 3; ++u) {
    CostBreakdown c = node_cost(empty, FeePolicy::uniform(Rat(1, 10)), scenario, params, u);
    CHECK(c.total == Rat(2));
    CHECK(c.onchain_cost == Rat(2));
    CHECK(c.onchain_payments == 2);
  }
}

TEST_CASE("two-star center cost, cross-checked against route enumeration") {
  const GameParams params = params_n(6);
  StrategyProfile ts = generate(TopologyFamily::two_star(), params);
  PaymentScenario scenario = PaymentScenario::homogeneous(params);
  FeePolicy policy = FeePolicy::uniform(Rat(1, 2));
  CostBreakdown center = node_cost(ts, policy, scenario, params, 0);
  CHECK(center.total == Rat(3, 2));
  CHECK(oracle::node_cost(ts, policy, scenario, params, 0) == Rat(3, 2));
  CostBreakdown outer = node_cost(ts, policy, scenario, params, 4);
  CHECK(outer.total == oracle::node_cost(ts, policy, scenario, params, 4));
}

TEST_CASE("social cost closed forms") {
  {
    const GameParams params = params_n(5);
    StrategyProfile clique = generate(TopologyFamily::clique(), params);
    SocialCostReport r = social_cost(clique, FeePolicy::uniform(Rat(2)),
                                     PaymentScenario::homogeneous(params), params);
    CHECK(r.social_cost == Rat(10));
    CHECK_FALSE(r.is_social_optimum);
  }
  {
    const GameParams params = params_n(7);
    StrategyProfile star = generate(TopologyFamily::star(), params);
    SocialCostReport r = social_cost(star, FeePolicy::uniform(Rat(1, 100)),
                                     PaymentScenario::homogeneous(params), params);
    CHECK(r.social_cost == Rat(6));
    CHECK(r.is_social_optimum);
    CHECK(r.b == 0);
  }
  {
    const GameParams params = params_n(6);
    StrategyProfile bip = generate(TopologyFamily::bipartite(2), params);
    SocialCostReport r = social_cost(bip, FeePolicy::uniform(Rat(1, 100)),
                                     PaymentScenario::homogeneous(params), params);
    CHECK(r.social_cost == Rat(8));
  }
}

TEST_CASE("fee conservation over random states") {
  std::mt19937 rng(24681357);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const GameParams params{n, q(1 + static_cast<long>(rng() % 3), 1 + static_cast<long>(rng() % 2)),
                            1 + static_cast<long>(rng() % 3)};
    StrategyProfile p = testutil::random_profile(rng, n, 10 + static_cast<int>(rng() % 60));
    if (rng() % 4 == 0 && n >= 2) p.open_channel(0, n - 1);  // occasional duplicate

    FeePolicy policy = FeePolicy::uniform(q(static_cast<long>(rng() % 6), 5));
    if (rng() % 3 == 0) {
      std::vector<Rat> fees;
      for (int i = 0; i < n; ++i) fees.push_back(q(static_cast<long>(rng() % 4), 3));
      policy = FeePolicy::per_node(fees);
    }

    PaymentScenario scenario = PaymentScenario::homogeneous(params);
    if (rng() % 3 == 0) {
      std::map<std::pair<NodeId, NodeId>, long> demands;
      const int m = static_cast<int>(rng() % 12);
      for (int i = 0; i < m; ++i) {
        NodeId s = static_cast<NodeId>(rng() % static_cast<unsigned>(n));
        NodeId t = static_cast<NodeId>(rng() % static_cast<unsigned>(n));
        if (s != t) demands[{s, t}] += static_cast<long>(rng() % 3);
      }
      scenario = PaymentScenario::from_demands(n, demands);
    }

    auto costs = all_node_costs(p, policy, scenario, params);
    Rat sending(0), revenue(0), total(0);
    long b = 0;
    for (const auto& c : costs) {
      sending += c.sending_fees;
      revenue += c.revenue;
      total += c.total;
      b += c.onchain_payments;
    }
    CHECK(sending == revenue);
    CHECK(total == Rat(static_cast<long>(p.mu_total()) + b) * params.blockchain_fee);
    CHECK_NOTHROW(social_cost(p, policy, scenario, params));
  }
}

TEST_CASE("every spanning tree with routed pairs hits the social optimum") {
  std::mt19937 rng(11223344);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const GameParams params{n, Rat(1), 1 + static_cast<long>(rng() % 2)};
    StrategyProfile tree = testutil::random_tree(rng, n);
    // Fee low enough that even an (N-1)-hop route stays below F_B.
    FeePolicy policy = FeePolicy::uniform(Rat(1, 10L * n));
    SocialCostReport r =
        social_cost(tree, policy, PaymentScenario::homogeneous(params), params);
    CHECK(r.b == 0);
    CHECK(r.social_cost == Rat(n - 1));
    CHECK(r.is_social_optimum);
  }
}

TEST_CASE("per-node fees feed revenue at the node's own rate") {
  const GameParams params = params_n(6);
  StrategyProfile bip = generate(TopologyFamily::bipartite(2), params);
  FeePolicy policy =
      FeePolicy::per_node({Rat(1, 10), Rat(1, 10), Rat(0), Rat(0), Rat(0), Rat(0)});
  PaymentScenario scenario = PaymentScenario::homogeneous(params);

  CostBreakdown center = node_cost(bip, policy, scenario, params, 0);
  // 12 outer-to-outer ordered pairs split between the two equal-fee centers.
  CHECK(center.revenue == Rat(12) * Rat(1, 10) * Rat(1, 2));
  CHECK(center.total == oracle::node_cost(bip, policy, scenario, params, 0));
}

TEST_CASE("csv export shape") {
  const GameParams params = params_n(4);
  StrategyProfile star = generate(TopologyFamily::star(), params);
  auto rows = all_node_costs(star, FeePolicy::uniform(Rat(1, 10)),
                             PaymentScenario::homogeneous(params), params);
  const std::string csv = cost_breakdown_csv(rows, 5);
  CHECK(csv.rfind("node,channel_cost,onchain_cost,sending_fees,revenue,total,total_exact\n", 0) ==
        0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find("12/5") != std::string::npos);  // exact center total
  CHECK(csv.find("1/5") != std::string::npos);
}
