#include <doctest.h>

#include <random>

#include "channelgame/routing.hpp"
#include "channelgame/topology.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace channelgame;
using channelgame::testutil::q;

namespace {

GameParams params_n(int n, Rat fb = Rat(1), long k = 1) { return GameParams{n, fb, k}; }

}  // namespace

TEST_CASE("star routes outer pairs through the center") {
  StrategyProfile star = generate(TopologyFamily::star(), params_n(5));
  RouteStats stats =
      route_cost_per_edge_model(star, FeePolicy::uniform(Rat(1, 10)), Rat(1), {1, 2});
  CHECK_FALSE(stats.on_chain);
  CHECK(stats.min_cost == Rat(1, 10));
  CHECK(stats.route_count == 1);
  REQUIRE(stats.intermediary_count_of.count(0) == 1);
  CHECK(stats.intermediary_count_of.at(0) == 1);
  CHECK(stats.intermediary_count_of.size() == 1);
}

TEST_CASE("bipartite outer pair splits across both centers") {
  StrategyProfile bip = generate(TopologyFamily::bipartite(2), params_n(5));
  RouteStats stats =
      route_cost_per_edge_model(bip, FeePolicy::uniform(Rat(1, 10)), Rat(1), {2, 3});
  CHECK_FALSE(stats.on_chain);
  CHECK(stats.min_cost == Rat(1, 10));
  CHECK(stats.route_count == 2);
  CHECK(stats.intermediary_count_of.at(0) == 1);
  CHECK(stats.intermediary_count_of.at(1) == 1);
}

TEST_CASE("empty graph goes on-chain") {
  StrategyProfile empty(4);
  RouteStats stats = route_cost_per_edge_model(empty, FeePolicy::uniform(Rat(1, 10)), Rat(1), {0, 3});
  CHECK(stats.on_chain);
}

TEST_CASE("route at exactly the blockchain fee goes on-chain") {
  // 0-1-2-3 with f0 = 1/2: two intermediaries cost exactly F_B = 1.
  StrategyProfile path = generate(TopologyFamily::path(), params_n(4));
  RouteStats stats = route_cost_per_edge_model(path, FeePolicy::uniform(Rat(1, 2)), Rat(1), {0, 3});
  CHECK(stats.on_chain);

  // Oracle confirmation: the unique simple path has two intermediaries.
  auto oracle = oracle::enumerate_routes(path, FeePolicy::uniform(Rat(1, 2)), 0, 3);
  CHECK(oracle.route_exists);
  CHECK(oracle.min_fee == Rat(1));
  CHECK(oracle.route_count == 1);
}

TEST_CASE("sender equal to receiver is rejected") {
  StrategyProfile star = generate(TopologyFamily::star(), params_n(5));
  CHECK_THROWS_AS(route_cost_per_edge_model(star, FeePolicy::uniform(Rat(0)), Rat(1), {2, 2}),
                  std::invalid_argument);
}

TEST_CASE("two-star center pair has N-2 routes") {
  StrategyProfile ts = generate(TopologyFamily::two_star(), params_n(6));
  RouteStats stats = route_cost_per_edge_model(ts, FeePolicy::uniform(Rat(1, 10)), Rat(1), {0, 1});
  CHECK(stats.route_count == 4);
  for (NodeId v = 2; v < 6; ++v) CHECK(stats.intermediary_count_of.at(v) == 1);
}

TEST_CASE("clique pairs are all direct") {
  StrategyProfile clique = generate(TopologyFamily::clique(), params_n(4));
  auto stats = all_route_stats(clique, FeePolicy::uniform(Rat(1, 10)),
                               PaymentScenario::homogeneous(params_n(4)), Rat(1));
  CHECK(stats.size() == 12);
  for (const auto& [pair, s] : stats) {
    CHECK_FALSE(s.on_chain);
    CHECK(s.min_cost == Rat(0));
    CHECK(s.route_count == 1);
    CHECK(s.intermediary_count_of.empty());
  }
}

TEST_CASE("all_route_stats covers demanded pairs of the star") {
  StrategyProfile star = generate(TopologyFamily::star(), params_n(5));
  auto stats = all_route_stats(star, FeePolicy::uniform(Rat(1, 10)),
                               PaymentScenario::homogeneous(params_n(5)), Rat(1));
  CHECK(stats.size() == 20);
  int singles = 0;
  for (const auto& [pair, s] : stats) {
    if (pair.first != 0 && pair.second != 0) {
      CHECK(s.route_count == 1);
      ++singles;
    }
  }
  CHECK(singles == 12);
}

TEST_CASE("library matches the brute-force enumeration oracle") {
  std::mt19937 rng(987654);
  int checked_pairs = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);  // up to 8 nodes
    StrategyProfile p = testutil::random_profile(rng, n, 35);

    FeePolicy policy = FeePolicy::uniform(Rat(0));
    const int mode = static_cast<int>(rng() % 3);
    if (mode == 0) {
      policy = FeePolicy::uniform(q(static_cast<long>(rng() % 4), 10));
    } else if (mode == 2) {
      std::vector<Rat> fees;
      for (int i = 0; i < n; ++i) fees.push_back(q(static_cast<long>(rng() % 5), 7));
      policy = FeePolicy::per_node(fees);
    }
    const Rat fb(1);

    RoutingField field(p, policy);
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId t = 0; t < n; ++t) {
        if (s == t) continue;
        auto expected = oracle::enumerate_routes(p, policy, s, t);
        RouteStats actual = route_stats(field, fb, s, t);
        if (!expected.route_exists || expected.min_fee >= fb) {
          CHECK(actual.on_chain);
          continue;
        }
        REQUIRE_FALSE(actual.on_chain);
        CHECK(actual.min_cost == expected.min_fee);
        CHECK(static_cast<long>(actual.route_count) == expected.route_count);
        for (NodeId u = 0; u < n; ++u) {
          const long expected_through =
              expected.through.count(u) ? expected.through.at(u) : 0;
          const long actual_through = actual.intermediary_count_of.count(u)
                                          ? static_cast<long>(actual.intermediary_count_of.at(u))
                                          : 0;
          CHECK(actual_through == expected_through);
        }
        ++checked_pairs;
      }
    }
  }
  CHECK(checked_pairs > 500);  // the sweep exercised real routes
}

TEST_CASE("direct channel dominance") {
  std::mt19937 rng(13371337);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    StrategyProfile p = testutil::random_profile(rng, n, 30);
    const NodeId s = static_cast<NodeId>(rng() % static_cast<unsigned>(n));
    NodeId t = static_cast<NodeId>(rng() % static_cast<unsigned>(n));
    if (s == t) t = (t + 1) % n;
    p.open_channel(s, t);
    RouteStats stats =
        route_cost_per_edge_model(p, FeePolicy::uniform(q(static_cast<long>(rng() % 3), 2)),
                                  Rat(1), {s, t});
    CHECK_FALSE(stats.on_chain);
    CHECK(stats.min_cost == Rat(0));
  }
}

TEST_CASE("per-node fees pick the cheap side") {
  // Bipartite with centers 0,1,2; center 1 is expensive, so outer pairs
  // route through 0 and 2 only.
  StrategyProfile bip = generate(TopologyFamily::bipartite(3), params_n(6));
  FeePolicy policy = FeePolicy::per_node(
      {Rat(1, 100), Rat(1, 2), Rat(1, 100), Rat(0), Rat(0), Rat(0)});
  RouteStats stats = route_cost_per_edge_model(bip, policy, Rat(1), {3, 4});
  CHECK_FALSE(stats.on_chain);
  CHECK(stats.min_cost == Rat(1, 100));
  CHECK(stats.route_count == 2);
  CHECK(stats.intermediary_count_of.count(1) == 0);
  CHECK(stats.intermediary_count_of.at(0) == 1);
  CHECK(stats.intermediary_count_of.at(2) == 1);
}

TEST_CASE("zero uniform fee still counts all shortest routes") {
  StrategyProfile bip = generate(TopologyFamily::bipartite(2), params_n(6));
  RouteStats stats = route_cost_per_edge_model(bip, FeePolicy::uniform(Rat(0)), Rat(1), {2, 3});
  CHECK(stats.min_cost == Rat(0));
  CHECK(stats.route_count == 2);
}
