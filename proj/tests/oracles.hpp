// Test-only oracles: brute-force route enumeration independent of the
// library's counting path. Enumerates every simple path, keeps the cheapest
// tier (total intermediary fee, then hop count), and derives route counts,
// intermediary shares, and node costs from scratch.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "channelgame/cost.hpp"
#include "channelgame/model.hpp"

namespace channelgame::oracle {

struct PathStats {
  bool route_exists = false;
  Rat min_fee;
  long route_count = 0;
  std::map<NodeId, long> through;  // cheapest routes with the node strictly inside
};

inline PathStats enumerate_routes(const StrategyProfile& profile, const FeePolicy& policy,
                                  NodeId s, NodeId t) {
  const auto adj = profile.undirected_adjacency();
  PathStats stats;
  std::optional<std::pair<Rat, int>> best;  // (fee, hops)
  std::vector<std::vector<NodeId>> best_paths;

  std::vector<NodeId> path{s};
  std::vector<char> visited(static_cast<size_t>(profile.n_nodes()), 0);
  visited[static_cast<size_t>(s)] = 1;

  auto path_fee = [&](const std::vector<NodeId>& p) {
    Rat fee(0);
    for (size_t i = 1; i + 1 < p.size(); ++i) fee += policy.fee_of(p[i]);
    return fee;
  };

  std::function<void(NodeId)> dfs = [&](NodeId u) {
    if (u == t) {
      const Rat fee = path_fee(path);
      const int hops = static_cast<int>(path.size()) - 1;
      std::pair<Rat, int> key{fee, hops};
      if (!best || key < *best) {
        best = key;
        best_paths.clear();
      }
      if (key == *best) best_paths.push_back(path);
      return;
    }
    for (NodeId v : adj[static_cast<size_t>(u)]) {
      if (visited[static_cast<size_t>(v)]) continue;
      visited[static_cast<size_t>(v)] = 1;
      path.push_back(v);
      dfs(v);
      path.pop_back();
      visited[static_cast<size_t>(v)] = 0;
    }
  };
  dfs(s);

  if (!best) return stats;
  stats.route_exists = true;
  stats.min_fee = best->first;
  stats.route_count = static_cast<long>(best_paths.size());
  for (const auto& p : best_paths) {
    for (size_t i = 1; i + 1 < p.size(); ++i) stats.through[p[i]] += 1;
  }
  return stats;
}

/// Node cost recomputed from the enumerated routes.
inline Rat node_cost(const StrategyProfile& profile, const FeePolicy& policy,
                     const PaymentScenario& scenario, const GameParams& params, NodeId node) {
  Rat total = Rat(static_cast<long>(profile.mu_of(node))) * params.blockchain_fee;
  scenario.for_each([&](NodeId s, NodeId t, long count) {
    PathStats stats = enumerate_routes(profile, policy, s, t);
    const bool routed = stats.route_exists && stats.min_fee < params.blockchain_fee;
    if (s == node) {
      total += Rat(count) * (routed ? stats.min_fee : params.blockchain_fee);
      return;
    }
    if (!routed || t == node) return;
    auto it = stats.through.find(node);
    if (it == stats.through.end()) return;
    Rat share{mpz_class(it->second), mpz_class(stats.route_count)};
    share.canonicalize();
    total -= Rat(count) * policy.fee_of(node) * share;
  });
  return total;
}

}  // namespace channelgame::oracle
