#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "channelgame/model.hpp"

namespace channelgame {

/// All-pairs cheapest-route data for one network state. Route cost is the
/// total fee of strict intermediates; among equal-fee routes only the
/// hop-minimal ones count, which keeps the cheapest tier an acyclic layer
/// even when fees are zero. Under a uniform fee this is exactly
/// shortest-path-by-hops counting.
class RoutingField {
 public:
  RoutingField(const StrategyProfile& profile, const FeePolicy& policy);

  int n_nodes() const { return n_; }
  bool reachable(NodeId s, NodeId t) const { return hops_[idx(s, t)] >= 0; }
  int hops(NodeId s, NodeId t) const { return hops_[idx(s, t)]; }
  std::uint64_t sigma(NodeId s, NodeId t) const { return sigma_[idx(s, t)]; }

  /// Total intermediary fee of a cheapest s-t route. Requires reachable.
  Rat route_fee(NodeId s, NodeId t) const;

  /// Number of cheapest s-t routes that pass through u strictly between the
  /// endpoints. Zero when u is an endpoint or off every cheapest route.
  std::uint64_t sigma_through(NodeId s, NodeId t, NodeId u) const;

  Rat node_fee(NodeId u) const { return fees_[static_cast<size_t>(u)]; }

 private:
  size_t idx(NodeId s, NodeId t) const {
    return static_cast<size_t>(s) * static_cast<size_t>(n_) + static_cast<size_t>(t);
  }
  void bfs_uniform(NodeId source, const std::vector<std::vector<NodeId>>& adj);
  void dijkstra(NodeId source, const std::vector<std::vector<NodeId>>& adj);

  int n_ = 0;
  bool uniform_ = true;
  Rat f0_;
  std::vector<Rat> fees_;
  std::vector<int> hops_;
  std::vector<std::uint64_t> sigma_;
  std::vector<Rat> fee_dist_;  // per-node mode only
};

/// Cheapest-route summary for one ordered pair.
struct RouteStats {
  std::pair<NodeId, NodeId> pair;
  bool on_chain = false;
  Rat min_cost;                // defined when !on_chain
  std::uint64_t route_count = 0;  // defined when !on_chain
  std::map<NodeId, std::uint64_t> intermediary_count_of;
};

/// Route statistics for a single ordered pair. A pair goes on-chain when no
/// route exists or the cheapest route costs at least the blockchain fee.
/// Rejects sender == receiver.
RouteStats route_stats(const RoutingField& field, const Rat& blockchain_fee, NodeId sender,
                       NodeId receiver);

RouteStats route_cost_per_edge_model(const StrategyProfile& profile, const FeePolicy& policy,
                                     const Rat& blockchain_fee,
                                     std::pair<NodeId, NodeId> pair);

/// Statistics for every pair with positive demand.
std::map<std::pair<NodeId, NodeId>, RouteStats> all_route_stats(const StrategyProfile& profile,
                                                                const FeePolicy& policy,
                                                                const PaymentScenario& scenario,
                                                                const Rat& blockchain_fee);

}  // namespace channelgame
