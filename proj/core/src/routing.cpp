#include "channelgame/routing.hpp"

#include <deque>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace channelgame {

RoutingField::RoutingField(const StrategyProfile& profile, const FeePolicy& policy)
    : n_(profile.n_nodes()) {
  policy.check(n_);
  uniform_ = policy.is_uniform();
  fees_.resize(static_cast<size_t>(n_));
  for (NodeId u = 0; u < n_; ++u) fees_[static_cast<size_t>(u)] = policy.fee_of(u);
  if (uniform_) f0_ = policy.uniform_fee();

  hops_.assign(static_cast<size_t>(n_) * n_, -1);
  sigma_.assign(static_cast<size_t>(n_) * n_, 0);
  if (!uniform_) fee_dist_.assign(static_cast<size_t>(n_) * n_, Rat(0));

  const auto adj = profile.undirected_adjacency();
  for (NodeId s = 0; s < n_; ++s) {
    if (uniform_) {
      bfs_uniform(s, adj);
    } else {
      dijkstra(s, adj);
    }
  }
}

void RoutingField::bfs_uniform(NodeId source, const std::vector<std::vector<NodeId>>& adj) {
  hops_[idx(source, source)] = 0;
  sigma_[idx(source, source)] = 1;
  std::deque<NodeId> queue{source};
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    const int du = hops_[idx(source, u)];
    const std::uint64_t su = sigma_[idx(source, u)];
    for (NodeId v : adj[static_cast<size_t>(u)]) {
      int& dv = hops_[idx(source, v)];
      if (dv < 0) {
        dv = du + 1;
        sigma_[idx(source, v)] = su;
        queue.push_back(v);
      } else if (dv == du + 1) {
        sigma_[idx(source, v)] += su;
      }
    }
  }
}

void RoutingField::dijkstra(NodeId source, const std::vector<std::vector<NodeId>>& adj) {
  // Key = (intermediary fee total, hops), lexicographic. The fee of a relaxed
  // node u is charged when the path continues through u, never at endpoints.
  struct Key {
    Rat fee;
    int hops;
  };
  std::vector<Key> key(static_cast<size_t>(n_), Key{Rat(0), -1});
  std::vector<char> settled(static_cast<size_t>(n_), 0);
  auto less = [](const Key& a, const Key& b) {
    if (a.fee != b.fee) return a.fee < b.fee;
    return a.hops < b.hops;
  };

  using QueueEntry = std::pair<std::pair<Rat, int>, NodeId>;
  auto cmp = [](const QueueEntry& a, const QueueEntry& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second > b.first.second;
  };
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, decltype(cmp)> pq(cmp);

  key[static_cast<size_t>(source)] = Key{Rat(0), 0};
  sigma_[idx(source, source)] = 1;
  pq.push({{Rat(0), 0}, source});

  while (!pq.empty()) {
    auto [k, u] = pq.top();
    pq.pop();
    if (settled[static_cast<size_t>(u)]) continue;
    settled[static_cast<size_t>(u)] = 1;
    const Key ku = key[static_cast<size_t>(u)];
    const Rat through_fee = ku.fee + (u == source ? Rat(0) : fees_[static_cast<size_t>(u)]);
    for (NodeId v : adj[static_cast<size_t>(u)]) {
      if (settled[static_cast<size_t>(v)]) continue;
      Key cand{through_fee, ku.hops + 1};
      Key& kv = key[static_cast<size_t>(v)];
      if (kv.hops < 0 || less(cand, kv)) {
        kv = cand;
        sigma_[idx(source, v)] = sigma_[idx(source, u)];
        pq.push({{cand.fee, cand.hops}, v});
      } else if (cand.fee == kv.fee && cand.hops == kv.hops) {
        sigma_[idx(source, v)] += sigma_[idx(source, u)];
      }
    }
  }
  for (NodeId v = 0; v < n_; ++v) {
    hops_[idx(source, v)] = key[static_cast<size_t>(v)].hops;
    fee_dist_[idx(source, v)] = key[static_cast<size_t>(v)].fee;
  }
}

Rat RoutingField::route_fee(NodeId s, NodeId t) const {
  if (!reachable(s, t)) throw std::logic_error("route_fee on unreachable pair");
  if (uniform_) {
    const int intermediates = hops_[idx(s, t)] - 1;
    return intermediates <= 0 ? Rat(0) : f0_ * intermediates;
  }
  return fee_dist_[idx(s, t)];
}

std::uint64_t RoutingField::sigma_through(NodeId s, NodeId t, NodeId u) const {
  if (u == s || u == t) return 0;
  if (!reachable(s, u) || !reachable(u, t) || !reachable(s, t)) return 0;
  if (hops(s, u) + hops(u, t) != hops(s, t)) return 0;
  if (!uniform_) {
    if (fee_dist_[idx(s, u)] + fees_[static_cast<size_t>(u)] + fee_dist_[idx(u, t)] !=
        fee_dist_[idx(s, t)]) {
      return 0;
    }
  }
  return sigma(s, u) * sigma(u, t);
}

RouteStats route_stats(const RoutingField& field, const Rat& blockchain_fee, NodeId sender,
                       NodeId receiver) {
  if (sender == receiver) throw std::invalid_argument("sender must differ from receiver");
  RouteStats stats;
  stats.pair = {sender, receiver};
  if (!field.reachable(sender, receiver)) {
    stats.on_chain = true;
    return stats;
  }
  const Rat cost = field.route_fee(sender, receiver);
  if (cost >= blockchain_fee) {
    stats.on_chain = true;
    return stats;
  }
  stats.on_chain = false;
  stats.min_cost = cost;
  stats.route_count = field.sigma(sender, receiver);
  for (NodeId u = 0; u < field.n_nodes(); ++u) {
    const std::uint64_t through = field.sigma_through(sender, receiver, u);
    if (through > 0) stats.intermediary_count_of[u] = through;
  }
  return stats;
}

RouteStats route_cost_per_edge_model(const StrategyProfile& profile, const FeePolicy& policy,
                                     const Rat& blockchain_fee,
                                     std::pair<NodeId, NodeId> pair) {
  RoutingField field(profile, policy);
  return route_stats(field, blockchain_fee, pair.first, pair.second);
}

std::map<std::pair<NodeId, NodeId>, RouteStats> all_route_stats(const StrategyProfile& profile,
                                                                const FeePolicy& policy,
                                                                const PaymentScenario& scenario,
                                                                const Rat& blockchain_fee) {
  RoutingField field(profile, policy);
  std::map<std::pair<NodeId, NodeId>, RouteStats> out;
  scenario.for_each([&](NodeId s, NodeId t, long) {
    out.emplace(std::make_pair(s, t), route_stats(field, blockchain_fee, s, t));
  });
  return out;
}

}  // namespace channelgame
