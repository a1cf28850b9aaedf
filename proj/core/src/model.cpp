#include "channelgame/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace channelgame {

void GameParams::check() const {
  if (n_nodes < 2) throw std::invalid_argument("n_nodes must be >= 2");
  if (blockchain_fee <= 0) throw std::invalid_argument("blockchain_fee must be > 0");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

void GameParams::check_for_bounds() const {
  check();
  if (n_nodes <= 3) throw std::invalid_argument("bound analysis requires n_nodes > 3");
}

StrategyProfile StrategyProfile::from_channels(int n_nodes, const std::vector<Channel>& channels) {
  if (n_nodes < 0) throw std::invalid_argument("negative node count");
  StrategyProfile p(n_nodes);
  for (const Channel& ch : channels) {
    p.open_channel(ch.opener, ch.peer);
  }
  return p;
}

void StrategyProfile::set_strategy(NodeId u, std::vector<NodeId> peers) {
  if (u < 0 || u >= n_nodes()) throw std::out_of_range("node id out of range");
  for (NodeId v : peers) {
    if (v < 0 || v >= n_nodes()) throw std::out_of_range("peer id out of range");
  }
  std::sort(peers.begin(), peers.end());
  channels_[static_cast<size_t>(u)] = std::move(peers);
}

void StrategyProfile::open_channel(NodeId opener, NodeId peer) {
  if (opener < 0 || opener >= n_nodes()) throw std::out_of_range("opener id out of range");
  if (peer < 0 || peer >= n_nodes()) throw std::out_of_range("peer id out of range");
  auto& peers = channels_[static_cast<size_t>(opener)];
  peers.insert(std::upper_bound(peers.begin(), peers.end(), peer), peer);
}

size_t StrategyProfile::mu_total() const {
  size_t total = 0;
  for (const auto& peers : channels_) total += peers.size();
  return total;
}

bool StrategyProfile::has_duplicate_channels() const {
  std::set<std::pair<NodeId, NodeId>> seen;
  for (NodeId u = 0; u < n_nodes(); ++u) {
    for (NodeId v : channels_[static_cast<size_t>(u)]) {
      if (u == v) continue;
      auto key = std::minmax(u, v);
      if (!seen.insert({key.first, key.second}).second) return true;
    }
  }
  return false;
}

std::vector<std::vector<NodeId>> StrategyProfile::undirected_adjacency() const {
  const int n = n_nodes();
  std::vector<std::set<NodeId>> adj(static_cast<size_t>(n));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : channels_[static_cast<size_t>(u)]) {
      if (u == v) continue;
      adj[static_cast<size_t>(u)].insert(v);
      adj[static_cast<size_t>(v)].insert(u);
    }
  }
  std::vector<std::vector<NodeId>> out(static_cast<size_t>(n));
  for (NodeId u = 0; u < n; ++u) {
    out[static_cast<size_t>(u)].assign(adj[static_cast<size_t>(u)].begin(),
                                       adj[static_cast<size_t>(u)].end());
  }
  return out;
}

std::vector<Channel> StrategyProfile::channels() const {
  std::vector<Channel> out;
  for (NodeId u = 0; u < n_nodes(); ++u) {
    for (NodeId v : channels_[static_cast<size_t>(u)]) {
      out.push_back(Channel{u, v});
    }
  }
  return out;
}

std::vector<ProfileViolation> validate_profile(const StrategyProfile& profile,
                                               const GameParams& params) {
  std::vector<ProfileViolation> violations;
  if (profile.n_nodes() != params.n_nodes) {
    violations.push_back({-1, "node-count-mismatch", false,
                          "profile has " + std::to_string(profile.n_nodes()) +
                              " nodes, params expect " + std::to_string(params.n_nodes)});
  }
  for (NodeId u = 0; u < profile.n_nodes(); ++u) {
    const auto& peers = profile.strategy_of(u);
    for (NodeId v : peers) {
      if (v == u) {
        violations.push_back({u, "self-loop", false, "self-loop at node " + std::to_string(u)});
      }
      if (v < 0 || v >= params.n_nodes) {
        violations.push_back({u, "peer-out-of-range", false,
                              "node " + std::to_string(u) + " opens channel to invalid peer " +
                                  std::to_string(v)});
      }
    }
  }
  if (profile.has_duplicate_channels()) {
    // Find one pair to report. Duplicates are legal states (Lemma-style scans
    // need them representable); they just never survive as equilibria.
    std::set<std::pair<NodeId, NodeId>> seen;
    for (NodeId u = 0; u < profile.n_nodes(); ++u) {
      for (NodeId v : profile.strategy_of(u)) {
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) {
          violations.push_back({u, "duplicate channel", true,
                                "duplicate channel between " + std::to_string(key.first) +
                                    " and " + std::to_string(key.second)});
        }
      }
    }
  }
  return violations;
}

PaymentScenario PaymentScenario::homogeneous(const GameParams& params) {
  params.check();
  PaymentScenario s;
  s.n_ = params.n_nodes;
  s.demands_ = params.k;
  return s;
}

PaymentScenario PaymentScenario::from_demands(int n_nodes,
                                              std::map<std::pair<NodeId, NodeId>, long> demands) {
  for (const auto& [pair, count] : demands) {
    if (pair.first == pair.second) throw std::invalid_argument("sender == receiver in demand");
    if (pair.first < 0 || pair.first >= n_nodes || pair.second < 0 || pair.second >= n_nodes) {
      throw std::invalid_argument("demand references invalid node id");
    }
    if (count < 0) throw std::invalid_argument("negative demand count");
  }
  PaymentScenario s;
  s.n_ = n_nodes;
  s.demands_ = std::move(demands);
  return s;
}

long PaymentScenario::count(NodeId sender, NodeId receiver) const {
  if (sender == receiver) return 0;
  if (is_homogeneous()) return std::get<long>(demands_);
  const auto& m = std::get<std::map<std::pair<NodeId, NodeId>, long>>(demands_);
  auto it = m.find({sender, receiver});
  return it == m.end() ? 0 : it->second;
}

long PaymentScenario::total() const {
  if (is_homogeneous()) {
    return std::get<long>(demands_) * static_cast<long>(n_) * static_cast<long>(n_ - 1);
  }
  long total = 0;
  for (const auto& [pair, count] : std::get<std::map<std::pair<NodeId, NodeId>, long>>(demands_)) {
    total += count;
  }
  return total;
}

void PaymentScenario::for_each(const std::function<void(NodeId, NodeId, long)>& fn) const {
  if (is_homogeneous()) {
    const long k = std::get<long>(demands_);
    if (k == 0) return;
    for (NodeId s = 0; s < n_; ++s) {
      for (NodeId t = 0; t < n_; ++t) {
        if (s != t) fn(s, t, k);
      }
    }
    return;
  }
  for (const auto& [pair, count] : std::get<std::map<std::pair<NodeId, NodeId>, long>>(demands_)) {
    if (count > 0) fn(pair.first, pair.second, count);
  }
}

FeePolicy FeePolicy::uniform(Rat f0) {
  f0.canonicalize();
  if (f0 < 0) throw std::invalid_argument("fee must be >= 0");
  FeePolicy p;
  p.rep_ = std::move(f0);
  return p;
}

FeePolicy FeePolicy::per_node(std::vector<Rat> fee_of) {
  for (Rat& f : fee_of) {
    f.canonicalize();
    if (f < 0) throw std::invalid_argument("fee must be >= 0");
  }
  FeePolicy p;
  p.rep_ = std::move(fee_of);
  return p;
}

Rat FeePolicy::fee_of(NodeId u) const {
  if (is_uniform()) return std::get<Rat>(rep_);
  return std::get<std::vector<Rat>>(rep_).at(static_cast<size_t>(u));
}

void FeePolicy::check(int n_nodes) const {
  if (!is_uniform() &&
      std::get<std::vector<Rat>>(rep_).size() != static_cast<size_t>(n_nodes)) {
    throw std::invalid_argument("per-node fee vector size does not match node count");
  }
}

}  // namespace channelgame
