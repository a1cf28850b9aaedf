#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "channelgame/rational.hpp"

namespace channelgame {

using NodeId = int;

/// Global game parameters: node count, blockchain fee F_B, and the per-pair
/// transaction count k of the homogeneous payment scenario.
struct GameParams {
  int n_nodes = 0;
  Rat blockchain_fee = Rat(1);
  long k = 1;

  /// Throws std::invalid_argument unless n_nodes >= 2, blockchain_fee > 0, k >= 1.
  void check() const;
  /// Analytic bound operations additionally need n_nodes > 3.
  void check_for_bounds() const;
};

struct Channel {
  NodeId opener;
  NodeId peer;
};

/// Per-node channel choices. Each node owns (and pays for) the channels it
/// opens. Peers are kept sorted; repeated peers represent multiset strategies,
/// which are only meaningful to the equilibrium scan. Connectivity is
/// undirected: a channel opened by either side links both.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(int n_nodes) : channels_(static_cast<size_t>(n_nodes)) {}

  static StrategyProfile from_channels(int n_nodes, const std::vector<Channel>& channels);

  int n_nodes() const { return static_cast<int>(channels_.size()); }
  const std::vector<NodeId>& strategy_of(NodeId u) const { return channels_.at(static_cast<size_t>(u)); }
  void set_strategy(NodeId u, std::vector<NodeId> peers);
  void open_channel(NodeId opener, NodeId peer);

  size_t mu_of(NodeId u) const { return channels_.at(static_cast<size_t>(u)).size(); }
  size_t mu_total() const;

  /// True when some unordered pair is linked by two or more channels,
  /// counting both directions and repeats.
  bool has_duplicate_channels() const;

  /// Deduplicated undirected adjacency lists (sorted). Self-loops dropped.
  std::vector<std::vector<NodeId>> undirected_adjacency() const;

  /// Directed channel list, ordered by opener then peer.
  std::vector<Channel> channels() const;

  bool operator==(const StrategyProfile& other) const { return channels_ == other.channels_; }

 private:
  std::vector<std::vector<NodeId>> channels_;
};

struct ProfileViolation {
  NodeId node;
  std::string rule;
  bool informational = false;
  std::string message;
};

/// Diagnostic: empty result iff all profile invariants hold. Duplicate
/// channels are reported as informational (they are valid states, just never
/// equilibria).
std::vector<ProfileViolation> validate_profile(const StrategyProfile& profile,
                                               const GameParams& params);

/// Multiset of ordered (sender, receiver) payment demands. The homogeneous
/// scenario (k payments per ordered pair) is kept implicit so large N stays cheap.
class PaymentScenario {
 public:
  static PaymentScenario homogeneous(const GameParams& params);
  static PaymentScenario from_demands(int n_nodes, std::map<std::pair<NodeId, NodeId>, long> demands);

  int n_nodes() const { return n_; }
  bool is_homogeneous() const { return std::holds_alternative<long>(demands_); }
  long homogeneous_k() const { return std::get<long>(demands_); }
  long count(NodeId sender, NodeId receiver) const;
  long total() const;

  void for_each(const std::function<void(NodeId, NodeId, long)>& fn) const;

  bool operator==(const PaymentScenario& other) const {
    return n_ == other.n_ && demands_ == other.demands_;
  }

 private:
  int n_ = 0;
  std::variant<long, std::map<std::pair<NodeId, NodeId>, long>> demands_;
};

/// The spec-level operation name for the homogeneous generator.
inline PaymentScenario homogeneous_scenario(const GameParams& params) {
  return PaymentScenario::homogeneous(params);
}

/// Forwarding fee policy: one constant fee for everyone (the fixed-fee game)
/// or one fee per node (the free-fee game).
class FeePolicy {
 public:
  static FeePolicy uniform(Rat f0);
  static FeePolicy per_node(std::vector<Rat> fee_of);

  bool is_uniform() const { return std::holds_alternative<Rat>(rep_); }
  const Rat& uniform_fee() const { return std::get<Rat>(rep_); }
  const std::vector<Rat>& node_fees() const { return std::get<std::vector<Rat>>(rep_); }
  Rat fee_of(NodeId u) const;

  void check(int n_nodes) const;

  bool operator==(const FeePolicy& other) const { return rep_ == other.rep_; }

 private:
  std::variant<Rat, std::vector<Rat>> rep_;
};

}  // namespace channelgame
