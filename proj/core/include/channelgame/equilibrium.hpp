#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "channelgame/cost.hpp"
#include "channelgame/model.hpp"
#include "channelgame/topology.hpp"

namespace channelgame {

struct DeviationWitness {
  NodeId node;
  std::vector<NodeId> alternative;
  Rat old_cost;
  Rat new_cost;
};

enum class NeStatus { StrictNe, WeakNe, NotNe };

std::string ne_status_to_string(NeStatus status);

struct EquilibriumVerdict {
  NeStatus status;
  std::optional<DeviationWitness> witness;  // present iff NotNe
  long ties = 0;  // alternatives whose cost exactly equals the incumbent strategy's
};

/// Raised when a computation is refused (for example exhaustive search above
/// the node limit). Distinct from usage errors so callers can exit differently.
struct RefusalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExhaustiveOptions {
  /// Refuse exhaustive enumeration above this many nodes (2^(N-1) strategies
  /// per node). The CLI maps CHANNELGAME_EXHAUSTIVE_LIMIT onto this.
  int node_limit = 10;
};

/// Tries every subset of other nodes as each node's replacement strategy,
/// holding everyone else fixed. Witness selection is deterministic: lowest
/// node id, then lexicographically smallest peer set.
EquilibriumVerdict check_nash_exhaustive(const StrategyProfile& profile, const FeePolicy& policy,
                                         const PaymentScenario& scenario, const GameParams& params,
                                         const ExhaustiveOptions& opts = {});

/// Checks only the named family's deviation classes, parameterized over their
/// full ranges, via closed-form cost comparison with on-chain caps. Scales to
/// thousands of nodes. Requires a uniform fee, the homogeneous scenario, and
/// a profile that matches the family generator exactly.
EquilibriumVerdict check_nash_restricted(const StrategyProfile& profile,
                                         const TopologyFamily& family, const FeePolicy& policy,
                                         const PaymentScenario& scenario,
                                         const GameParams& params);

/// Cost-minimizing replacement strategy for one node, everyone else fixed.
/// Ties break to fewest channels, then lexicographically smallest set.
std::pair<std::vector<NodeId>, Rat> best_response(const StrategyProfile& profile,
                                                  const FeePolicy& policy,
                                                  const PaymentScenario& scenario,
                                                  const GameParams& params, NodeId node,
                                                  const ExhaustiveOptions& opts = {});

struct DynamicsTrace {
  std::vector<StrategyProfile> profiles;  // initial, then one snapshot per round that changed
  bool converged = false;
  int rounds = 0;
};

/// Round-robin best-response dynamics until a fixed point or max_rounds.
DynamicsTrace best_response_dynamics(const StrategyProfile& initial, const FeePolicy& policy,
                                     const PaymentScenario& scenario, const GameParams& params,
                                     int max_rounds, const ExhaustiveOptions& opts = {});

struct LemmaScanReport {
  int n_nodes = 0;
  long k = 0;
  Rat f0;
  Rat blockchain_fee;
  bool multiset_mode = true;
  long long profiles_scanned = 0;
  long long strict_count = 0;
  long long weak_count = 0;
  long long not_ne_count = 0;
  long long strict_with_duplicate = 0;
  long long strict_with_onchain = 0;
  bool no_strict_ne_has_duplicate = false;
  bool no_strict_ne_has_onchain = false;
};

/// Classifies every strategy profile (multiset mode: each node may open up to
/// two channels per peer) and checks that no strict equilibrium contains a
/// duplicate channel or routes a demanded payment on-chain. Multiset mode
/// accepts N <= 4, plain mode N <= 5.
LemmaScanReport lemma_properties_scan(const GameParams& params, const Rat& f0,
                                      bool multiset_mode = true);

}  // namespace channelgame
