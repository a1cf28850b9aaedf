#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "channelgame/equilibrium.hpp"
#include "channelgame/model.hpp"

namespace channelgame {

/// Per-node forwarding fee vector for the fixed-graph fee game. Nodes that
/// never forward simply carry an inert fee.
struct FeeAssignment {
  std::vector<Rat> fee_of;

  void check(int n_nodes) const;
};

/// Two internally node-disjoint all-zero-fee routes for one ordered pair.
/// Paths are node sequences including both endpoints.
struct DisjointFreePaths {
  std::pair<NodeId, NodeId> pair;
  std::vector<NodeId> first;
  std::vector<NodeId> second;
};

struct Lemma3Violation {
  std::pair<NodeId, NodeId> pair;
  std::string reason;
};

struct Lemma3Certificate {
  bool holds = false;
  std::vector<DisjointFreePaths> pair_witnesses;  // filled when holds
  std::optional<Lemma3Violation> violation;       // filled when !holds
};

/// True iff every demanded pair without a direct channel has at least two
/// internally node-disjoint routes whose intermediaries all charge zero.
/// Disjointness is decided by unit-node-capacity max-flow on the subgraph of
/// zero-fee intermediaries. Requires k > 2.
std::pair<bool, Lemma3Certificate> lemma3_predicate(const StrategyProfile& profile,
                                                    const FeeAssignment& fees,
                                                    const PaymentScenario& scenario, long k);

/// Outcome of the free-fee stability question for a complete bipartite
/// profile: never an equilibrium. Either some pair lacks two free disjoint
/// routes (competition or entry undercuts it), or everything is free and the
/// zero fee sits below the strictly positive fixed-fee lower bound.
struct BipartiteFreeFeeVerdict {
  NeStatus status = NeStatus::NotNe;
  bool lemma3_holds = false;
  std::optional<Rat> conflicting_lower_bound;  // F_B/k units, present when lemma3_holds
  std::optional<Lemma3Violation> violation;    // present when !lemma3_holds
  std::optional<DisjointFreePaths> sample_free_paths;
  std::string explanation;
};

BipartiteFreeFeeVerdict bipartite_free_fee_verdict(const GameParams& params, long c,
                                                   const FeeAssignment& fees);

struct StarFeeResult {
  Rat fee;                        // 2*F_B/(k*(N-1)) - epsilon
  Rat center_revenue;             // at the chosen fee
  EquilibriumVerdict at_fee;      // star profile under Uniform(fee)
  EquilibriumVerdict above_upper;  // star profile under Uniform(bound + epsilon)
};

/// The star stays a pure equilibrium with the uniform fee pushed to just
/// under its fixed-fee upper bound. Confirms both sides via the fixed-fee
/// checker (exhaustive when N fits the limit, family-restricted otherwise).
StarFeeResult star_fee_equilibrium(const GameParams& params, const Rat& epsilon,
                                   const ExhaustiveOptions& opts = {});

}  // namespace channelgame
