#pragma once

#include <string>
#include <vector>

#include "channelgame/model.hpp"
#include "channelgame/routing.hpp"

namespace channelgame {

/// Per-node cost decomposition:
///   total = channel_cost + onchain_cost + sending_fees - revenue.
struct CostBreakdown {
  NodeId node = 0;
  Rat channel_cost;   // mu_u * F_B
  Rat onchain_cost;   // b_u * F_B
  Rat sending_fees;   // routed payments sent, count * route fee
  Rat revenue;        // expected forwarding income over uniformly chosen cheapest routes
  Rat total;
  long onchain_payments = 0;  // b_u
};

struct SocialCostReport {
  Rat social_cost;  // -W
  long mu = 0;
  long b = 0;
  Rat optimum;  // (N-1) * F_B
  bool is_social_optimum = false;
};

CostBreakdown node_cost(const StrategyProfile& profile, const FeePolicy& policy,
                        const PaymentScenario& scenario, const GameParams& params, NodeId node);

/// Same, against a prebuilt routing field for the profile.
CostBreakdown node_cost(const RoutingField& field, const StrategyProfile& profile,
                        const FeePolicy& policy, const PaymentScenario& scenario,
                        const GameParams& params, NodeId node);

std::vector<CostBreakdown> all_node_costs(const StrategyProfile& profile, const FeePolicy& policy,
                                          const PaymentScenario& scenario,
                                          const GameParams& params);

/// Sums node costs and cross-checks the identity sum == (mu + b) * F_B.
/// Throws std::logic_error if the two routes disagree (they cannot).
SocialCostReport social_cost(const StrategyProfile& profile, const FeePolicy& policy,
                             const PaymentScenario& scenario, const GameParams& params);

/// CSV export: node,channel_cost,onchain_cost,sending_fees,revenue,total,total_exact.
/// Decimal columns use `precision` significant digits, round half to even.
std::string cost_breakdown_csv(const std::vector<CostBreakdown>& rows, int precision = 7);

}  // namespace channelgame
