#include "channelgame/cost.hpp"

#include <sstream>
#include <stdexcept>

namespace channelgame {

CostBreakdown node_cost(const RoutingField& field, const StrategyProfile& profile,
                        const FeePolicy& policy, const PaymentScenario& scenario,
                        const GameParams& params, NodeId node) {
  params.check();
  policy.check(params.n_nodes);
  if (node < 0 || node >= profile.n_nodes()) throw std::invalid_argument("unknown node id");
  if (profile.n_nodes() != params.n_nodes) {
    throw std::invalid_argument("profile does not match params.n_nodes");
  }

  CostBreakdown out;
  out.node = node;
  out.channel_cost = Rat(static_cast<long>(profile.mu_of(node))) * params.blockchain_fee;
  out.onchain_cost = 0;
  out.sending_fees = 0;
  out.revenue = 0;

  const Rat& fb = params.blockchain_fee;
  const Rat node_fee = policy.fee_of(node);
  scenario.for_each([&](NodeId s, NodeId t, long count) {
    const bool routed = field.reachable(s, t) && field.route_fee(s, t) < fb;
    if (s == node) {
      if (routed) {
        out.sending_fees += Rat(count) * field.route_fee(s, t);
      } else {
        out.onchain_payments += count;
      }
      return;
    }
    if (routed && t != node) {
      const std::uint64_t through = field.sigma_through(s, t, node);
      if (through > 0) {
        // Expected share: each cheapest route is equally likely.
        Rat share(static_cast<unsigned long>(through), static_cast<unsigned long>(field.sigma(s, t)));
        share.canonicalize();
        out.revenue += Rat(count) * node_fee * share;
      }
    }
  });
  out.onchain_cost = Rat(out.onchain_payments) * fb;
  out.total = out.channel_cost + out.onchain_cost + out.sending_fees - out.revenue;
  return out;
}

CostBreakdown node_cost(const StrategyProfile& profile, const FeePolicy& policy,
                        const PaymentScenario& scenario, const GameParams& params, NodeId node) {
  RoutingField field(profile, policy);
  return node_cost(field, profile, policy, scenario, params, node);
}

std::vector<CostBreakdown> all_node_costs(const StrategyProfile& profile, const FeePolicy& policy,
                                          const PaymentScenario& scenario,
                                          const GameParams& params) {
  RoutingField field(profile, policy);
  std::vector<CostBreakdown> out;
  out.reserve(static_cast<size_t>(profile.n_nodes()));
  for (NodeId u = 0; u < profile.n_nodes(); ++u) {
    out.push_back(node_cost(field, profile, policy, scenario, params, u));
  }
  return out;
}

SocialCostReport social_cost(const StrategyProfile& profile, const FeePolicy& policy,
                             const PaymentScenario& scenario, const GameParams& params) {
  const auto costs = all_node_costs(profile, policy, scenario, params);
  Rat sum(0);
  long b = 0;
  for (const auto& c : costs) {
    sum += c.total;
    b += c.onchain_payments;
  }
  SocialCostReport report;
  report.mu = static_cast<long>(profile.mu_total());
  report.b = b;
  report.social_cost = Rat(report.mu + report.b) * params.blockchain_fee;
  if (sum != report.social_cost) {
    throw std::logic_error("social cost cross-check failed: sum of node costs != (mu+b)*F_B");
  }
  report.optimum = Rat(params.n_nodes - 1) * params.blockchain_fee;
  report.is_social_optimum = (report.social_cost == report.optimum);
  return report;
}

std::string cost_breakdown_csv(const std::vector<CostBreakdown>& rows, int precision) {
  std::ostringstream os;
  os << "node,channel_cost,onchain_cost,sending_fees,revenue,total,total_exact\n";
  for (const auto& r : rows) {
    os << r.node << ',' << format_decimal(r.channel_cost, precision) << ','
       << format_decimal(r.onchain_cost, precision) << ','
       << format_decimal(r.sending_fees, precision) << ','
       << format_decimal(r.revenue, precision) << ',' << format_decimal(r.total, precision) << ','
       << rat_to_string(r.total) << '\n';
  }
  return os.str();
}

}  // namespace channelgame
