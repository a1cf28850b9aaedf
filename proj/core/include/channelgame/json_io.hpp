#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "channelgame/equilibrium.hpp"
#include "channelgame/feegame.hpp"
#include "channelgame/model.hpp"

namespace channelgame {

/// On-disk profile document:
///   {"n_nodes": int, "blockchain_fee": "p/q", "k": int,
///    "channels": [[opener, peer], ...],
///    "fee_policy": {"uniform": "p/q"} | {"per_node": ["p/q", ...]}}
/// Rationals are "numerator/denominator" strings; plain decimals are accepted
/// on input and converted exactly.
struct ProfileDocument {
  GameParams params;
  StrategyProfile profile;
  std::optional<FeePolicy> fee_policy;
};

nlohmann::json profile_to_json(const ProfileDocument& doc);
ProfileDocument profile_from_json(const nlohmann::json& j);

/// Fee assignment document: {"fees": ["p/q", ...]} indexed by node id.
nlohmann::json fee_assignment_to_json(const FeeAssignment& fees);
FeeAssignment fee_assignment_from_json(const nlohmann::json& j);

/// Scenario document: {"n_nodes": int, "demands": [[sender, receiver, count], ...]}.
nlohmann::json scenario_to_json(const PaymentScenario& scenario);
PaymentScenario scenario_from_json(const nlohmann::json& j);

/// Verdict document: {"status": "...", "ties": n, "witness": {...} | null}.
nlohmann::json verdict_to_json(const EquilibriumVerdict& verdict);
EquilibriumVerdict verdict_from_json(const nlohmann::json& j);

nlohmann::json fee_policy_to_json(const FeePolicy& policy);
FeePolicy fee_policy_from_json(const nlohmann::json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace channelgame
