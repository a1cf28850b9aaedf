#include "channelgame/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace channelgame {

using nlohmann::json;

json fee_policy_to_json(const FeePolicy& policy) {
  if (policy.is_uniform()) {
    return json{{"uniform", rat_to_string(policy.uniform_fee())}};
  }
  json fees = json::array();
  for (const Rat& f : policy.node_fees()) fees.push_back(rat_to_string(f));
  return json{{"per_node", fees}};
}

FeePolicy fee_policy_from_json(const json& j) {
  if (j.contains("uniform")) {
    return FeePolicy::uniform(rat_from_string(j.at("uniform").get<std::string>()));
  }
  if (j.contains("per_node")) {
    std::vector<Rat> fees;
    for (const auto& f : j.at("per_node")) fees.push_back(rat_from_string(f.get<std::string>()));
    return FeePolicy::per_node(std::move(fees));
  }
  throw std::invalid_argument("fee_policy must contain \"uniform\" or \"per_node\"");
}

json profile_to_json(const ProfileDocument& doc) {
  json channels = json::array();
  for (const Channel& ch : doc.profile.channels()) {
    channels.push_back(json::array({ch.opener, ch.peer}));
  }
  json j{{"n_nodes", doc.params.n_nodes},
         {"blockchain_fee", rat_to_string(doc.params.blockchain_fee)},
         {"k", doc.params.k},
         {"channels", channels}};
  if (doc.fee_policy) j["fee_policy"] = fee_policy_to_json(*doc.fee_policy);
  return j;
}

ProfileDocument profile_from_json(const json& j) {
  ProfileDocument doc;
  doc.params.n_nodes = j.at("n_nodes").get<int>();
  doc.params.blockchain_fee = rat_from_string(j.at("blockchain_fee").get<std::string>());
  doc.params.k = j.at("k").get<long>();
  doc.params.check();
  std::vector<Channel> channels;
  for (const auto& entry : j.at("channels")) {
    if (!entry.is_array() || entry.size() != 2) {
      throw std::invalid_argument("channels entries must be [opener, peer] pairs");
    }
    channels.push_back(Channel{entry[0].get<int>(), entry[1].get<int>()});
  }
  doc.profile = StrategyProfile::from_channels(doc.params.n_nodes, channels);
  if (j.contains("fee_policy")) {
    doc.fee_policy = fee_policy_from_json(j.at("fee_policy"));
    doc.fee_policy->check(doc.params.n_nodes);
  }
  return doc;
}

json fee_assignment_to_json(const FeeAssignment& fees) {
  json arr = json::array();
  for (const Rat& f : fees.fee_of) arr.push_back(rat_to_string(f));
  return json{{"fees", arr}};
}

FeeAssignment fee_assignment_from_json(const json& j) {
  FeeAssignment fees;
  for (const auto& f : j.at("fees")) fees.fee_of.push_back(rat_from_string(f.get<std::string>()));
  return fees;
}

json scenario_to_json(const PaymentScenario& scenario) {
  json demands = json::array();
  scenario.for_each([&](NodeId s, NodeId t, long count) {
    demands.push_back(json::array({s, t, count}));
  });
  return json{{"n_nodes", scenario.n_nodes()}, {"demands", demands}};
}

PaymentScenario scenario_from_json(const json& j) {
  const int n = j.at("n_nodes").get<int>();
  std::map<std::pair<NodeId, NodeId>, long> demands;
  for (const auto& entry : j.at("demands")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw std::invalid_argument("demands entries must be [sender, receiver, count]");
    }
    demands[{entry[0].get<int>(), entry[1].get<int>()}] += entry[2].get<long>();
  }
  return PaymentScenario::from_demands(n, std::move(demands));
}

json verdict_to_json(const EquilibriumVerdict& verdict) {
  json j{{"status", ne_status_to_string(verdict.status)}, {"ties", verdict.ties}};
  if (verdict.witness) {
    j["witness"] = json{{"node", verdict.witness->node},
                        {"alternative", verdict.witness->alternative},
                        {"old_cost", rat_to_string(verdict.witness->old_cost)},
                        {"new_cost", rat_to_string(verdict.witness->new_cost)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

EquilibriumVerdict verdict_from_json(const json& j) {
  EquilibriumVerdict v;
  const std::string status = j.at("status").get<std::string>();
  if (status == "STRICT_NE") {
    v.status = NeStatus::StrictNe;
  } else if (status == "WEAK_NE") {
    v.status = NeStatus::WeakNe;
  } else if (status == "NOT_NE") {
    v.status = NeStatus::NotNe;
  } else {
    throw std::invalid_argument("unknown status: " + status);
  }
  v.ties = j.value("ties", 0L);
  if (j.contains("witness") && !j.at("witness").is_null()) {
    const auto& w = j.at("witness");
    DeviationWitness witness;
    witness.node = w.at("node").get<int>();
    witness.alternative = w.at("alternative").get<std::vector<int>>();
    witness.old_cost = rat_from_string(w.at("old_cost").get<std::string>());
    witness.new_cost = rat_from_string(w.at("new_cost").get<std::string>());
    v.witness = std::move(witness);
  }
  return v;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace channelgame
