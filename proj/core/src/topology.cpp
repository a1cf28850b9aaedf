#include "channelgame/topology.hpp"

#include <stdexcept>

namespace channelgame {

TopologyFamily parse_family(const std::string& name) {
  if (name == "path") return TopologyFamily::path();
  if (name == "star") return TopologyFamily::star();
  if (name == "two-star") return TopologyFamily::two_star();
  if (name == "clique") return TopologyFamily::clique();
  if (name == "bipartite") return TopologyFamily::bipartite(0);  // centers supplied separately
  const std::string prefix = "bipartite:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string arg = name.substr(prefix.size());
    size_t pos = 0;
    long c = std::stol(arg, &pos);
    if (pos != arg.size()) throw std::invalid_argument("malformed family name: " + name);
    return TopologyFamily::bipartite(c);
  }
  throw std::invalid_argument("unknown family name: " + name +
                              " (expected path|star|two-star|bipartite:<c>|clique)");
}

std::string family_to_string(const TopologyFamily& family) {
  switch (family.kind) {
    case Family::Path: return "path";
    case Family::Star: return "star";
    case Family::TwoStar: return "two-star";
    case Family::CompleteBipartite: return "bipartite:" + std::to_string(family.centers);
    case Family::Clique: return "clique";
  }
  throw std::logic_error("unreachable");
}

StrategyProfile generate(const TopologyFamily& family, const GameParams& params) {
  params.check();
  const int n = params.n_nodes;
  StrategyProfile profile(n);
  switch (family.kind) {
    case Family::Path:
      for (NodeId i = 0; i + 1 < n; ++i) profile.open_channel(i, i + 1);
      break;
    case Family::Star:
      for (NodeId v = 1; v < n; ++v) profile.open_channel(0, v);
      break;
    case Family::TwoStar:
      if (n < 4) throw std::invalid_argument("two-star requires at least 4 nodes");
      for (NodeId v = 2; v < n; ++v) {
        profile.open_channel(0, v);
        profile.open_channel(1, v);
      }
      break;
    case Family::CompleteBipartite: {
      const long c = family.centers;
      if (c < 2 || 2 * c > n) {
        throw std::invalid_argument("complete bipartite requires 2 <= c <= N/2");
      }
      for (NodeId u = 0; u < static_cast<NodeId>(c); ++u) {
        for (NodeId v = static_cast<NodeId>(c); v < n; ++v) profile.open_channel(u, v);
      }
      break;
    }
    case Family::Clique:
      for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) profile.open_channel(i, j);
      }
      break;
  }
  return profile;
}

StrategyProfile apply_deviation(const StrategyProfile& profile, NodeId node,
                                std::vector<NodeId> new_peer_set) {
  if (node < 0 || node >= profile.n_nodes()) throw std::out_of_range("node id out of range");
  for (NodeId v : new_peer_set) {
    if (v == node) throw std::invalid_argument("deviation introduces a self-loop");
    if (v < 0 || v >= profile.n_nodes()) throw std::out_of_range("peer id out of range");
  }
  StrategyProfile deviated = profile;
  deviated.set_strategy(node, std::move(new_peer_set));
  return deviated;
}

}  // namespace channelgame
