#pragma once

#include <string>
#include <vector>

#include "channelgame/model.hpp"

namespace channelgame {

enum class Family { Path, Star, TwoStar, CompleteBipartite, Clique };

/// A named strategy-profile family. `centers` is only meaningful for
/// CompleteBipartite (the size c of the smaller side, 2 <= c <= N/2).
struct TopologyFamily {
  Family kind = Family::Star;
  long centers = 0;

  static TopologyFamily path() { return {Family::Path, 0}; }
  static TopologyFamily star() { return {Family::Star, 0}; }
  static TopologyFamily two_star() { return {Family::TwoStar, 0}; }
  static TopologyFamily bipartite(long c) { return {Family::CompleteBipartite, c}; }
  static TopologyFamily clique() { return {Family::Clique, 0}; }

  bool operator==(const TopologyFamily&) const = default;
};

/// CLI name mapping: path|star|two-star|bipartite:<c>|clique.
TopologyFamily parse_family(const std::string& name);
std::string family_to_string(const TopologyFamily& family);

/// Canonical generators:
///   Path  — node i opens a channel to i+1.
///   Star  — node 0 opens channels to everyone else.
///   TwoStar — nodes 0 and 1 each open channels to nodes 2..N-1.
///   CompleteBipartite(c) — nodes 0..c-1 each open channels to nodes c..N-1.
///   Clique — node i opens channels to all j > i.
StrategyProfile generate(const TopologyFamily& family, const GameParams& params);

/// Replaces exactly one node's strategy, leaving every other node untouched.
StrategyProfile apply_deviation(const StrategyProfile& profile, NodeId node,
                                std::vector<NodeId> new_peer_set);

}  // namespace channelgame
