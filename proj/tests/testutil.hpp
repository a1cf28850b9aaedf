#pragma once

#include <random>

#include "channelgame/model.hpp"

namespace channelgame::testutil {

/// Canonical rational. The bare two-argument mpq_class constructor does not
/// reduce, and mpq equality requires reduced operands.
inline Rat q(long num, long den = 1) {
  Rat r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

inline StrategyProfile random_profile(std::mt19937& rng, int n, int density_pct) {
  StrategyProfile p(n);
  for (NodeId u = 0; u < n; ++u) {
    std::vector<NodeId> peers;
    for (NodeId v = 0; v < n; ++v) {
      if (v != u && static_cast<int>(rng() % 100) < density_pct) peers.push_back(v);
    }
    p.set_strategy(u, peers);
  }
  return p;
}

inline StrategyProfile random_tree(std::mt19937& rng, int n) {
  StrategyProfile p(n);
  for (NodeId v = 1; v < n; ++v) {
    const NodeId parent = static_cast<NodeId>(rng() % static_cast<unsigned>(v));
    if (rng() % 2) {
      p.open_channel(parent, v);
    } else {
      p.open_channel(v, parent);
    }
  }
  return p;
}

}  // namespace channelgame::testutil
