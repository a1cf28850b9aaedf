#include "channelgame/equilibrium.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "channelgame/analytic.hpp"

namespace channelgame {

std::string ne_status_to_string(NeStatus status) {
  switch (status) {
    case NeStatus::StrictNe: return "STRICT_NE";
    case NeStatus::WeakNe: return "WEAK_NE";
    case NeStatus::NotNe: return "NOT_NE";
  }
  throw std::logic_error("unreachable");
}

namespace {

/// Accumulates deviation outcomes into a verdict with deterministic witness
/// selection: lowest node id first, then lexicographically smallest peer set.
class VerdictBuilder {
 public:
  void consider(NodeId node, const std::vector<NodeId>& alternative, const Rat& old_cost,
                const Rat& new_cost) {
    if (new_cost == old_cost) {
      ++ties_;
      return;
    }
    if (new_cost > old_cost) return;
    if (!witness_ || node < witness_->node ||
        (node == witness_->node &&
         std::lexicographical_compare(alternative.begin(), alternative.end(),
                                      witness_->alternative.begin(),
                                      witness_->alternative.end()))) {
      witness_ = DeviationWitness{node, alternative, old_cost, new_cost};
    }
  }

  EquilibriumVerdict verdict() const {
    EquilibriumVerdict v;
    v.ties = ties_;
    if (witness_) {
      v.status = NeStatus::NotNe;
      v.witness = witness_;
    } else {
      v.status = ties_ > 0 ? NeStatus::WeakNe : NeStatus::StrictNe;
    }
    return v;
  }

 private:
  std::optional<DeviationWitness> witness_;
  long ties_ = 0;
};

std::vector<NodeId> peers_of(NodeId u, int n) {
  std::vector<NodeId> peers;
  peers.reserve(static_cast<size_t>(n) - 1);
  for (NodeId v = 0; v < n; ++v) {
    if (v != u) peers.push_back(v);
  }
  return peers;
}

}  // namespace

EquilibriumVerdict check_nash_exhaustive(const StrategyProfile& profile, const FeePolicy& policy,
                                         const PaymentScenario& scenario, const GameParams& params,
                                         const ExhaustiveOptions& opts) {
  params.check();
  policy.check(params.n_nodes);
  const int n = profile.n_nodes();
  if (n != params.n_nodes) throw std::invalid_argument("profile does not match params.n_nodes");
  if (n > opts.node_limit) {
    throw RefusalError("exhaustive deviation search refused for N=" + std::to_string(n) +
                       " > limit " + std::to_string(opts.node_limit) +
                       "; raise the limit or use check_nash_restricted");
  }

  RoutingField base_field(profile, policy);
  std::vector<Rat> incumbent(static_cast<size_t>(n));
  for (NodeId u = 0; u < n; ++u) {
    incumbent[static_cast<size_t>(u)] =
        node_cost(base_field, profile, policy, scenario, params, u).total;
  }

  VerdictBuilder builder;
  StrategyProfile work = profile;
  for (NodeId u = 0; u < n; ++u) {
    const std::vector<NodeId> peers = peers_of(u, n);
    const std::vector<NodeId> current = profile.strategy_of(u);
    const std::uint32_t masks = 1u << peers.size();
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      std::vector<NodeId> alternative;
      for (size_t i = 0; i < peers.size(); ++i) {
        if (mask & (1u << i)) alternative.push_back(peers[i]);
      }
      if (alternative == current) continue;
      work.set_strategy(u, alternative);
      const Rat cost =
          node_cost(RoutingField(work, policy), work, policy, scenario, params, u).total;
      builder.consider(u, alternative, incumbent[static_cast<size_t>(u)], cost);
    }
    work.set_strategy(u, current);
  }
  return builder.verdict();
}

namespace {

/// Closed-form deviator costs for the restricted families, with on-chain
/// caps: a payment class whose route fee reaches F_B executes on-chain at
/// F_B, and fee revenue only accrues from classes that stay routed.
struct EffectiveCosts {
  Rat fb;   // blockchain fee
  Rat f0;   // uniform forwarding fee
  long k;
  bool routed1;  // one-intermediate routes in use
  Rat pay1;      // per-payment cost across one intermediary
  Rat pay2;      // per-payment cost across two intermediaries

  EffectiveCosts(const GameParams& params, const Rat& fee)
      : fb(params.blockchain_fee), f0(fee), k(params.k) {
    routed1 = f0 < fb;
    pay1 = routed1 ? f0 : fb;
    const Rat two_hop = f0 * 2;
    pay2 = two_hop < fb ? two_hop : fb;
  }

  Rat share(long ordered_pairs, long route_count) const {
    if (!routed1 || ordered_pairs <= 0) return Rat(0);
    Rat r = Rat(ordered_pairs) * Rat(k) * f0 / route_count;
    r.canonicalize();
    return r;
  }
};

}  // namespace

EquilibriumVerdict check_nash_restricted(const StrategyProfile& profile,
                                         const TopologyFamily& family, const FeePolicy& policy,
                                         const PaymentScenario& scenario,
                                         const GameParams& params) {
  params.check();
  if (!policy.is_uniform()) {
    throw std::invalid_argument("restricted check requires a uniform fee policy");
  }
  if (!scenario.is_homogeneous() || scenario.n_nodes() != params.n_nodes ||
      scenario.homogeneous_k() != params.k) {
    throw std::invalid_argument("restricted check requires the homogeneous scenario");
  }
  if (!(profile == generate(family, params))) {
    throw std::invalid_argument("profile does not match family " + family_to_string(family));
  }

  const long n = params.n_nodes;
  const EffectiveCosts eff(params, policy.uniform_fee());
  VerdictBuilder builder;

  auto outer_range = [](NodeId first, long count) {
    std::vector<NodeId> out;
    for (long i = 0; i < count; ++i) out.push_back(first + static_cast<NodeId>(i));
    return out;
  };

  switch (family.kind) {
    case Family::Star: {
      // Outer node opens channels to a in [1, N-2] other outer nodes.
      const Rat old_cost = Rat(n - 2) * eff.k * eff.pay1;
      for (long a = 1; a <= n - 2; ++a) {
        Rat new_cost = Rat(a) * eff.fb + Rat(n - 2 - a) * eff.k * eff.pay1 -
                       eff.share(a * (a - 1), 2);
        builder.consider(1, outer_range(2, a), old_cost, new_cost);
      }
      break;
    }
    case Family::TwoStar: {
      const Rat center_old = Rat(n - 2) * eff.fb + Rat(eff.k) * eff.pay1 -
                             eff.share((n - 2) * (n - 3), 2);
      const Rat outer_old = Rat(n - 3) * eff.k * eff.pay1 - eff.share(2, n - 2);
      // A: center keeps only b outer channels.
      for (long b = 1; b <= n - 3; ++b) {
        Rat new_cost = Rat(b) * eff.fb + Rat(eff.k) * eff.pay1 +
                       Rat(n - 2 - b) * eff.k * eff.pay2 - eff.share(b * (b - 1), 2);
        builder.consider(0, outer_range(2, b), center_old, new_cost);
      }
      // B: center links the other center plus b outers.
      for (long b = 0; b <= n - 2; ++b) {
        Rat new_cost = Rat(b + 1) * eff.fb + Rat(n - 2 - b) * eff.k * eff.pay1 -
                       eff.share(b * (b - 1), 2);
        std::vector<NodeId> alt{1};
        for (NodeId v : outer_range(2, b)) alt.push_back(v);
        builder.consider(0, alt, center_old, new_cost);
      }
      // C: outer opens channels to b other outer nodes.
      for (long b = 1; b <= n - 3; ++b) {
        Rat new_cost = Rat(b) * eff.fb + Rat(n - 3 - b) * eff.k * eff.pay1 -
                       eff.share(2, n - 2) - eff.share(b * (b - 1), 3);
        builder.consider(2, outer_range(3, b), outer_old, new_cost);
      }
      break;
    }
    case Family::CompleteBipartite: {
      const long c = family.centers;
      const long d = n - c;
      const Rat center_old = Rat(d) * eff.fb + Rat(c - 1) * eff.k * eff.pay1 -
                             eff.share(d * (d - 1), c);
      const Rat outer_old = Rat(d - 1) * eff.k * eff.pay1 - eff.share(c * (c - 1), d);
      // A: center keeps only b outer channels.
      for (long b = 1; b <= d - 1; ++b) {
        Rat new_cost = Rat(b) * eff.fb + Rat(c - 1) * eff.k * eff.pay1 +
                       Rat(d - b) * eff.k * eff.pay2 - eff.share(b * (b - 1), c);
        builder.consider(0, outer_range(static_cast<NodeId>(c), b), center_old, new_cost);
      }
      // B: center links a centers and b outers.
      for (long a = 1; a <= c - 1; ++a) {
        for (long b = 1; b <= d; ++b) {
          Rat new_cost = Rat(a + b) * eff.fb + Rat(d - b) * eff.k * eff.pay1 +
                         Rat(c - 1 - a) * eff.k * eff.pay1 - eff.share(b * (b - 1), c) -
                         eff.share(a * (a - 1), d + 1);
          std::vector<NodeId> alt = outer_range(1, a);
          for (NodeId v : outer_range(static_cast<NodeId>(c), b)) alt.push_back(v);
          builder.consider(0, alt, center_old, new_cost);
        }
      }
      // C: center links a centers only.
      for (long a = 1; a <= c - 1; ++a) {
        Rat new_cost = Rat(a) * eff.fb + Rat(d) * eff.k * eff.pay1 +
                       Rat(c - 1 - a) * eff.k * eff.pay2 - eff.share(a * (a - 1), d + 1);
        builder.consider(0, outer_range(1, a), center_old, new_cost);
      }
      // D: outer opens channels to b other outer nodes.
      for (long b = 1; b <= d - 1; ++b) {
        Rat new_cost = Rat(b) * eff.fb + Rat(d - 1 - b) * eff.k * eff.pay1 -
                       eff.share(c * (c - 1), d) - eff.share(b * (b - 1), c + 1);
        builder.consider(static_cast<NodeId>(c), outer_range(static_cast<NodeId>(c) + 1, b),
                         outer_old, new_cost);
      }
      break;
    }
    case Family::Clique: {
      for (NodeId i = 0; i < static_cast<NodeId>(n) - 1; ++i) {
        const long original = n - 1 - i;
        const Rat old_cost = Rat(original) * eff.fb;
        const long a_min = (i == 0) ? 1 : 0;
        for (long a = a_min; a <= original - 1; ++a) {
          Rat new_cost = Rat(a) * eff.fb + Rat(original - a) * eff.k * eff.pay1;
          builder.consider(i, outer_range(i + 1, a), old_cost, new_cost);
        }
      }
      break;
    }
    case Family::Path:
      throw std::invalid_argument(
          "the path has no restricted deviation family; use path_verdict or the exhaustive check");
  }
  return builder.verdict();
}

std::pair<std::vector<NodeId>, Rat> best_response(const StrategyProfile& profile,
                                                  const FeePolicy& policy,
                                                  const PaymentScenario& scenario,
                                                  const GameParams& params, NodeId node,
                                                  const ExhaustiveOptions& opts) {
  params.check();
  const int n = profile.n_nodes();
  if (node < 0 || node >= n) throw std::invalid_argument("unknown node id");
  if (n > opts.node_limit) {
    throw RefusalError("best response refused for N=" + std::to_string(n) + " > limit " +
                       std::to_string(opts.node_limit));
  }

  const std::vector<NodeId> peers = peers_of(node, n);
  StrategyProfile work = profile;
  std::optional<std::vector<NodeId>> best;
  Rat best_cost;
  const std::uint32_t masks = 1u << peers.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    std::vector<NodeId> candidate;
    for (size_t i = 0; i < peers.size(); ++i) {
      if (mask & (1u << i)) candidate.push_back(peers[i]);
    }
    work.set_strategy(node, candidate);
    const Rat cost =
        node_cost(RoutingField(work, policy), work, policy, scenario, params, node).total;
    bool better = false;
    if (!best || cost < best_cost) {
      better = true;
    } else if (cost == best_cost) {
      if (candidate.size() < best->size() ||
          (candidate.size() == best->size() &&
           std::lexicographical_compare(candidate.begin(), candidate.end(), best->begin(),
                                        best->end()))) {
        better = true;
      }
    }
    if (better) {
      best = candidate;
      best_cost = cost;
    }
  }
  return {*best, best_cost};
}

DynamicsTrace best_response_dynamics(const StrategyProfile& initial, const FeePolicy& policy,
                                     const PaymentScenario& scenario, const GameParams& params,
                                     int max_rounds, const ExhaustiveOptions& opts) {
  if (max_rounds < 0) throw std::invalid_argument("max_rounds must be >= 0");
  DynamicsTrace trace;
  trace.profiles.push_back(initial);
  StrategyProfile current = initial;
  for (int round = 0; round < max_rounds; ++round) {
    bool changed = false;
    for (NodeId u = 0; u < current.n_nodes(); ++u) {
      auto [strategy, cost] = best_response(current, policy, scenario, params, u, opts);
      if (strategy != current.strategy_of(u)) {
        current.set_strategy(u, strategy);
        changed = true;
      }
    }
    ++trace.rounds;
    if (changed) {
      trace.profiles.push_back(current);
    } else {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

namespace {

/// Integer engine for the full profile-space scan. All money amounts are
/// multiples of 1/S, with S chosen so every route fee, on-chain fee, and
/// revenue share is an exact int64.
class ScanEngine {
 public:
  ScanEngine(const GameParams& params, const Rat& f0, bool multiset)
      : n_(params.n_nodes), k_(params.k), multiset_(multiset) {
    // Shortest-path counts on up to 5 nodes never exceed 6, so scaling by
    // lcm(1..6) keeps every per-route revenue share integral.
    const long sigma_lcm = 60;
    mpz_class scale = lcm(params.blockchain_fee.get_den(), f0.get_den() * sigma_lcm);
    mpz_class fb_scaled = params.blockchain_fee.get_num() * (scale / params.blockchain_fee.get_den());
    mpz_class f0_scaled = f0.get_num() * (scale / f0.get_den());
    if (!fb_scaled.fits_slong_p() || !f0_scaled.fits_slong_p()) {
      throw std::invalid_argument("scan fees have too large numerators/denominators");
    }
    fb_ = fb_scaled.get_si();
    f0_ = f0_scaled.get_si();

    per_node_ = multiset_ ? pow_long(3, n_ - 1) : pow_long(2, n_ - 1);
    strategy_mask_.resize(static_cast<size_t>(n_) * per_node_);
    strategy_mu_.resize(static_cast<size_t>(n_) * per_node_);
    strategy_counts_.resize(static_cast<size_t>(n_) * per_node_);
    for (int u = 0; u < n_; ++u) {
      for (long s = 0; s < per_node_; ++s) {
        long rest = s;
        int mask = 0;
        int mu = 0;
        std::array<std::uint8_t, 5> counts{};
        int slot = 0;
        for (int v = 0; v < n_; ++v) {
          if (v == u) continue;
          const int radix = multiset_ ? 3 : 2;
          const int count = static_cast<int>(rest % radix);
          rest /= radix;
          counts[static_cast<size_t>(slot)] = static_cast<std::uint8_t>(count);
          if (count > 0) mask |= 1 << v;
          mu += count;
          ++slot;
        }
        strategy_mask_[index(u, s)] = mask;
        strategy_mu_[index(u, s)] = mu;
        strategy_counts_[index(u, s)] = counts;
      }
    }
  }

  long per_node() const { return per_node_; }

  long long total_profiles() const {
    long long total = 1;
    for (int u = 0; u < n_; ++u) total *= per_node_;
    return total;
  }

  int strategy_mask(int u, long s) const { return strategy_mask_[index(u, s)]; }
  int strategy_mu(int u, long s) const { return strategy_mu_[index(u, s)]; }

  /// Undirected adjacency (bitmask per node) of a full profile.
  std::array<int, 5> adjacency(const std::array<long, 5>& strategies) const {
    std::array<int, 5> adj{};
    for (int u = 0; u < n_; ++u) {
      const int mask = strategy_mask_[index(u, strategies[static_cast<size_t>(u)])];
      adj[static_cast<size_t>(u)] |= mask;
      for (int v = 0; v < n_; ++v) {
        if (mask & (1 << v)) adj[static_cast<size_t>(v)] |= 1 << u;
      }
    }
    return adj;
  }

  /// BFS distances and shortest-path counts from every node.
  void routing(const std::array<int, 5>& adj, int dist[5][5], long sig[5][5]) const {
    for (int s = 0; s < n_; ++s) {
      for (int v = 0; v < n_; ++v) {
        dist[s][v] = -1;
        sig[s][v] = 0;
      }
      dist[s][s] = 0;
      sig[s][s] = 1;
      std::array<int, 5> queue{};
      int head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        const int u = queue[static_cast<size_t>(head++)];
        const int du = dist[s][u];
        for (int v = 0; v < n_; ++v) {
          if (!(adj[static_cast<size_t>(u)] & (1 << v))) continue;
          if (dist[s][v] < 0) {
            dist[s][v] = du + 1;
            sig[s][v] = sig[s][u];
            queue[tail++] = v;
          } else if (dist[s][v] == du + 1) {
            sig[s][v] += sig[s][u];
          }
        }
      }
    }
  }

  /// Scaled cost of node `u` under the homogeneous scenario.
  long long node_cost_scaled(const std::array<long, 5>& strategies, int u) const {
    std::array<int, 5> adj = adjacency(strategies);
    int dist[5][5];
    long sig[5][5];
    routing(adj, dist, sig);

    long long cost =
        static_cast<long long>(strategy_mu_[index(u, strategies[static_cast<size_t>(u)])]) * fb_;
    for (int t = 0; t < n_; ++t) {
      if (t == u) continue;
      cost += k_ * payment_cost(dist[u][t]);
    }
    for (int s = 0; s < n_; ++s) {
      if (s == u) continue;
      for (int t = 0; t < n_; ++t) {
        if (t == s || t == u) continue;
        if (!routed(dist[s][t])) continue;
        if (dist[s][u] < 0 || dist[u][t] < 0) continue;
        if (dist[s][u] + dist[u][t] != dist[s][t]) continue;
        const long long through = static_cast<long long>(sig[s][u]) * sig[u][t];
        if (through == 0) continue;
        // f0_ is a multiple of lcm(1..6), so this division is exact.
        cost -= k_ * through * (f0_ / sig[s][t]);
      }
    }
    return cost;
  }

  bool routed(int hops) const {
    if (hops < 0) return false;
    return static_cast<long long>(hops - 1) * f0_ < fb_;
  }

  long long payment_cost(int hops) const {
    if (!routed(hops)) return fb_;
    return static_cast<long long>(hops - 1) * f0_;
  }

  bool has_duplicate(const std::array<long, 5>& strategies) const {
    std::array<std::array<int, 5>, 5> multiplicity{};
    for (int u = 0; u < n_; ++u) {
      const auto& counts = strategy_counts_[index(u, strategies[static_cast<size_t>(u)])];
      int slot = 0;
      for (int v = 0; v < n_; ++v) {
        if (v == u) continue;
        const int c = counts[static_cast<size_t>(slot++)];
        const int a = std::min(u, v);
        const int b = std::max(u, v);
        multiplicity[static_cast<size_t>(a)][static_cast<size_t>(b)] += c;
      }
    }
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (multiplicity[static_cast<size_t>(a)][static_cast<size_t>(b)] >= 2) return true;
      }
    }
    return false;
  }

  bool has_onchain_payment(const std::array<long, 5>& strategies) const {
    std::array<int, 5> adj = adjacency(strategies);
    int dist[5][5];
    long sig[5][5];
    routing(adj, dist, sig);
    for (int s = 0; s < n_; ++s) {
      for (int t = 0; t < n_; ++t) {
        if (s != t && !routed(dist[s][t])) return true;
      }
    }
    return false;
  }

  int n() const { return n_; }

 private:
  static long pow_long(long base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
  }

  size_t index(int u, long s) const {
    return static_cast<size_t>(u) * static_cast<size_t>(per_node_) + static_cast<size_t>(s);
  }

  int n_;
  long k_;
  bool multiset_;
  long per_node_ = 0;
  long long fb_ = 0;
  long long f0_ = 0;
  std::vector<int> strategy_mask_;
  std::vector<int> strategy_mu_;
  std::vector<std::array<std::uint8_t, 5>> strategy_counts_;
};

}  // namespace

LemmaScanReport lemma_properties_scan(const GameParams& params, const Rat& f0,
                                      bool multiset_mode) {
  params.check();
  if (f0 < 0) throw std::invalid_argument("fees must be nonnegative");
  const int n = params.n_nodes;
  if (multiset_mode && n > 4) {
    throw std::invalid_argument("multiset scan supports at most 4 nodes");
  }
  if (!multiset_mode && n > 5) {
    throw std::invalid_argument("profile-space scan supports at most 5 nodes");
  }

  ScanEngine engine(params, f0, multiset_mode);
  const long per_node = engine.per_node();
  const long long total = engine.total_profiles();

  std::vector<std::uint8_t> has_improvement(static_cast<size_t>(total), 0);
  std::vector<std::uint8_t> has_tie(static_cast<size_t>(total), 0);

  // Radix weights for profile ids.
  std::array<long long, 5> weight{};
  long long w = 1;
  for (int u = 0; u < n; ++u) {
    weight[static_cast<size_t>(u)] = w;
    w *= per_node;
  }

  std::vector<long long> row(static_cast<size_t>(per_node));
  std::array<long, 5> strategies{};
  for (int u = 0; u < n; ++u) {
    // Iterate every combination of the other nodes' strategies; for each,
    // cost out every strategy of u in one row.
    std::vector<int> others;
    for (int v = 0; v < n; ++v) {
      if (v != u) others.push_back(v);
    }
    std::vector<long> odo(others.size(), 0);
    while (true) {
      for (size_t i = 0; i < others.size(); ++i) {
        strategies[static_cast<size_t>(others[i])] = odo[i];
      }
      long long base_id = 0;
      for (size_t i = 0; i < others.size(); ++i) {
        base_id += weight[static_cast<size_t>(others[i])] * odo[i];
      }
      long long row_min = 0;
      for (long s = 0; s < per_node; ++s) {
        strategies[static_cast<size_t>(u)] = s;
        row[static_cast<size_t>(s)] = engine.node_cost_scaled(strategies, u);
        if (s == 0 || row[static_cast<size_t>(s)] < row_min) row_min = row[static_cast<size_t>(s)];
      }
      for (long s = 0; s < per_node; ++s) {
        const long long id = base_id + weight[static_cast<size_t>(u)] * s;
        const long long cost = row[static_cast<size_t>(s)];
        if (row_min < cost) {
          has_improvement[static_cast<size_t>(id)] = 1;
        } else {
          for (long s2 = 0; s2 < per_node; ++s2) {
            if (s2 != s && row[static_cast<size_t>(s2)] == cost) {
              has_tie[static_cast<size_t>(id)] = 1;
              break;
            }
          }
        }
      }
      // Advance the odometer.
      size_t pos = 0;
      while (pos < odo.size()) {
        if (++odo[pos] < per_node) break;
        odo[pos] = 0;
        ++pos;
      }
      if (pos == odo.size()) break;
    }
  }

  LemmaScanReport report;
  report.n_nodes = n;
  report.k = params.k;
  report.f0 = f0;
  report.blockchain_fee = params.blockchain_fee;
  report.multiset_mode = multiset_mode;
  report.profiles_scanned = total;

  std::array<long, 5> strategies_out{};
  for (long long id = 0; id < total; ++id) {
    if (has_improvement[static_cast<size_t>(id)]) {
      ++report.not_ne_count;
      continue;
    }
    if (has_tie[static_cast<size_t>(id)]) {
      ++report.weak_count;
      continue;
    }
    ++report.strict_count;
    long long rest = id;
    for (int u = 0; u < n; ++u) {
      strategies_out[static_cast<size_t>(u)] = static_cast<long>(rest % per_node);
      rest /= per_node;
    }
    if (engine.has_duplicate(strategies_out)) ++report.strict_with_duplicate;
    if (engine.has_onchain_payment(strategies_out)) ++report.strict_with_onchain;
  }
  report.no_strict_ne_has_duplicate = report.strict_with_duplicate == 0;
  report.no_strict_ne_has_onchain = report.strict_with_onchain == 0;
  return report;
}

}  // namespace channelgame
