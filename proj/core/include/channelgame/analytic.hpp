#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "channelgame/model.hpp"
#include "channelgame/topology.hpp"

namespace channelgame {

enum class BoundDirection { Lower, Upper };

/// Identifies one deviation-family corner condition.
enum class BoundLabel {
  StarA1,
  StarANm2,
  TwoStarA_b1,
  TwoStarA_bNm3,
  TwoStarB_b0,
  TwoStarB_bNm2,
  TwoStarC_b1,
  TwoStarC_bNm3,
  BipA_b1,
  BipA_bDm1,
  BipB_a1b1,
  BipB_a1bD,
  BipB_aCm1b1,
  BipB_aCm1bD,
  BipC_a1,
  BipC_aCm1,
  BipD_b1,
  BipD_bDm1,
  CliqueA,
  CliqueB,
};

std::string bound_label_to_string(BoundLabel label);

/// One corner condition. `value` is in F_B/k units: the equilibrium region is
/// f0 > value (Lower) respectively f0 < value (Upper), strictly.
struct BoundCondition {
  BoundLabel label;
  BoundDirection direction;
  Rat value;
};

/// All corner conditions for a family plus the binding ones. The feasible fee
/// interval is open; a missing active bound means the region extends to 0
/// (below) or is unbounded (above).
struct BoundsReport {
  TopologyFamily family;
  std::vector<BoundCondition> conditions;
  std::optional<BoundCondition> active_lower;  // max over Lower conditions
  std::optional<BoundCondition> active_upper;  // min over Upper conditions
  Rat feasible_lo;                             // 0 when no lower condition
  std::optional<Rat> feasible_hi;
  bool feasible_nonempty = false;
};

BoundsReport star_bounds(const GameParams& params);
BoundsReport two_star_bounds(const GameParams& params);
BoundsReport bipartite_bounds(const GameParams& params, long c);
BoundCondition clique_threshold(const GameParams& params);

/// Lower bound for the center deviation to one center and one outer node,
/// derived directly from the cost functions: c(d-2) / (c(d-2) + d(d-1)) with
/// d = N-c. The tabulated BipB_a1b1 condition value uses a different
/// denominator and disagrees with the cost functions; cross-validation tests
/// pin this derived form against simulation.
Rat bipartite_b11_derived_lower(const GameParams& params, long c);

enum class PathVerdictStatus { WeakNe, NotNe };

struct PathWitness {
  NodeId node;
  std::vector<NodeId> alternative;
};

struct PathVerdictResult {
  PathVerdictStatus status;
  std::optional<PathWitness> witness;  // present for NotNe
};

/// The path profile: weak equilibrium exactly when no fee income exists.
/// For 0 < f0 < F_B an endpoint strictly gains by reconnecting to a middle
/// node. For f0 >= F_B all multi-hop payments fall back on-chain; dropping or
/// moving channels then ties at k == 1 (weak NE) and loses at k >= 2.
PathVerdictResult path_verdict(const GameParams& params, const Rat& f0);

struct Table1Row {
  long n = 0;
  long c = 0;
  Rat lower;  // active lower, F_B/k units
  Rat upper;  // active upper, F_B/k units
  BoundLabel lower_label;
  BoundLabel upper_label;
  int ref_lower_index = 0;  // conjectured index used by the reference tabulation, 0 when unmapped
  int ref_upper_index = 0;
};

/// The (N, c) grid of the reference tabulation reproduced by `table1 --preset paper`.
std::vector<std::pair<long, long>> table1_paper_preset();

std::vector<Table1Row> table1(const std::vector<std::pair<long, long>>& pairs);

std::string table1_csv(const std::vector<Table1Row>& rows, int precision = 7);

struct Figure1Row {
  long c = 0;
  std::vector<BoundCondition> conditions;
  Rat active_lower;
  Rat active_upper;
  bool band_nonempty = false;
};

/// Full bound sweep over c = 2..N/2.
std::vector<Figure1Row> figure1_data(const GameParams& params);

/// CSV: c,condition_label,direction,value_exact,value_decimal.
std::string figure1_csv(const std::vector<Figure1Row>& rows, int precision = 7);

/// Deterministic band plot: lower-bound series in blue, upper-bound series in
/// red, linear axes. Byte-identical output for identical inputs.
std::string figure1_svg(const std::vector<Figure1Row>& rows, long n_nodes);

/// Closed-form node costs for the named profiles and their deviation
/// families, in money units. Valid while every payment stays off-chain
/// (the two-intermediate detours in the A/C deviations need 2*f0 < F_B).
namespace closed_form {

Rat star_center_cost(const GameParams& params, const Rat& f0);
Rat star_outer_cost(const GameParams& params, const Rat& f0);
/// Outer node opens channels to a other outer nodes, a in [1, N-2].
Rat star_outer_deviation_cost(const GameParams& params, const Rat& f0, long a);

Rat two_star_center_cost(const GameParams& params, const Rat& f0);
Rat two_star_outer_cost(const GameParams& params, const Rat& f0);
/// Center keeps only b outer channels, b in [1, N-3].
Rat two_star_deviation_a_cost(const GameParams& params, const Rat& f0, long b);
/// Center links the other center plus b outer nodes, b in [0, N-2].
Rat two_star_deviation_b_cost(const GameParams& params, const Rat& f0, long b);
/// Outer node opens channels to b other outer nodes, b in [1, N-3].
Rat two_star_deviation_c_cost(const GameParams& params, const Rat& f0, long b);

Rat bipartite_center_cost(const GameParams& params, long c, const Rat& f0);
Rat bipartite_outer_cost(const GameParams& params, long c, const Rat& f0);
/// Center keeps only b outer channels, b in [1, d-1].
Rat bipartite_deviation_a_cost(const GameParams& params, long c, const Rat& f0, long b);
/// Center links a centers and b outers, a in [1, c-1], b in [1, d].
Rat bipartite_deviation_b_cost(const GameParams& params, long c, const Rat& f0, long a, long b);
/// Center links a centers only, a in [1, c-1].
Rat bipartite_deviation_c_cost(const GameParams& params, long c, const Rat& f0, long a);
/// Outer node opens channels to b other outer nodes, b in [1, d-1].
Rat bipartite_deviation_d_cost(const GameParams& params, long c, const Rat& f0, long b);

/// Node i (0-based) opens N-1-i channels in the clique.
Rat clique_node_cost(const GameParams& params, NodeId i);
/// Node i keeps a of its original channels, a in [0, N-2-i].
Rat clique_deviation_cost(const GameParams& params, const Rat& f0, NodeId i, long a);

}  // namespace closed_form

}  // namespace channelgame
