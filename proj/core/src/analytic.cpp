#include "channelgame/analytic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "channelgame/svg.hpp"

namespace channelgame {

namespace {

Rat rat_of(long v) { return Rat(static_cast<long>(v)); }

Rat frac(long num, long den) {
  Rat r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

BoundCondition lower(BoundLabel label, Rat value) {
  return BoundCondition{label, BoundDirection::Lower, std::move(value)};
}

BoundCondition upper(BoundLabel label, Rat value) {
  return BoundCondition{label, BoundDirection::Upper, std::move(value)};
}

/// Conditions that also appear in the reduced final display; value ties
/// resolve toward these so active labels stay stable when corners coincide
/// (e.g. both upper corners equal (c+1)/(N-1) at c = N/2).
bool is_reduced_condition(BoundLabel label) {
  switch (label) {
    case BoundLabel::BipB_a1b1:
    case BoundLabel::BipC_a1:
    case BoundLabel::BipD_bDm1:
      return true;
    default:
      return false;
  }
}

/// Picks the max lower and min upper condition and fills the feasible band.
void finalize_report(BoundsReport& report) {
  auto better = [](const BoundCondition& cand, const BoundCondition& incumbent, bool want_max) {
    if (cand.value != incumbent.value) {
      return want_max ? cand.value > incumbent.value : cand.value < incumbent.value;
    }
    return is_reduced_condition(cand.label) && !is_reduced_condition(incumbent.label);
  };
  for (const BoundCondition& c : report.conditions) {
    if (c.direction == BoundDirection::Lower) {
      if (!report.active_lower || better(c, *report.active_lower, true)) report.active_lower = c;
    } else {
      if (!report.active_upper || better(c, *report.active_upper, false)) report.active_upper = c;
    }
  }
  report.feasible_lo = report.active_lower ? report.active_lower->value : Rat(0);
  if (report.active_upper) {
    report.feasible_hi = report.active_upper->value;
    report.feasible_nonempty = report.feasible_lo < *report.feasible_hi;
  } else {
    report.feasible_hi.reset();
    report.feasible_nonempty = true;
  }
}

}  // namespace

std::string bound_label_to_string(BoundLabel label) {
  switch (label) {
    case BoundLabel::StarA1: return "Star-a1";
    case BoundLabel::StarANm2: return "Star-aNminus2";
    case BoundLabel::TwoStarA_b1: return "TwoStar-A-b1";
    case BoundLabel::TwoStarA_bNm3: return "TwoStar-A-bNminus3";
    case BoundLabel::TwoStarB_b0: return "TwoStar-B-b0";
    case BoundLabel::TwoStarB_bNm2: return "TwoStar-B-bNminus2";
    case BoundLabel::TwoStarC_b1: return "TwoStar-C-b1";
    case BoundLabel::TwoStarC_bNm3: return "TwoStar-C-bNminus3";
    case BoundLabel::BipA_b1: return "Bip-A-b1";
    case BoundLabel::BipA_bDm1: return "Bip-A-bDminus1";
    case BoundLabel::BipB_a1b1: return "Bip-B-a1b1";
    case BoundLabel::BipB_a1bD: return "Bip-B-a1bD";
    case BoundLabel::BipB_aCm1b1: return "Bip-B-aCminus1b1";
    case BoundLabel::BipB_aCm1bD: return "Bip-B-aCminus1bD";
    case BoundLabel::BipC_a1: return "Bip-C-a1";
    case BoundLabel::BipC_aCm1: return "Bip-C-aCminus1";
    case BoundLabel::BipD_b1: return "Bip-D-b1";
    case BoundLabel::BipD_bDm1: return "Bip-D-bDminus1";
    case BoundLabel::CliqueA: return "Clique-A";
    case BoundLabel::CliqueB: return "Clique-B";
  }
  throw std::logic_error("unreachable");
}

BoundsReport star_bounds(const GameParams& params) {
  params.check_for_bounds();
  const long n = params.n_nodes;
  BoundsReport report;
  report.family = TopologyFamily::star();
  report.conditions.push_back(upper(BoundLabel::StarA1, Rat(1)));
  report.conditions.push_back(upper(BoundLabel::StarANm2, frac(2, n - 1)));
  finalize_report(report);
  return report;
}

BoundsReport two_star_bounds(const GameParams& params) {
  params.check_for_bounds();
  const long n = params.n_nodes;
  BoundsReport report;
  report.family = TopologyFamily::two_star();
  report.conditions.push_back(lower(BoundLabel::TwoStarA_b1, frac(2, n + 2)));
  report.conditions.push_back(lower(BoundLabel::TwoStarA_bNm3, frac(1, n - 1)));
  report.conditions.push_back(lower(BoundLabel::TwoStarB_b0, frac(2, n)));
  report.conditions.push_back(upper(BoundLabel::TwoStarB_bNm2, Rat(1)));
  report.conditions.push_back(upper(BoundLabel::TwoStarC_b1, Rat(1)));
  report.conditions.push_back(upper(BoundLabel::TwoStarC_bNm3, frac(3, n - 1)));
  finalize_report(report);
  return report;
}

BoundsReport bipartite_bounds(const GameParams& params, long c) {
  params.check_for_bounds();
  const long n = params.n_nodes;
  if (c < 2 || 2 * c > n) throw std::invalid_argument("complete bipartite requires 2 <= c <= N/2");
  const Rat N = rat_of(n);
  const Rat C = rat_of(c);

  BoundsReport report;
  report.family = TopologyFamily::bipartite(c);

  // Deviation A: center keeps b outer channels.
  report.conditions.push_back(lower(BoundLabel::BipA_b1, C / (N + C)));
  report.conditions.push_back(lower(BoundLabel::BipA_bDm1, C / (2 * N - 2)));

  // Deviation B: center links a centers and b outers.
  report.conditions.push_back(
      lower(BoundLabel::BipB_a1b1, (C * N - C * C - 2 * C) / (N * N - C * N + N - 3 * C)));
  report.conditions.push_back(upper(BoundLabel::BipB_a1bD, Rat(1)));
  report.conditions.push_back(
      lower(BoundLabel::BipB_aCm1b1,
            (C * N * N - 3 * C * C * N + C * N + 2 * C * C * C - 2 * C * C) /
                (N * N * N - 2 * C * N * N + C * N - N + C * C - C)));
  report.conditions.push_back(upper(BoundLabel::BipB_aCm1bD, (N - C + 1) / (N - 1)));

  // Deviation C: center links a centers only.
  report.conditions.push_back(
      lower(BoundLabel::BipC_a1, (C * N - C * C - C) / (N * N - C * N - N + C * C - 2 * C)));
  report.conditions.push_back(
      lower(BoundLabel::BipC_aCm1, (C * N * N - 3 * C * C * N + 2 * C * N + 2 * C * C * C -
                                    3 * C * C + C) /
                                       (N * N * N - 2 * C * N * N + 2 * C * N - N)));

  // Deviation D: outer opens channels to b other outers.
  report.conditions.push_back(upper(BoundLabel::BipD_b1, Rat(1)));
  report.conditions.push_back(upper(BoundLabel::BipD_bDm1, (C + 1) / (N - 1)));

  for (BoundCondition& cond : report.conditions) cond.value.canonicalize();
  finalize_report(report);
  return report;
}

Rat bipartite_b11_derived_lower(const GameParams& params, long c) {
  params.check_for_bounds();
  const long n = params.n_nodes;
  if (c < 2 || 2 * c > n) throw std::invalid_argument("complete bipartite requires 2 <= c <= N/2");
  const Rat C = rat_of(c);
  const Rat D = rat_of(n - c);
  Rat value = C * (D - 2) / (C * (D - 2) + D * (D - 1));
  value.canonicalize();
  return value;
}

BoundCondition clique_threshold(const GameParams& params) {
  params.check_for_bounds();
  return lower(BoundLabel::CliqueA, Rat(1));
}

PathVerdictResult path_verdict(const GameParams& params, const Rat& f0) {
  params.check_for_bounds();
  if (f0 < 0) throw std::invalid_argument("fees must be nonnegative");
  PathVerdictResult result;
  if (f0 == 0) {
    result.status = PathVerdictStatus::WeakNe;
    return result;
  }
  const Rat per_hop_cutoff = params.blockchain_fee;
  if (f0 < per_hop_cutoff) {
    // Endpoint 0 reconnects to a middle node: strictly fewer intermediaries
    // on its own payments, so a strict gain for any positive fee.
    result.status = PathVerdictStatus::NotNe;
    result.witness = PathWitness{0, {params.n_nodes / 2}};
    return result;
  }
  // f0 >= F_B: every multi-hop payment executes on-chain. Dropping a channel
  // then trades F_B of channel cost against k on-chain payments.
  if (params.k == 1) {
    result.status = PathVerdictStatus::WeakNe;
    return result;
  }
  std::vector<NodeId> all;
  for (NodeId v = 1; v < params.n_nodes; ++v) all.push_back(v);
  result.status = PathVerdictStatus::NotNe;
  result.witness = PathWitness{0, std::move(all)};
  return result;
}

std::vector<std::pair<long, long>> table1_paper_preset() {
  return {
      {1000, 2},    {1000, 3},    {1000, 5},     {1000, 10},    {1000, 100},   {1000, 499},
      {1000, 500},  {10000, 2},   {10000, 3},    {10000, 5},    {10000, 10},   {10000, 100},
      {10000, 1000}, {10000, 4999}, {10000, 5000}, {100000, 2},  {100000, 3},   {100000, 5},
      {100000, 10}, {100000, 100}, {100000, 1000}, {100000, 10000}, {100000, 49999},
      {100000, 50000},
  };
}

namespace {

int ref_index_conjecture(BoundLabel label, BoundDirection direction) {
  // The reference tabulation marks active bounds with bare integers it never
  // defines. Matching values row by row recovers: lower 3 <-> Bip-B-a1b1,
  // lower 5 <-> Bip-C-a1, upper 3 <-> Bip-D-bDminus1.
  if (direction == BoundDirection::Lower) {
    if (label == BoundLabel::BipB_a1b1) return 3;
    if (label == BoundLabel::BipC_a1) return 5;
    return 0;
  }
  return label == BoundLabel::BipD_bDm1 ? 3 : 0;
}

}  // namespace

std::vector<Table1Row> table1(const std::vector<std::pair<long, long>>& pairs) {
  std::vector<Table1Row> rows;
  rows.reserve(pairs.size());
  for (const auto& [n, c] : pairs) {
    if (n > static_cast<long>(std::numeric_limits<int>::max())) {
      throw std::invalid_argument("n out of range");
    }
    GameParams params{static_cast<int>(n), Rat(1), 1};
    BoundsReport report = bipartite_bounds(params, c);
    if (!report.active_lower || !report.active_upper) {
      throw std::logic_error("bipartite bounds must have both active bounds");
    }
    Table1Row row;
    row.n = n;
    row.c = c;
    row.lower = report.active_lower->value;
    row.upper = report.active_upper->value;
    row.lower_label = report.active_lower->label;
    row.upper_label = report.active_upper->label;
    row.ref_lower_index = ref_index_conjecture(row.lower_label, BoundDirection::Lower);
    row.ref_upper_index = ref_index_conjecture(row.upper_label, BoundDirection::Upper);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table1_csv(const std::vector<Table1Row>& rows, int precision) {
  std::ostringstream os;
  os << "n,c,lower,upper,lower_exact,upper_exact,active_lb,active_ub,ref_lb,ref_ub\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.c << ',' << format_decimal(r.lower, precision) << ','
       << format_decimal(r.upper, precision) << ',' << rat_to_string(r.lower) << ','
       << rat_to_string(r.upper) << ',' << bound_label_to_string(r.lower_label) << ','
       << bound_label_to_string(r.upper_label) << ',' << r.ref_lower_index << ','
       << r.ref_upper_index << '\n';
  }
  return os.str();
}

std::vector<Figure1Row> figure1_data(const GameParams& params) {
  params.check_for_bounds();
  std::vector<Figure1Row> rows;
  for (long c = 2; 2 * c <= params.n_nodes; ++c) {
    BoundsReport report = bipartite_bounds(params, c);
    Figure1Row row;
    row.c = c;
    row.conditions = report.conditions;
    row.active_lower = report.active_lower->value;
    row.active_upper = report.active_upper->value;
    row.band_nonempty = report.feasible_nonempty;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string figure1_csv(const std::vector<Figure1Row>& rows, int precision) {
  std::ostringstream os;
  os << "c,condition_label,direction,value_exact,value_decimal\n";
  for (const auto& row : rows) {
    for (const auto& cond : row.conditions) {
      os << row.c << ',' << bound_label_to_string(cond.label) << ','
         << (cond.direction == BoundDirection::Lower ? "lower" : "upper") << ','
         << rat_to_string(cond.value) << ',' << format_decimal(cond.value, precision) << '\n';
    }
  }
  return os.str();
}

std::string figure1_svg(const std::vector<Figure1Row>& rows, long n_nodes) {
  if (rows.empty()) throw std::invalid_argument("no rows to plot");
  SvgChart chart(800, 560);
  chart.set_title("Equilibrium fee bounds, N=" + std::to_string(n_nodes));
  chart.set_axis_labels("c (center nodes)", "f0 [F_B/k]");
  chart.set_x_range(Rat(rows.front().c), Rat(rows.back().c));
  chart.set_y_range(Rat(0), Rat(1));

  const size_t n_conditions = rows.front().conditions.size();
  for (size_t i = 0; i < n_conditions; ++i) {
    std::vector<std::pair<Rat, Rat>> points;
    points.reserve(rows.size());
    for (const auto& row : rows) {
      points.emplace_back(Rat(row.c), row.conditions[i].value);
    }
    const auto& cond = rows.front().conditions[i];
    const bool is_lower = cond.direction == BoundDirection::Lower;
    chart.add_series(bound_label_to_string(cond.label), is_lower ? "blue" : "red",
                     std::move(points));
  }
  return chart.render();
}

namespace closed_form {

Rat star_center_cost(const GameParams& params, const Rat& f0) {
  const Rat N = rat_of(params.n_nodes);
  return (N - 1) * params.blockchain_fee - (N - 1) * (N - 2) * params.k * f0;
}

Rat star_outer_cost(const GameParams& params, const Rat& f0) {
  const Rat N = rat_of(params.n_nodes);
  return (N - 2) * params.k * f0;
}

Rat star_outer_deviation_cost(const GameParams& params, const Rat& f0, long a) {
  const Rat N = rat_of(params.n_nodes);
  const Rat A = rat_of(a);
  return A * params.blockchain_fee + (N - 2 - A) * params.k * f0 -
         A * (A - 1) * params.k * f0 / 2;
}

Rat two_star_center_cost(const GameParams& params, const Rat& f0) {
  const Rat N = rat_of(params.n_nodes);
  return (N - 2) * params.blockchain_fee + params.k * f0 -
         (N - 2) * (N - 3) * params.k * f0 / 2;
}

Rat two_star_outer_cost(const GameParams& params, const Rat& f0) {
  const Rat N = rat_of(params.n_nodes);
  return (N - 3) * params.k * f0 - 2 * params.k * f0 / (N - 2);
}

Rat two_star_deviation_a_cost(const GameParams& params, const Rat& f0, long b) {
  const Rat N = rat_of(params.n_nodes);
  const Rat B = rat_of(b);
  return B * params.blockchain_fee + params.k * f0 + (N - 2 - B) * params.k * 2 * f0 -
         B * (B - 1) * params.k * f0 / 2;
}

Rat two_star_deviation_b_cost(const GameParams& params, const Rat& f0, long b) {
  const Rat N = rat_of(params.n_nodes);
  const Rat B = rat_of(b);
  return (B + 1) * params.blockchain_fee + (N - 2 - B) * params.k * f0 -
         B * (B - 1) * params.k * f0 / 2;
}

Rat two_star_deviation_c_cost(const GameParams& params, const Rat& f0, long b) {
  const Rat N = rat_of(params.n_nodes);
  const Rat B = rat_of(b);
  return B * params.blockchain_fee + (N - 3 - B) * params.k * f0 -
         2 * params.k * f0 / (N - 2) - B * (B - 1) * params.k * f0 / 3;
}

Rat bipartite_center_cost(const GameParams& params, long c, const Rat& f0) {
  const Rat C = rat_of(c);
  const Rat D = rat_of(params.n_nodes - c);
  return D * params.blockchain_fee + (C - 1) * params.k * f0 -
         D * (D - 1) * params.k * f0 / C;
}

Rat bipartite_outer_cost(const GameParams& params, long c, const Rat& f0) {
  const Rat C = rat_of(c);
  const Rat D = rat_of(params.n_nodes - c);
  return (D - 1) * params.k * f0 - C * (C - 1) * params.k * f0 / D;
}

Rat bipartite_deviation_a_cost(const GameParams& params, long c, const Rat& f0, long b) {
  const Rat C = rat_of(c);
  const Rat D = rat_of(params.n_nodes - c);
  const Rat B = rat_of(b);
  return B * params.blockchain_fee + (C - 1) * params.k * f0 + (D - B) * params.k * 2 * f0 -
         B * (B - 1) * params.k * f0 / C;
}

Rat bipartite_deviation_b_cost(const GameParams& params, long c, const Rat& f0, long a, long b) {
  const Rat C = rat_of(c);
  const Rat D = rat_of(params.n_nodes - c);
  const Rat A = rat_of(a);
  const Rat B = rat_of(b);
  return (A + B) * params.blockchain_fee + (D - B) * params.k * f0 +
         (C - 1 - A) * params.k * f0 - B * (B - 1) * params.k * f0 / C -
         A * (A - 1) * params.k * f0 / (D + 1);
}

Rat bipartite_deviation_c_cost(const GameParams& params, long c, const Rat& f0, long a) {
  const Rat C = rat_of(c);
  const Rat D = rat_of(params.n_nodes - c);
  const Rat A = rat_of(a);
  return A * params.blockchain_fee + D * params.k * f0 + (C - 1 - A) * params.k * 2 * f0 -
         A * (A - 1) * params.k * f0 / (D + 1);
}

Rat bipartite_deviation_d_cost(const GameParams& params, long c, const Rat& f0, long b) {
  const Rat C = rat_of(c);
  const Rat D = rat_of(params.n_nodes - c);
  const Rat B = rat_of(b);
  // The quadratic revenue term reads b*(b-1); the tabulated display's b*(n-1)
  // is dimensionally inconsistent with the other deviations and with the
  // derived upper bound (c+1)/(N-1).
  return B * params.blockchain_fee + (D - 1 - B) * params.k * f0 -
         C * (C - 1) * params.k * f0 / D - B * (B - 1) * params.k * f0 / (C + 1);
}

Rat clique_node_cost(const GameParams& params, NodeId i) {
  if (i < 0 || i >= params.n_nodes) throw std::invalid_argument("node out of range");
  return Rat(static_cast<long>(params.n_nodes) - 1 - i) * params.blockchain_fee;
}

Rat clique_deviation_cost(const GameParams& params, const Rat& f0, NodeId i, long a) {
  const long original = static_cast<long>(params.n_nodes) - 1 - i;
  if (a < 0 || a > original) throw std::invalid_argument("deviation keeps more channels than opened");
  return rat_of(a) * params.blockchain_fee + rat_of(original - a) * params.k * f0;
}

}  // namespace closed_form

}  // namespace channelgame
