// channelgame: analyze channel-network creation games from the command line.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "channelgame/analytic.hpp"
#include "channelgame/cost.hpp"
#include "channelgame/equilibrium.hpp"
#include "channelgame/feegame.hpp"
#include "channelgame/json_io.hpp"
#include "channelgame/topology.hpp"

using namespace channelgame;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefused = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ExhaustiveOptions exhaustive_options() {
  ExhaustiveOptions opts;
  if (const char* env = std::getenv("CHANNELGAME_EXHAUSTIVE_LIMIT")) {
    opts.node_limit = std::atoi(env);
    if (opts.node_limit < 2) throw UsageError("CHANNELGAME_EXHAUSTIVE_LIMIT must be >= 2");
  }
  return opts;
}

Rat parse_rat(const std::string& text) {
  try {
    return rat_from_string(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad rational '") + text + "': " + e.what());
  }
}

/// Inputs shared by the profile-driven commands.
struct ProfileArgs {
  std::string profile_path;
  std::string family_name;
  int nodes = 0;
  std::string fb = "1";
  long k = 1;
  std::string fee;

  void attach(CLI::App* cmd, bool fee_required) {
    cmd->add_option("--profile", profile_path, "profile JSON file");
    cmd->add_option("--family", family_name,
                    "generate the profile: path|star|two-star|bipartite:<c>|clique");
    cmd->add_option("--nodes", nodes, "node count for --family");
    cmd->add_option("--fb", fb, "blockchain fee F_B (rational, with --family)");
    cmd->add_option("--k", k, "payments per ordered pair (with --family)");
    auto* fee_opt = cmd->add_option("--fee", fee, "uniform forwarding fee f0 (rational)");
    if (fee_required) fee_opt->required();
  }

  struct Loaded {
    GameParams params;
    StrategyProfile profile;
    FeePolicy policy = FeePolicy::uniform(Rat(0));
    std::optional<TopologyFamily> family;
  };

  Loaded load() const {
    Loaded out;
    if (!profile_path.empty()) {
      ProfileDocument doc = profile_from_json(json::parse(read_text_file(profile_path)));
      out.params = doc.params;
      out.profile = doc.profile;
      if (!fee.empty()) {
        out.policy = FeePolicy::uniform(parse_rat(fee));
      } else if (doc.fee_policy) {
        out.policy = *doc.fee_policy;
      } else {
        throw UsageError("profile file has no fee_policy; pass --fee");
      }
      if (!family_name.empty()) out.family = parse_family(family_name);
    } else if (!family_name.empty()) {
      if (nodes < 2) throw UsageError("--family needs --nodes");
      out.params = GameParams{nodes, parse_rat(fb), k};
      out.family = parse_family(family_name);
      out.profile = generate(*out.family, out.params);
      if (fee.empty()) throw UsageError("--family needs --fee");
      out.policy = FeePolicy::uniform(parse_rat(fee));
    } else {
      throw UsageError("pass --profile FILE or --family NAME --nodes N");
    }
    out.params.check();
    return out;
  }
};

void print_bounds_report(const BoundsReport& report, const GameParams& params,
                         const std::string& format) {
  const Rat unit = params.blockchain_fee / Rat(params.k);
  if (format == "json") {
    json conditions = json::array();
    for (const auto& c : report.conditions) {
      conditions.push_back({{"label", bound_label_to_string(c.label)},
                            {"direction", c.direction == BoundDirection::Lower ? "lower" : "upper"},
                            {"value", rat_to_string(c.value)},
                            {"value_money", rat_to_string(Rat(c.value * unit))}});
    }
    json j{{"family", family_to_string(report.family)}, {"conditions", conditions}};
    j["active_lower"] =
        report.active_lower ? json(bound_label_to_string(report.active_lower->label)) : json(nullptr);
    j["active_upper"] =
        report.active_upper ? json(bound_label_to_string(report.active_upper->label)) : json(nullptr);
    j["feasible_lo"] = rat_to_string(report.feasible_lo);
    j["feasible_hi"] = report.feasible_hi ? json(rat_to_string(*report.feasible_hi)) : json(nullptr);
    j["feasible_nonempty"] = report.feasible_nonempty;
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "condition_label,direction,value_exact,value_decimal,value_money\n";
    for (const auto& c : report.conditions) {
      std::cout << bound_label_to_string(c.label) << ','
                << (c.direction == BoundDirection::Lower ? "lower" : "upper") << ','
                << rat_to_string(c.value) << ',' << format_decimal(c.value, 7) << ','
                << format_decimal(Rat(c.value * unit), 7) << '\n';
    }
    return;
  }
  std::cout << "family: " << family_to_string(report.family) << "\n";
  std::cout << "conditions (values in F_B/k units):\n";
  for (const auto& c : report.conditions) {
    std::cout << "  " << bound_label_to_string(c.label) << "  "
              << (c.direction == BoundDirection::Lower ? "f0 > " : "f0 < ")
              << format_decimal(c.value, 7) << "  (" << rat_to_string(c.value) << ")\n";
  }
  if (report.active_lower) {
    std::cout << "active lower: " << bound_label_to_string(report.active_lower->label) << " = "
              << format_decimal(report.active_lower->value, 7) << "\n";
  } else {
    std::cout << "active lower: none (region starts at 0)\n";
  }
  if (report.active_upper) {
    std::cout << "active upper: " << bound_label_to_string(report.active_upper->label) << " = "
              << format_decimal(report.active_upper->value, 7) << "\n";
  } else {
    std::cout << "active upper: none (region unbounded above)\n";
  }
  std::cout << "feasible band (F_B/k): (" << format_decimal(report.feasible_lo, 7) << ", "
            << (report.feasible_hi ? format_decimal(*report.feasible_hi, 7) : std::string("inf"))
            << ")" << (report.feasible_nonempty ? "" : "  [empty]") << "\n";
  std::cout << "feasible band (money): (" << format_decimal(Rat(report.feasible_lo * unit), 7)
            << ", "
            << (report.feasible_hi ? format_decimal(Rat(*report.feasible_hi * unit), 7)
                                   : std::string("inf"))
            << ")\n";
}

void print_verdict(const EquilibriumVerdict& verdict, const std::string& format) {
  if (format == "json") {
    std::cout << verdict_to_json(verdict).dump(2) << "\n";
    return;
  }
  std::cout << "status: " << ne_status_to_string(verdict.status) << "\n";
  std::cout << "ties:   " << verdict.ties << "\n";
  if (verdict.witness) {
    std::cout << "witness: node " << verdict.witness->node << " -> {";
    for (size_t i = 0; i < verdict.witness->alternative.size(); ++i) {
      std::cout << (i ? "," : "") << verdict.witness->alternative[i];
    }
    std::cout << "}  cost " << rat_to_string(verdict.witness->old_cost) << " -> "
              << rat_to_string(verdict.witness->new_cost) << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"channel-network creation game analyzer"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "output format: human|json|csv")->capture_default_str();

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form equilibrium fee bounds");
  std::string bounds_family;
  int bounds_nodes = 0;
  long bounds_centers = 0;
  std::string bounds_fb = "1";
  long bounds_k = 1;
  std::string bounds_fee;
  bounds_cmd->add_option("--family", bounds_family, "path|star|two-star|bipartite:<c>|clique")
      ->required();
  bounds_cmd->add_option("--nodes", bounds_nodes, "node count N")->required();
  bounds_cmd->add_option("--centers", bounds_centers, "center count c (bipartite)");
  bounds_cmd->add_option("--fb", bounds_fb, "blockchain fee F_B");
  bounds_cmd->add_option("--k", bounds_k, "payments per ordered pair");
  bounds_cmd->add_option("--fee", bounds_fee, "fee to classify (path only)");

  // table1
  auto* table_cmd = app.add_subcommand("table1", "reference bound tabulation");
  std::string table_preset = "paper";
  std::string table_pairs;
  std::string table_out;
  table_cmd->add_option("--preset", table_preset, "preset grid: paper");
  table_cmd->add_option("--pairs", table_pairs, "custom grid, e.g. 1000:2,10000:3");
  table_cmd->add_option("--out", table_out, "write CSV to this path");

  // plot-bounds
  auto* plot_cmd = app.add_subcommand("plot-bounds", "bound sweep over c with SVG output");
  int plot_nodes = 0;
  std::string plot_out;
  std::string plot_csv;
  plot_cmd->add_option("--nodes", plot_nodes, "node count N")->required();
  plot_cmd->add_option("--out", plot_out, "SVG output path")->required();
  plot_cmd->add_option("--csv", plot_csv, "also write the CSV series here");

  // cost
  auto* cost_cmd = app.add_subcommand("cost", "per-node cost breakdown");
  ProfileArgs cost_args;
  cost_args.attach(cost_cmd, false);
  std::string cost_scenario_path;
  int cost_precision = 7;
  std::string cost_csv_out;
  cost_cmd->add_option("--scenario", cost_scenario_path, "scenario JSON (default homogeneous)");
  cost_cmd->add_option("--precision", cost_precision, "decimal significant digits");
  cost_cmd->add_option("--out", cost_csv_out, "write CSV to this path");

  // nash
  auto* nash_cmd = app.add_subcommand("nash", "equilibrium check by deviation search");
  ProfileArgs nash_args;
  nash_args.attach(nash_cmd, true);
  std::string nash_mode = "exhaustive";
  nash_cmd->add_option("--mode", nash_mode, "exhaustive|restricted")->capture_default_str();

  // dynamics
  auto* dyn_cmd = app.add_subcommand("dynamics", "round-robin best-response dynamics");
  ProfileArgs dyn_args;
  dyn_args.attach(dyn_cmd, true);
  int dyn_rounds = 20;
  dyn_cmd->add_option("--max-rounds", dyn_rounds, "round limit")->capture_default_str();

  // feegame
  auto* fee_cmd = app.add_subcommand("feegame", "fixed-graph free-fee analyses");
  fee_cmd->require_subcommand(1);
  auto* lemma3_cmd = fee_cmd->add_subcommand("lemma3", "two disjoint free routes per pair?");
  ProfileArgs lemma3_args;
  lemma3_args.attach(lemma3_cmd, false);
  std::string lemma3_fees_path;
  lemma3_cmd->add_option("--fees", lemma3_fees_path, "fee assignment JSON")->required();

  auto* fee_bip_cmd = fee_cmd->add_subcommand("bipartite", "free-fee verdict for the bipartite class");
  int fee_bip_nodes = 0;
  long fee_bip_centers = 0;
  std::string fee_bip_fees_path;
  std::string fee_bip_fb = "1";
  long fee_bip_k = 3;
  fee_bip_cmd->add_option("--nodes", fee_bip_nodes)->required();
  fee_bip_cmd->add_option("--centers", fee_bip_centers)->required();
  fee_bip_cmd->add_option("--fees", fee_bip_fees_path, "fee assignment JSON (default all zero)");
  fee_bip_cmd->add_option("--fb", fee_bip_fb);
  fee_bip_cmd->add_option("--k", fee_bip_k);

  auto* fee_star_cmd = fee_cmd->add_subcommand("star-fee", "star fee pushed to its bound");
  int fee_star_nodes = 0;
  std::string fee_star_eps;
  std::string fee_star_fb = "1";
  long fee_star_k = 1;
  fee_star_cmd->add_option("--nodes", fee_star_nodes)->required();
  fee_star_cmd->add_option("--epsilon", fee_star_eps)->required();
  fee_star_cmd->add_option("--fb", fee_star_fb);
  fee_star_cmd->add_option("--k", fee_star_k);

  // lemma-scan
  auto* scan_cmd = app.add_subcommand("lemma-scan", "full profile-space equilibrium scan");
  int scan_nodes = 4;
  std::string scan_fee;
  std::string scan_fb = "1";
  long scan_k = 2;
  bool scan_no_multiset = false;
  scan_cmd->add_option("--nodes", scan_nodes)->capture_default_str();
  scan_cmd->add_option("--fee", scan_fee, "uniform fee f0")->required();
  scan_cmd->add_option("--fb", scan_fb);
  scan_cmd->add_option("--k", scan_k);
  scan_cmd->add_flag("--no-multiset", scan_no_multiset, "plain subsets only (allows N=5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (bounds_cmd->parsed()) {
    TopologyFamily family = parse_family(bounds_family);
    if (family.kind == Family::CompleteBipartite && bounds_centers > 0) {
      family.centers = bounds_centers;
    }
    if (family.kind == Family::CompleteBipartite && family.centers == 0) {
      throw UsageError("bipartite bounds need --centers or bipartite:<c>");
    }
    GameParams params{bounds_nodes, parse_rat(bounds_fb), bounds_k};
    switch (family.kind) {
      case Family::Star:
        print_bounds_report(star_bounds(params), params, format);
        break;
      case Family::TwoStar:
        print_bounds_report(two_star_bounds(params), params, format);
        break;
      case Family::CompleteBipartite:
        print_bounds_report(bipartite_bounds(params, family.centers), params, format);
        break;
      case Family::Clique: {
        BoundCondition c = clique_threshold(params);
        const Rat money = c.value * params.blockchain_fee / params.k;
        if (format == "json") {
          json j{{"family", "clique"},
                 {"threshold", rat_to_string(c.value)},
                 {"threshold_money", rat_to_string(money)},
                 {"direction", "lower"}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "clique equilibrium region: f0 > " << format_decimal(c.value, 7)
                    << " F_B/k  (= " << rat_to_string(money) << " money units, strict)\n";
        }
        break;
      }
      case Family::Path: {
        if (bounds_fee.empty()) throw UsageError("path classification needs --fee");
        PathVerdictResult r = path_verdict(params, parse_rat(bounds_fee));
        if (format == "json") {
          json j{{"family", "path"},
                 {"status", r.status == PathVerdictStatus::WeakNe ? "WEAK_NE" : "NOT_NE"}};
          if (r.witness) {
            j["witness"] = {{"node", r.witness->node}, {"alternative", r.witness->alternative}};
          }
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "path: "
                    << (r.status == PathVerdictStatus::WeakNe ? "WEAK_NE" : "NOT_NE") << "\n";
          if (r.witness) {
            std::cout << "witness: node " << r.witness->node << " reconnects to {";
            for (size_t i = 0; i < r.witness->alternative.size(); ++i) {
              std::cout << (i ? "," : "") << r.witness->alternative[i];
            }
            std::cout << "}\n";
          }
        }
        break;
      }
    }
    return kExitOk;
  }

  if (table_cmd->parsed()) {
    std::vector<std::pair<long, long>> pairs;
    if (!table_pairs.empty()) {
      std::stringstream ss(table_pairs);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("pairs must look like N:c");
        pairs.emplace_back(std::stol(item.substr(0, colon)), std::stol(item.substr(colon + 1)));
      }
    } else if (table_preset == "paper") {
      pairs = table1_paper_preset();
    } else {
      throw UsageError("unknown preset: " + table_preset);
    }
    auto rows = table1(pairs);
    const std::string csv = table1_csv(rows);
    if (!table_out.empty()) write_text_file(table_out, csv);
    if (format == "csv") {
      std::cout << csv;
    } else if (format == "json") {
      json out = json::array();
      for (const auto& r : rows) {
        out.push_back({{"n", r.n},
                       {"c", r.c},
                       {"lower", format_decimal(r.lower, 7)},
                       {"upper", format_decimal(r.upper, 7)},
                       {"lower_exact", rat_to_string(r.lower)},
                       {"upper_exact", rat_to_string(r.upper)},
                       {"active_lb", bound_label_to_string(r.lower_label)},
                       {"active_ub", bound_label_to_string(r.upper_label)},
                       {"ref_lb", r.ref_lower_index},
                       {"ref_ub", r.ref_upper_index}});
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "     N      c      lower      upper  active_lb     active_ub  ref\n";
      for (const auto& r : rows) {
        std::printf("%6ld %6ld %10s %10s %-12s %-12s %d/%d\n", r.n, r.c,
                    format_decimal(r.lower, 7).c_str(), format_decimal(r.upper, 7).c_str(),
                    bound_label_to_string(r.lower_label).c_str(),
                    bound_label_to_string(r.upper_label).c_str(), r.ref_lower_index,
                    r.ref_upper_index);
      }
    }
    return kExitOk;
  }

  if (plot_cmd->parsed()) {
    GameParams params{plot_nodes, Rat(1), 1};
    auto rows = figure1_data(params);
    write_text_file(plot_out, figure1_svg(rows, plot_nodes));
    if (!plot_csv.empty()) write_text_file(plot_csv, figure1_csv(rows));
    std::cout << "wrote " << plot_out;
    if (!plot_csv.empty()) std::cout << " and " << plot_csv;
    std::cout << " (" << rows.size() << " values of c)\n";
    return kExitOk;
  }

  if (cost_cmd->parsed()) {
    auto loaded = cost_args.load();
    PaymentScenario scenario = PaymentScenario::homogeneous(loaded.params);
    if (!cost_scenario_path.empty()) {
      scenario = scenario_from_json(json::parse(read_text_file(cost_scenario_path)));
    }
    auto rows = all_node_costs(loaded.profile, loaded.policy, scenario, loaded.params);
    SocialCostReport social = social_cost(loaded.profile, loaded.policy, scenario, loaded.params);
    const std::string csv = cost_breakdown_csv(rows, cost_precision);
    if (!cost_csv_out.empty()) write_text_file(cost_csv_out, csv);
    if (format == "csv") {
      std::cout << csv;
    } else if (format == "json") {
      json out = json::array();
      for (const auto& r : rows) {
        out.push_back({{"node", r.node},
                       {"channel_cost", rat_to_string(r.channel_cost)},
                       {"onchain_cost", rat_to_string(r.onchain_cost)},
                       {"sending_fees", rat_to_string(r.sending_fees)},
                       {"revenue", rat_to_string(r.revenue)},
                       {"total", rat_to_string(r.total)}});
      }
      json j{{"nodes", out},
             {"social_cost", rat_to_string(social.social_cost)},
             {"mu", social.mu},
             {"b", social.b},
             {"optimum", rat_to_string(social.optimum)},
             {"is_social_optimum", social.is_social_optimum}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << csv;
      std::cout << "social cost: " << format_decimal(social.social_cost, cost_precision) << " = ("
                << social.mu << " + " << social.b << ") * F_B"
                << (social.is_social_optimum ? "  [social optimum]" : "") << "\n";
    }
    return kExitOk;
  }

  if (nash_cmd->parsed()) {
    auto loaded = nash_args.load();
    PaymentScenario scenario = PaymentScenario::homogeneous(loaded.params);
    EquilibriumVerdict verdict;
    if (nash_mode == "exhaustive") {
      verdict = check_nash_exhaustive(loaded.profile, loaded.policy, scenario, loaded.params,
                                      exhaustive_options());
    } else if (nash_mode == "restricted") {
      if (!loaded.family) throw UsageError("restricted mode needs --family");
      verdict =
          check_nash_restricted(loaded.profile, *loaded.family, loaded.policy, scenario,
                                loaded.params);
    } else {
      throw UsageError("mode must be exhaustive or restricted");
    }
    print_verdict(verdict, format);
    return kExitOk;
  }

  if (dyn_cmd->parsed()) {
    auto loaded = dyn_args.load();
    PaymentScenario scenario = PaymentScenario::homogeneous(loaded.params);
    DynamicsTrace trace = best_response_dynamics(loaded.profile, loaded.policy, scenario,
                                                 loaded.params, dyn_rounds, exhaustive_options());
    if (format == "json") {
      json profiles = json::array();
      for (const auto& p : trace.profiles) {
        profiles.push_back(
            profile_to_json(ProfileDocument{loaded.params, p, loaded.policy}));
      }
      json j{{"converged", trace.converged}, {"rounds", trace.rounds}, {"profiles", profiles}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (trace.converged ? "converged" : "did not converge") << " after "
                << trace.rounds << " round(s); " << trace.profiles.size() - 1
                << " profile change(s)\n";
      SocialCostReport social =
          social_cost(trace.profiles.back(), loaded.policy, scenario, loaded.params);
      std::cout << "final social cost: " << format_decimal(social.social_cost, 7)
                << (social.is_social_optimum ? "  [social optimum]" : "") << "\n";
    }
    return kExitOk;
  }

  if (lemma3_cmd->parsed()) {
    auto loaded = lemma3_args.load();
    FeeAssignment fees = fee_assignment_from_json(json::parse(read_text_file(lemma3_fees_path)));
    auto [holds, cert] = lemma3_predicate(loaded.profile, fees,
                                          PaymentScenario::homogeneous(loaded.params),
                                          loaded.params.k);
    if (format == "json") {
      json j{{"holds", holds}};
      if (cert.violation) {
        j["violation"] = {{"pair", {cert.violation->pair.first, cert.violation->pair.second}},
                          {"reason", cert.violation->reason}};
      }
      j["pairs_certified"] = cert.pair_witnesses.size();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "two disjoint free routes for every indirect pair: " << (holds ? "yes" : "no")
                << "\n";
      if (cert.violation) {
        std::cout << "violating pair: (" << cert.violation->pair.first << ","
                  << cert.violation->pair.second << "): " << cert.violation->reason << "\n";
      } else {
        std::cout << "certified pairs: " << cert.pair_witnesses.size() << "\n";
      }
    }
    return kExitOk;
  }

  if (fee_bip_cmd->parsed()) {
    GameParams params{fee_bip_nodes, parse_rat(fee_bip_fb), fee_bip_k};
    FeeAssignment fees;
    if (fee_bip_fees_path.empty()) {
      fees.fee_of.assign(static_cast<size_t>(fee_bip_nodes), Rat(0));
    } else {
      fees = fee_assignment_from_json(json::parse(read_text_file(fee_bip_fees_path)));
    }
    BipartiteFreeFeeVerdict v = bipartite_free_fee_verdict(params, fee_bip_centers, fees);
    if (format == "json") {
      json j{{"status", ne_status_to_string(v.status)},
             {"free_routes_hold", v.lemma3_holds},
             {"explanation", v.explanation}};
      if (v.conflicting_lower_bound) {
        j["conflicting_lower_bound"] = rat_to_string(*v.conflicting_lower_bound);
      }
      if (v.violation) {
        j["violation"] = {{"pair", {v.violation->pair.first, v.violation->pair.second}},
                          {"reason", v.violation->reason}};
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "status: " << ne_status_to_string(v.status) << "\n" << v.explanation << "\n";
    }
    return kExitOk;
  }

  if (fee_star_cmd->parsed()) {
    GameParams params{fee_star_nodes, parse_rat(fee_star_fb), fee_star_k};
    StarFeeResult r = star_fee_equilibrium(params, parse_rat(fee_star_eps), exhaustive_options());
    if (format == "json") {
      json j{{"fee", rat_to_string(r.fee)},
             {"center_revenue", rat_to_string(r.center_revenue)},
             {"at_fee", verdict_to_json(r.at_fee)},
             {"above_upper", verdict_to_json(r.above_upper)}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "fee: " << rat_to_string(r.fee) << " (" << format_decimal(r.fee, 7) << ")\n";
      std::cout << "star at this fee:      " << ne_status_to_string(r.at_fee.status) << "\n";
      std::cout << "star above the bound:  " << ne_status_to_string(r.above_upper.status) << "\n";
      std::cout << "center revenue: " << rat_to_string(r.center_revenue) << "\n";
    }
    return kExitOk;
  }

  if (scan_cmd->parsed()) {
    GameParams params{scan_nodes, parse_rat(scan_fb), scan_k};
    LemmaScanReport report = lemma_properties_scan(params, parse_rat(scan_fee), !scan_no_multiset);
    if (format == "json") {
      json j{{"profiles", report.profiles_scanned},
             {"strict", report.strict_count},
             {"weak", report.weak_count},
             {"not_ne", report.not_ne_count},
             {"strict_with_duplicate", report.strict_with_duplicate},
             {"strict_with_onchain", report.strict_with_onchain},
             {"no_strict_ne_has_duplicate", report.no_strict_ne_has_duplicate},
             {"no_strict_ne_has_onchain", report.no_strict_ne_has_onchain}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "profiles scanned: " << report.profiles_scanned << "\n";
      std::cout << "strict: " << report.strict_count << "  weak: " << report.weak_count
                << "  not-NE: " << report.not_ne_count << "\n";
      std::cout << "strict equilibria with duplicate channels: " << report.strict_with_duplicate
                << "\n";
      std::cout << "strict equilibria with on-chain payments:  " << report.strict_with_onchain
                << "\n";
    }
    return kExitOk;
  }

  throw UsageError("no subcommand executed");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
