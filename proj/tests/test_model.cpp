#include <doctest.h>

#include "channelgame/model.hpp"

using namespace channelgame;

TEST_CASE("homogeneous scenario counts") {
  GameParams p4{4, Rat(1), 1};
  PaymentScenario s4 = homogeneous_scenario(p4);
  CHECK(s4.total() == 12);
  int pairs = 0;
  s4.for_each([&](NodeId, NodeId, long count) {
    CHECK(count == 1);
    ++pairs;
  });
  CHECK(pairs == 12);

  GameParams p10{10, Rat(1), 3};
  CHECK(homogeneous_scenario(p10).total() == 270);

  GameParams p2{2, Rat(1), 5};
  PaymentScenario s2 = homogeneous_scenario(p2);
  CHECK(s2.count(0, 1) == 5);
  CHECK(s2.count(1, 0) == 5);
  CHECK(s2.total() == 10);
}

TEST_CASE("homogeneous scenario is symmetric") {
  GameParams p{7, Rat(1), 2};
  PaymentScenario s = homogeneous_scenario(p);
  for (NodeId u = 0; u < 7; ++u) {
    for (NodeId v = 0; v < 7; ++v) {
      if (u != v) CHECK(s.count(u, v) == s.count(v, u));
    }
  }
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS((GameParams{1, Rat(1), 1}).check(), std::invalid_argument);
  CHECK_THROWS_AS((GameParams{4, Rat(0), 1}).check(), std::invalid_argument);
  CHECK_THROWS_AS((GameParams{4, Rat(1), 0}).check(), std::invalid_argument);
  CHECK_NOTHROW((GameParams{2, Rat(1, 2), 1}).check());
  CHECK_THROWS_AS((GameParams{3, Rat(1), 1}).check_for_bounds(), std::invalid_argument);
}

TEST_CASE("validate_profile diagnostics") {
  GameParams params{4, Rat(1), 1};

  SUBCASE("self-loop") {
    StrategyProfile p(4);
    p.open_channel(2, 2);
    auto violations = validate_profile(p, params);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].node == 2);
    CHECK(violations[0].rule == "self-loop");
    CHECK_FALSE(violations[0].informational);
  }

  SUBCASE("empty profile is a valid state") {
    StrategyProfile p(4);
    CHECK(validate_profile(p, params).empty());
  }

  SUBCASE("duplicate channel is informational") {
    StrategyProfile p(4);
    p.open_channel(0, 1);
    p.open_channel(0, 1);
    auto violations = validate_profile(p, params);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "duplicate channel");
    CHECK(violations[0].informational);
  }

  SUBCASE("cross-opened pair counts as duplicate") {
    StrategyProfile p(4);
    p.open_channel(0, 1);
    p.open_channel(1, 0);
    CHECK(p.has_duplicate_channels());
  }
}

TEST_CASE("mu decomposes over nodes") {
  StrategyProfile p(5);
  p.set_strategy(0, {1, 2, 3});
  p.set_strategy(3, {4});
  p.open_channel(4, 0);
  size_t sum = 0;
  for (NodeId u = 0; u < 5; ++u) sum += p.mu_of(u);
  CHECK(sum == p.mu_total());
  CHECK(p.mu_total() == 5);
}

TEST_CASE("undirected adjacency merges both directions and duplicates") {
  StrategyProfile p(3);
  p.open_channel(0, 1);
  p.open_channel(1, 0);
  p.open_channel(1, 2);
  auto adj = p.undirected_adjacency();
  CHECK(adj[0] == std::vector<NodeId>{1});
  CHECK(adj[1] == std::vector<NodeId>{0, 2});
  CHECK(adj[2] == std::vector<NodeId>{1});
}

TEST_CASE("fee policy validation") {
  CHECK_THROWS_AS(FeePolicy::uniform(Rat(-1)), std::invalid_argument);
  CHECK_THROWS_AS(FeePolicy::per_node({Rat(1), Rat(-1)}), std::invalid_argument);
  FeePolicy p = FeePolicy::per_node({Rat(1), Rat(2)});
  CHECK_THROWS_AS(p.check(3), std::invalid_argument);
  CHECK(p.fee_of(1) == Rat(2));
}

TEST_CASE("scenario with explicit demands") {
  auto s = PaymentScenario::from_demands(3, {{{0, 1}, 4}, {{2, 0}, 1}});
  CHECK(s.count(0, 1) == 4);
  CHECK(s.count(1, 0) == 0);
  CHECK(s.total() == 5);
  CHECK_THROWS_AS(PaymentScenario::from_demands(3, {{{1, 1}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PaymentScenario::from_demands(3, {{{0, 5}, 1}}), std::invalid_argument);
}

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_from_string("3/10") == Rat(3, 10));
  CHECK(rat_from_string("0.25") == Rat(1, 4));
  CHECK(rat_from_string("-1.5") == Rat(-3, 2));
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("4/6") == Rat(2, 3));
  CHECK(rat_to_string(Rat(2, 3)) == "2/3");
  CHECK(rat_to_string(Rat(5)) == "5/1");
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);

  CHECK(format_decimal(Rat(1, 3), 4) == "0.3333");
  CHECK(format_decimal(Rat(3, 999), 5) == "0.0030030");
  CHECK(format_decimal(Rat(1997, 2), 6) == "998.500");
  CHECK(format_decimal(Rat(0), 3) == "0.000");

  // round-half-even at an exact tie: 0.125 -> 0.12, 0.135 -> 0.14
  CHECK(format_decimal(Rat(1, 8), 2) == "0.12");
  CHECK(format_decimal(Rat(27, 200), 2) == "0.14");
  CHECK(format_decimal(Rat(1, 8), 2, Rounding::HalfUp) == "0.13");
  CHECK(format_decimal(Rat(89, 90), 3, Rounding::Down) == "0.988");
  CHECK(format_decimal(Rat(89, 90), 3, Rounding::Up) == "0.989");

  auto d = significant_digits(Rat(1994, 997000), 7);
  CHECK(d.digits == "2000000");
  CHECK(d.exp10 == -2);

  // carry across the leading digit: 0.999 at 2 digits rounds to 1.0
  auto carry = significant_digits(Rat(999, 1000), 2);
  CHECK(carry.digits == "10");
  CHECK(carry.exp10 == 1);

  CHECK(format_fixed(Rat(1, 3), 4) == "0.3333");
  CHECK(format_fixed(Rat(5, 2), 0) == "2");   // half-even
  CHECK(format_fixed(Rat(7, 2), 0) == "4");
}
