#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "common.hpp"
#include "inertia/equilibria.hpp"
#include "inertia/random.hpp"
#include "oracle.hpp"

using namespace inertia;
using testgames::profile;
using testgames::rejection;

TEST_CASE("coordination game has exactly its two pure equilibria") {
  const Game g = testgames::coordination();
  const auto pure = enumerate_pure_nash(g);
  REQUIRE(pure.size() == 2);
  CHECK(pure[0] == profile({"O", "O"}));
  CHECK(pure[1] == profile({"N", "N"}));
  CHECK(is_pure_nash(g, profile({"O", "O"})));
  CHECK_FALSE(is_pure_nash(g, profile({"O", "N"})));
  CHECK(survives_as_equilibrium(g, profile({"N", "N"})));
  CHECK_FALSE(survives_as_equilibrium(g, profile({"N", "X"})));  // infeasible
}

TEST_CASE("best responses include ties") {
  const Game g = testgames::coordination();
  CHECK(best_responses(g, 0, {"O"}) == std::vector<std::string>{"O"});
  CHECK(best_responses(g, 0, {"N"}) == std::vector<std::string>{"N"});
  CHECK(best_responses(g, 1, {"N"}) == std::vector<std::string>{"N"});
  CHECK(rejection([&] { best_responses(g, 0, {"O", "N"}); }) == "InfeasibleProfile");

  const Game flat = testgames::flatland();
  CHECK(best_responses(flat, 0, {"b1"}) == std::vector<std::string>{"a1", "a2"});
}

TEST_CASE("support enumeration finds the 5/7 indifference point") {
  const Game g = testgames::coordination();
  const auto set = enumerate_equilibria_2p(g);
  CHECK(set.pure.size() == 2);
  CHECK(set.degenerate.empty());
  REQUIRE(set.mixed.size() == 1);
  const MixedProfile& m = set.mixed[0];
  CHECK(m.strategies[0].probs == std::vector<Rational>{Rational(5, 7), Rational(2, 7)});
  CHECK(m.strategies[1].probs == std::vector<Rational>{Rational(5, 7), Rational(2, 7)});
  CHECK(is_mixed_nash(g, m));
  CHECK(expected_payoff(g, m, 0) == Rational(15, 7));
  CHECK(oracle::expected_payoff(g, m, 0) == Rational(15, 7));
}

TEST_CASE("matching pennies has only the uniform mixed equilibrium") {
  const Game g = testgames::matching_pennies();
  CHECK(enumerate_pure_nash(g).empty());
  const auto set = enumerate_equilibria_2p(g);
  CHECK(set.pure.empty());
  CHECK(set.degenerate.empty());
  REQUIRE(set.mixed.size() == 1);
  const Rational half(1, 2);
  CHECK(set.mixed[0].strategies[0].probs == std::vector<Rational>{half, half});
  CHECK(set.mixed[0].strategies[1].probs == std::vector<Rational>{half, half});
  CHECK(is_mixed_nash(g, set.mixed[0]));
}

TEST_CASE("a continuum of equilibria is flagged, not enumerated") {
  const Game g = testgames::flatland();
  const auto set = enumerate_equilibria_2p(g);
  CHECK(set.pure.size() == 4);  // every profile is an equilibrium
  REQUIRE_FALSE(set.degenerate.empty());
  bool full_support = false;
  for (const auto& component : set.degenerate)
    if (component.support_row == std::vector<std::string>{"a1", "a2"} &&
        component.support_col == std::vector<std::string>{"b1", "b2"})
      full_support = true;
  CHECK(full_support);
}

TEST_CASE("mixed enumeration requires exactly two players") {
  const Game g(GameSpec{{}, {{"a"}, {"x"}, {"u"}}, {{{"a", "x", "u"}, {0, 0, 0}}}});
  CHECK(rejection([&] { enumerate_equilibria_2p(g); }) == "NotTwoPlayers");

  // verification of a given mixed profile still works for three players
  CHECK(is_mixed_nash(g, degenerate_mixed(g, profile({"a", "x", "u"}))));
}

TEST_CASE("is_mixed_nash rejects profitable deviations") {
  const Game g = testgames::coordination();
  MixedProfile skewed{{MixedStrategy{{Rational(1, 2), Rational(1, 2)}},
                       MixedStrategy{{Rational(1, 2), Rational(1, 2)}}}};
  CHECK_FALSE(is_mixed_nash(g, skewed));  // N pays 3 > 3/2 for O... deviate
  CHECK(is_mixed_nash(g, degenerate_mixed(g, profile({"N", "N"}))));
  CHECK_FALSE(is_mixed_nash(g, degenerate_mixed(g, profile({"O", "N"}))));
}

TEST_CASE("efficiency filters to the Pareto frontier of the equilibrium set") {
  const Game g = testgames::coordination();
  const auto report = efficient_equilibria(g, enumerate_pure_nash(g));
  CHECK(report.candidates.size() == 2);
  REQUIRE(report.efficient.size() == 1);
  CHECK(report.efficient[0] == profile({"N", "N"}));
  REQUIRE(report.unique_efficient.has_value());
  CHECK(*report.unique_efficient == profile({"N", "N"}));

  CHECK(rejection([&] { efficient_equilibria(g, {profile({"O", "N"})}); }) ==
        "CandidateNotEquilibrium");

  // duplicates collapse before filtering
  const auto deduped =
      efficient_equilibria(g, {profile({"N", "N"}), profile({"N", "N"})});
  CHECK(deduped.candidates.size() == 1);
}

TEST_CASE("incomparable payoffs leave several efficient equilibria") {
  GameSpec spec;
  spec.actions = {{"l", "r"}, {"l", "r"}};
  spec.payoffs = {
      {{"l", "l"}, {2, 1}},
      {{"l", "r"}, {0, 0}},
      {{"r", "l"}, {0, 0}},
      {{"r", "r"}, {1, 2}},
  };
  const Game g(spec);
  const auto report = efficient_equilibria(g, enumerate_pure_nash(g));
  CHECK(report.efficient.size() == 2);
  CHECK_FALSE(report.unique_efficient.has_value());
  CHECK_FALSE(pareto_dominates(g, profile({"l", "l"}), profile({"r", "r"})));
  CHECK_FALSE(pareto_dominates(g, profile({"r", "r"}), profile({"l", "l"})));
  CHECK(weakly_dominates(g, profile({"l", "l"}), profile({"l", "r"})));
}

TEST_CASE("pure enumeration agrees with the oracle on random games") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RandomGameConfig config;
    config.seed = seed;
    config.players = 2 + static_cast<int>(seed % 2);
    config.actions = 2 + static_cast<int>(seed % 3);
    const Game g = random_game(config);
    auto ours = enumerate_pure_nash(g);
    auto reference = oracle::pure_nash(g);
    std::sort(ours.begin(), ours.end());
    std::sort(reference.begin(), reference.end());
    REQUIRE(ours == reference);

    const auto efficient = efficient_equilibria(g, ours).efficient;
    auto reference_efficient = oracle::pareto_efficient(g, reference);
    std::sort(reference_efficient.begin(), reference_efficient.end());
    auto sorted_efficient = efficient;
    std::sort(sorted_efficient.begin(), sorted_efficient.end());
    REQUIRE(sorted_efficient == reference_efficient);
  }
}

TEST_CASE("every enumerated mixed profile verifies, pure parts match") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomGameConfig config;
    config.seed = seed * 7919 + 1;
    config.players = 2;
    config.actions = 2 + static_cast<int>(seed % 2);
    const Game g = random_game(config);
    const auto set = enumerate_equilibria_2p(g);
    auto reference = oracle::pure_nash(g);
    std::sort(reference.begin(), reference.end());
    auto pure = set.pure;
    std::sort(pure.begin(), pure.end());
    REQUIRE(pure == reference);
    for (const auto& m : set.mixed) {
      REQUIRE(is_mixed_nash(g, m));
      REQUIRE(strictly_mixed(m));
      for (int player = 0; player < 2; ++player)
        REQUIRE(expected_payoff(g, m, player) == oracle::expected_payoff(g, m, player));
    }
  }
}
