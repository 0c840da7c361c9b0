#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <variant>

#include "inertia/game.hpp"
#include "inertia/interventions.hpp"
#include "inertia/io.hpp"
#include "inertia/random.hpp"

#include "common.hpp"

using namespace inertia;
using testgames::rejection;

namespace {

const char* coordination_text = R"({
  "players": ["P1", "P2"],
  "actions": [["O", "N"], ["O", "N"]],
  "payoffs": [
    {"profile": ["O", "O"], "u": [3, 3]},
    {"profile": ["O", "N"], "u": ["0", "1"]},
    {"profile": ["N", "O"], "u": [1, 0]},
    {"profile": ["N", "N"], "u": ["5", "5"]}
  ],
  "status_quo": ["O", "O"]
})";

}  // namespace

TEST_CASE("a game document parses to the same game as direct construction") {
  const GameDocument doc = parse_game_document(coordination_text);
  CHECK(doc.game == testgames::coordination());
  REQUIRE(doc.status_quo.has_value());
  CHECK(*doc.status_quo == testgames::profile({"O", "O"}));
}

TEST_CASE("player names default when the players field is omitted") {
  const GameDocument doc = parse_game_document(R"({
    "actions": [["a"], ["b"], ["c"]],
    "payoffs": [{"profile": ["a", "b", "c"], "u": [1, 2, 3]}]
  })");
  CHECK(doc.game.player_names() == std::vector<std::string>{"P1", "P2", "P3"});
  CHECK_FALSE(doc.status_quo.has_value());
}

TEST_CASE("serialize then parse is the identity on game documents") {
  const GameDocument doc{testgames::coordination(), testgames::profile({"O", "O"})};
  const std::string text = serialize_game_document(doc);
  CHECK(parse_game_document(text) == doc);
  // canonical text is a fixed point
  CHECK(serialize_game_document(parse_game_document(text)) == text);
}

TEST_CASE("serialization canonicalizes rationals") {
  const GameDocument doc = parse_game_document(R"({
    "actions": [["a"], ["b"]],
    "payoffs": [{"profile": ["a", "b"], "u": ["-6/4", "14/7"]}]
  })");
  CHECK(doc.game.payoff(testgames::profile({"a", "b"})) ==
        std::vector<Rational>{Rational(-3, 2), Rational(2)});
  const std::string text = serialize_game_document(doc);
  CHECK(text.find("\"-3/2\"") != std::string::npos);
  CHECK(text.find("\"2\"") != std::string::npos);
  CHECK(text.find("-6/4") == std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("random games survive the document round trip") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomGameConfig config;
    config.seed = seed;
    config.players = 1 + static_cast<int>(seed % 3);
    config.actions = 1 + static_cast<int>((seed / 3) % 3);
    const Game g = random_game(config);
    const GameDocument doc{g, g.label_profile(g.index_profile(0))};
    const std::string text = serialize_game_document(doc);
    REQUIRE(parse_game_document(text) == doc);
  }
}

TEST_CASE("document rejections carry the failing field's name") {
  CHECK(rejection([] { parse_game_document("[1, 2]"); }) == "SchemaError");
  CHECK(rejection([] { parse_game_document(R"({"payoffs": []})"); }) == "SchemaError");
  CHECK(rejection([] {
          parse_game_document(R"({"actions": [["a"]], "payoffs": [], "extra": 1})");
        }) == "SchemaError");
  try {
    parse_game_document(R"({"actions": [["a"]], "payoffs": [], "extra": 1})");
    FAIL("unknown field accepted");
  } catch (const game_error& e) {
    CHECK(std::string(e.what()).find("\"extra\"") != std::string::npos);
  }
  try {
    parse_game_document(R"({"actions": [["a"]]})");
    FAIL("missing payoffs accepted");
  } catch (const game_error& e) {
    CHECK(std::string(e.what()).find("\"payoffs\"") != std::string::npos);
  }
}

TEST_CASE("zero denominators and floats are schema errors") {
  CHECK(rejection([] {
          parse_game_document(R"({
            "actions": [["a"], ["b"]],
            "payoffs": [{"profile": ["a", "b"], "u": ["3/0", "1"]}]
          })");
        }) == "SchemaError");
  try {
    parse_rational("3/0");
    FAIL("zero denominator accepted");
  } catch (const game_error& e) {
    CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
  }
  CHECK(rejection([] {
          parse_game_document(R"({
            "actions": [["a"], ["b"]],
            "payoffs": [{"profile": ["a", "b"], "u": [1.5, 1]}]
          })");
        }) == "SchemaError");
}

TEST_CASE("syntax errors report line and column") {
  try {
    parse_game_document("{\n  \"players\": [\"P1\"],\n  oops\n}");
    FAIL("malformed JSON accepted");
  } catch (const game_error& e) {
    CHECK(e.code() == errc::syntax_error);
    CHECK(std::string(e.what()).find("malformed JSON at line 3") != std::string::npos);
  }
  try {
    parse_game_document("not json");
    FAIL("malformed JSON accepted");
  } catch (const game_error& e) {
    CHECK(std::string(e.what()).find("at line 1") != std::string::npos);
  }
}

TEST_CASE("an infeasible status quo is rejected at parse time") {
  CHECK(rejection([] {
          parse_game_document(R"({
            "actions": [["a1", "a2"], ["b1"]],
            "payoffs": [
              {"profile": ["a1", "b1"], "u": [1, 1]},
              {"profile": ["a2", "b1"], "u": [2, 2]}
            ],
            "status_quo": ["a1", "zzz"]
          })");
        }) == "InfeasibleProfile");
}

TEST_CASE("game-shape violations surface through document parsing") {
  // wrong payoff arity
  CHECK(rejection([] {
          parse_game_document(R"({
            "actions": [["a"], ["b"]],
            "payoffs": [{"profile": ["a", "b"], "u": [1]}]
          })");
        }) == "DimensionMismatch");
  // profile mentioning an unknown action
  CHECK(rejection([] {
          parse_game_document(R"({
            "actions": [["a"], ["b"]],
            "payoffs": [{"profile": ["a", "zzz"], "u": [1, 1]}]
          })");
        }) == "InfeasibleProfile");
}

TEST_CASE("intervention documents round-trip in every kind") {
  PriceOnly price;
  price.schedule.transfers[testgames::profile({"N", "O"})] = {Rational(1), Rational(0)};
  price.schedule.transfers[testgames::profile({"O", "N"})] = {Rational(0), Rational(1, 2)};
  Addition add{"P1", "X", {}};
  add.slice.by_others[{"O"}] = {Rational(0), Rational(0)};
  add.slice.by_others[{"N"}] = {Rational(6), Rational(6)};
  Replacement rep{"P2", "O", "Y", {}};
  rep.slice.by_others[{"O"}] = {Rational(4), Rational(4)};
  rep.slice.by_others[{"N"}] = {Rational(0), Rational(1)};
  const Intervention cases[] = {price, Deletion{"P1", "O"}, add, rep};
  for (const Intervention& iv : cases) {
    const std::string text = serialize_intervention_document(iv);
    const Intervention back = parse_intervention_document(text);
    REQUIRE(back.index() == iv.index());
    CHECK(serialize_intervention_document(back) == text);
    // applying both to the same game must agree wherever application is legal
    const Game g = testgames::coordination();
    CHECK(apply_intervention(g, iv) == apply_intervention(g, back));
  }
}

TEST_CASE("intervention document rejections") {
  CHECK(rejection([] { parse_intervention_document(R"({"kind": "warp"})"); }) ==
        "SchemaError");
  CHECK(rejection([] { parse_intervention_document(R"({"player": "P1"})"); }) ==
        "SchemaError");
  // duplicate transfer profiles
  CHECK(rejection([] {
          parse_intervention_document(R"({
            "kind": "price",
            "transfers": [
              {"profile": ["O", "O"], "t": [1, 1]},
              {"profile": ["O", "O"], "t": [2, 2]}
            ]
          })");
        }) == "SchemaError");
  // duplicate slice keys
  CHECK(rejection([] {
          parse_intervention_document(R"({
            "kind": "add", "player": "P1", "action": "X",
            "slice": [
              {"others": ["O"], "u": [1, 1]},
              {"others": ["O"], "u": [2, 2]}
            ]
          })");
        }) == "SchemaError");
  // unknown field inside a shape
  CHECK(rejection([] {
          parse_intervention_document(R"({"kind": "delete", "player": "P1",
                                          "action": "O", "bonus": 1})");
        }) == "SchemaError");
  // replace demands old and new names
  CHECK(rejection([] {
          parse_intervention_document(R"({"kind": "replace", "player": "P1",
                                          "new_action": "X", "slice": []})");
        }) == "SchemaError");
}
