#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "inertia/interventions.hpp"
#include "inertia/report.hpp"

#include "common.hpp"

using namespace inertia;
using testgames::profile;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("the comparison header names its columns exactly") {
  const Game g = testgames::coordination();
  const ComparisonTable table =
      compare(g, profile({"O", "O"}), {Deletion{"P1", "O"}}, default_policy());

  const std::string csv = render_comparison(table, ReportFormat::csv);
  REQUIRE(csv.rfind("class,change,q⁻ survives,selected outcome,payoffs at outcome\n", 0) == 0);

  const std::string text = render_comparison(table, ReportFormat::text);
  const std::string head = text.substr(0, text.find('\n'));
  CHECK(contains(head, "class"));
  CHECK(contains(head, "change"));
  CHECK(contains(head, "q⁻ survives"));
  CHECK(contains(head, "selected outcome"));
  CHECK(contains(head, "payoffs at outcome"));
}

TEST_CASE("comparison rows carry baseline first and intervened payoffs") {
  const Game g = testgames::coordination();
  const ComparisonTable table =
      compare(g, profile({"O", "O"}), {Deletion{"P1", "O"}}, default_policy());
  const std::string csv = render_comparison(table, ReportFormat::csv);
  std::vector<std::string> lines;
  for (std::size_t from = 0; from < csv.size();) {
    const std::size_t to = csv.find('\n', from);
    lines.push_back(csv.substr(from, to - from));
    from = to + 1;
  }
  REQUIRE(lines.size() == 3);
  CHECK(lines[1] == R"csv(baseline,no intervention,true,"(O, O)","(3, 3)")csv");
  CHECK(lines[2] == R"csv(deletion,remove O for P1,false,"(N, N)","(5, 5)")csv");
}

TEST_CASE("ambiguous comparison rows list the candidate payoff range") {
  // two incomparable equilibria, no status quo survival
  GameSpec spec;
  spec.actions = {{"l", "r"}, {"l", "r"}};
  spec.payoffs = {
      {{"l", "l"}, {2, 1}},
      {{"l", "r"}, {0, 0}},
      {{"r", "l"}, {0, 0}},
      {{"r", "r"}, {1, 2}},
  };
  const Game g(spec);
  PriceOnly identity;  // empty schedule: the game is unchanged
  const ComparisonTable table =
      compare(g, profile({"l", "r"}), {Intervention{identity}}, default_policy());
  const std::string csv = render_comparison(table, ReportFormat::csv);
  CHECK(contains(csv, "ambiguous {(l, l), (r, r)}"));
  CHECK(contains(csv, "{(2, 1), (1, 2)}"));
  // identity intervention row matches the baseline row except for its label
  const std::size_t first = csv.find("\nbaseline,");
  const std::size_t second = csv.find("\nprice,");
  REQUIRE(first != std::string::npos);
  REQUIRE(second != std::string::npos);
  const std::string baseline = csv.substr(first + 10, csv.find('\n', first + 1) - first - 10);
  const std::string priced = csv.substr(second + 7, csv.find('\n', second + 1) - second - 7);
  CHECK(baseline.substr(baseline.find(',')) == priced.substr(priced.find(',')));
}

TEST_CASE("an empty intervention list yields a baseline-only table") {
  const Game g = testgames::coordination();
  const ComparisonTable table = compare(g, profile({"O", "O"}), {}, default_policy());
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].klass == "baseline");
  CHECK(table.rows[0].survives);
}

TEST_CASE("csv quoting doubles embedded quotes and wraps commas") {
  CHECK(detail::csv_line({"a", "b,c", "d\"e"}) == "a,\"b,c\",\"d\"\"e\"\n");
  CHECK(detail::csv_line({"plain"}) == "plain\n");
}

TEST_CASE("the selection trace walks the decision") {
  const Game g = testgames::coordination();
  SECTION("inertia branch") {
    const std::string trace = render_selection(g, profile({"O", "O"}), default_policy());
    CHECK(contains(trace, "status quo: (O, O)"));
    CHECK(contains(trace, "feasible? yes"));
    CHECK(contains(trace, "still a Nash equilibrium? yes"));
    CHECK(contains(trace, "-> inertia preserves the status quo"));
    CHECK(contains(trace, "selected: (O, O)  [Inertia]  payoffs (3, 3)"));
  }
  SECTION("refinement branch after a deletion") {
    const Game cut = apply_intervention(g, Deletion{"P1", "O"});
    const std::string trace = render_selection(cut, profile({"O", "O"}), default_policy());
    CHECK(contains(trace, "feasible? no"));
    CHECK(contains(trace, "-> transition is possible"));
    CHECK(contains(trace, "refinement chain:"));
    CHECK(contains(trace, "unique-efficient: 1 -> 1 candidate(s)"));
    CHECK(contains(trace, "selected: (N, N)  [UniqueEfficient]  payoffs (5, 5)"));
  }
  SECTION("empty policy reports ambiguity") {
    const Game cut = apply_intervention(g, Deletion{"P1", "O"});
    const std::string trace = render_selection(cut, profile({"O", "O"}), FallbackPolicy{});
    CHECK(contains(trace, "refinement chain: (empty)"));
    CHECK(contains(trace, "ambiguous: 1 candidates remain: (N, N)"));
  }
  SECTION("no equilibrium at all") {
    const std::string trace =
        render_selection(testgames::matching_pennies(), profile({"H", "T"}), default_policy());
    CHECK(contains(trace, "still a Nash equilibrium? no"));
    CHECK(contains(trace, "no equilibrium: nothing to select"));
  }
  SECTION("mixed-only ambiguity when requested") {
    SelectOptions options;
    options.include_mixed = true;
    const std::string trace = render_selection(testgames::matching_pennies(),
                                               profile({"H", "T"}), default_policy(), options);
    CHECK(contains(trace, "strictly mixed equilibria (1):"));
    CHECK(contains(trace, "ambiguous: no pure equilibrium; only mixed equilibria remain"));
  }
}

TEST_CASE("analysis rendering covers pure, mixed, and efficiency") {
  const Game g = testgames::coordination();
  const Analysis a = analyze_game(g, true);
  const std::string text = render_analysis(g, a, ReportFormat::text);
  CHECK(contains(text, "pure equilibria (2):"));
  CHECK(contains(text, "  (O, O)  payoffs (3, 3)"));
  CHECK(contains(text, "  (N, N)  payoffs (5, 5)"));
  CHECK(contains(text, "mixed equilibria (1):"));
  CHECK(contains(text, "P1: {O: 5/7, N: 2/7}; P2: {O: 5/7, N: 2/7}"));
  CHECK(contains(text, "payoffs (15/7, 15/7)"));
  CHECK(contains(text, "unique efficient equilibrium: (N, N)"));

  const std::string csv = render_analysis(g, a, ReportFormat::csv);
  CHECK(csv.rfind("kind,profile,payoffs\n", 0) == 0);
  CHECK(contains(csv, R"csv(pure,"(O, O)","(3, 3)")csv"));
  CHECK(contains(csv, "mixed,"));
  CHECK(contains(csv, R"csv(efficient,"(N, N)","(5, 5)")csv"));
}

TEST_CASE("analysis rendering marks degenerate components") {
  const Game g = testgames::flatland();
  const Analysis a = analyze_game(g, true);
  const std::string text = render_analysis(g, a, ReportFormat::text);
  CHECK(contains(text, "degenerate component:"));
  CHECK(contains(text, "no unique efficient equilibrium"));
}

TEST_CASE("mixed analysis of a three-player game is refused") {
  GameSpec spec;
  spec.actions = {{"a"}, {"b"}, {"c"}};
  spec.payoffs = {{{"a", "b", "c"}, {0, 0, 0}}};
  const Game g(spec);
  CHECK(testgames::rejection([&] { analyze_game(g, true); }) == "NotTwoPlayers");
  CHECK(analyze_game(g, false).pure.size() == 1);
}

TEST_CASE("format names parse or fail loudly") {
  CHECK(parse_format("text") == ReportFormat::text);
  CHECK(parse_format("csv") == ReportFormat::csv);
  CHECK(testgames::rejection([] { parse_format("yaml"); }) == "SchemaError");
}

TEST_CASE("subsidy rendering states the threshold in both directions") {
  const Game g = testgames::coordination();
  const SubsidyQuery query{profile({"O", "O"}), {"N", "N"}};
  const std::string text = render_subsidy(g, query);
  CHECK(contains(text, "deviation margins: P1: 2, P2: 2"));
  CHECK(contains(text, "subsidy threshold: 2"));
  CHECK(contains(text, "standing for s <= 2 and breaks it for s > 2"));
}

TEST_CASE("deletion rendering lists sets or the diagnostic") {
  const Game g = testgames::coordination();
  const DeletionSynthesis found = minimal_deletion_sets(g, profile({"O", "O"}), false);
  const std::string text = render_deletions(found);
  CHECK(contains(text, "minimal deletion sets (2):"));
  CHECK(contains(text, "{P1: O}"));
  CHECK(contains(text, "{P2: O}"));

  GameSpec spec;
  spec.actions = {{"only"}, {"lone"}};
  spec.payoffs = {{{"only", "lone"}, {1, 1}}};
  const DeletionSynthesis none =
      minimal_deletion_sets(Game(spec), profile({"only", "lone"}), false);
  CHECK(contains(render_deletions(none), "no feasible deletion set"));
}

TEST_CASE("the game summary prints every payoff cell") {
  const std::string text = render_game_summary(testgames::coordination());
  CHECK(contains(text, "players: P1, P2"));
  CHECK(contains(text, "  P1: O, N"));
  CHECK(contains(text, "  (O, O)  (3, 3)"));
  CHECK(contains(text, "  (N, N)  (5, 5)"));
}
