// Command-line surface over the library: analyze, select, intervene,
// synthesize, compare, reproduce-paper, fuzz, presets.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inertia/inertia.hpp"

namespace {

using namespace inertia;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot read \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Game and intervention arguments are file paths, or preset:<name> for the
// built-in library.
GameDocument load_game(const std::string& arg) {
  if (arg.rfind("preset:", 0) == 0) return find_game_preset(arg.substr(7)).document;
  return parse_game_document(read_file(arg));
}

Intervention load_intervention(const std::string& arg) {
  if (arg.rfind("preset:", 0) == 0)
    return find_intervention_preset(arg.substr(7)).intervention;
  return parse_intervention_document(read_file(arg));
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

PureProfile resolve_status_quo(const std::optional<std::string>& flag,
                               const GameDocument& doc) {
  if (flag) return PureProfile{split_csv(*flag)};
  if (doc.status_quo) return *doc.status_quo;
  fail(errc::schema_error,
       "no status quo: pass --status-quo or set status_quo in the game document");
}

std::string section(const std::string& title) {
  return title + "\n" + std::string(title.size(), '-') + "\n";
}

// The end-to-end worked example: the two-standard coordination game, its
// equilibria, and the three canonical interventions (a sub-threshold subsidy,
// an attractive addition, a replacement) pushed through prediction.
std::string reproduce_paper_report(ReportFormat format, bool include_mixed) {
  const GamePreset preset = find_game_preset("coordination");
  const Game& g = preset.document.game;
  const PureProfile q = *preset.document.status_quo;
  const FallbackPolicy policy = default_policy();
  const std::vector<std::string> names = {"subsidy-1", "add-attractive", "replace-old"};

  std::ostringstream out;
  out << "coordination game under status-quo inertia\n";
  out << "===========================================\n\n";
  out << section("game") << render_game_summary(g) << "\n";
  out << section("equilibria")
      << render_analysis(g, analyze_game(g, include_mixed), ReportFormat::text) << "\n";
  out << section("baseline selection") << render_selection(g, q, policy) << "\n";

  std::vector<Intervention> interventions;
  for (const auto& name : names)
    interventions.push_back(find_intervention_preset(name).intervention);
  out << section("interventions under status-quo inertia")
      << render_comparison(compare(g, q, interventions, policy), format) << "\n";

  out << section("decision traces");
  for (std::size_t i = 0; i < interventions.size(); ++i) {
    out << "[" << intervention_class(interventions[i]) << "] "
        << describe_intervention(interventions[i]) << "\n";
    out << render_selection(apply_intervention(g, interventions[i]), q, policy);
    if (i + 1 < interventions.size()) out << "\n";
  }
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"equilibrium analysis and intervention design under status-quo inertia"};
  app.require_subcommand(1);

  std::string game_arg, intervention_arg, policy_arg = "unique-efficient";
  std::string format_arg = "text", then_arg, status_quo_arg, targets_arg, show_arg;
  std::vector<std::string> intervention_args;
  bool include_mixed = false, deletions = false, require_unique_efficient = false;
  int max_deletions = 3;
  FuzzConfig fuzz_config;

  const auto status_quo_of = [&](const CLI::Option* opt, const GameDocument& doc) {
    return resolve_status_quo(
        opt->count() ? std::optional<std::string>(status_quo_arg) : std::nullopt, doc);
  };

  auto* analyze = app.add_subcommand("analyze", "equilibria and efficiency report");
  analyze->add_option("game", game_arg, "game document path or preset:<name>")->required();
  analyze->add_flag("--include-mixed", include_mixed, "enumerate mixed equilibria (2-player)");
  analyze->add_option("--format", format_arg, "text or csv");
  analyze->callback([&] {
    const GameDocument doc = load_game(game_arg);
    std::cout << render_analysis(doc.game, analyze_game(doc.game, include_mixed),
                                 parse_format(format_arg));
  });

  auto* select_cmd = app.add_subcommand("select", "pick the outcome under inertia");
  select_cmd->add_option("game", game_arg, "game document path or preset:<name>")->required();
  auto* select_sq = select_cmd->add_option("--status-quo", status_quo_arg,
                                           "status-quo profile as comma-separated actions");
  select_cmd->add_option("--policy", policy_arg, "comma-separated refinement chain");
  select_cmd->add_flag("--include-mixed", include_mixed,
                       "list mixed equilibria in ambiguous outcomes (2-player)");
  select_cmd->callback([&] {
    const GameDocument doc = load_game(game_arg);
    std::cout << render_selection(doc.game, status_quo_of(select_sq, doc),
                                  parse_policy(policy_arg), {include_mixed});
  });

  auto* intervene = app.add_subcommand("intervene", "apply an intervention to a game");
  intervene->add_option("game", game_arg, "game document path or preset:<name>")->required();
  intervene->add_option("intervention", intervention_arg,
                        "intervention document path or preset:<name>")
      ->required();
  intervene->add_option("--then", then_arg, "follow-up: select");
  auto* intervene_sq = intervene->add_option("--status-quo", status_quo_arg,
                                             "status-quo profile for --then select");
  intervene->add_option("--policy", policy_arg, "comma-separated refinement chain");
  intervene->add_flag("--include-mixed", include_mixed,
                      "list mixed equilibria in ambiguous outcomes (2-player)");
  intervene->callback([&] {
    const GameDocument doc = load_game(game_arg);
    const Intervention iv = load_intervention(intervention_arg);
    const Game intervened = apply_intervention(doc.game, iv);
    std::cout << serialize_game_document({intervened, doc.status_quo});
    if (!then_arg.empty()) {
      if (then_arg != "select")
        fail(errc::schema_error, "only --then select is supported, not \"" + then_arg + "\"");
      std::cout << "\n"
                << render_selection(intervened, status_quo_of(intervene_sq, doc),
                                    parse_policy(policy_arg), {include_mixed});
    }
  });

  auto* synthesize = app.add_subcommand("synthesize", "find interventions with a given effect");
  synthesize->add_option("game", game_arg, "game document path or preset:<name>")->required();
  auto* synthesize_sq = synthesize->add_option("--status-quo", status_quo_arg,
                                               "status-quo profile as comma-separated actions");
  auto* targets_opt = synthesize->add_option(
      "--subsidy-targets", targets_arg, "per-player target actions for a uniform subsidy");
  synthesize->add_flag("--deletions", deletions,
                       "enumerate minimal deletion sets that break the status quo");
  synthesize->add_flag("--require-unique-efficient", require_unique_efficient,
                       "keep only deletion sets whose residual game has a unique efficient "
                       "equilibrium");
  synthesize->add_option("--max-deletions", max_deletions, "deletion set size cap");
  synthesize->callback([&] {
    const GameDocument doc = load_game(game_arg);
    const PureProfile q = status_quo_of(synthesize_sq, doc);
    if (targets_opt->count() && deletions)
      fail(errc::schema_error, "pass either --subsidy-targets or --deletions, not both");
    if (targets_opt->count()) {
      std::cout << render_subsidy(doc.game, SubsidyQuery{q, split_csv(targets_arg)});
    } else if (deletions) {
      std::cout << "status quo: " << to_string(q) << "\n"
                << render_deletions(minimal_deletion_sets(doc.game, q,
                                                          require_unique_efficient,
                                                          max_deletions));
    } else {
      fail(errc::schema_error, "pass --subsidy-targets or --deletions");
    }
  });

  auto* compare_cmd = app.add_subcommand("compare", "classify interventions side by side");
  compare_cmd->add_option("game", game_arg, "game document path or preset:<name>")->required();
  compare_cmd->add_option("interventions", intervention_args,
                          "intervention document paths or preset:<name>")
      ->required()
      ->expected(-1);
  auto* compare_sq = compare_cmd->add_option("--status-quo", status_quo_arg,
                                             "status-quo profile as comma-separated actions");
  compare_cmd->add_option("--policy", policy_arg, "comma-separated refinement chain");
  compare_cmd->add_option("--format", format_arg, "text or csv");
  compare_cmd->add_flag("--include-mixed", include_mixed,
                        "list mixed equilibria in ambiguous outcomes (2-player)");
  compare_cmd->callback([&] {
    const GameDocument doc = load_game(game_arg);
    const PureProfile q = status_quo_of(compare_sq, doc);
    std::vector<Intervention> interventions;
    for (const auto& arg : intervention_args) interventions.push_back(load_intervention(arg));
    std::cout << render_comparison(
        compare(doc.game, q, interventions, parse_policy(policy_arg), {include_mixed}),
        parse_format(format_arg));
  });

  auto* reproduce = app.add_subcommand("reproduce-paper",
                                       "worked coordination example end to end");
  reproduce->add_option("--format", format_arg, "text or csv (for the comparison table)");
  reproduce->add_flag("--include-mixed", include_mixed,
                      "include mixed equilibria in the equilibrium section");
  reproduce->callback([&] {
    std::cout << reproduce_paper_report(parse_format(format_arg), include_mixed);
  });

  auto* fuzz = app.add_subcommand("fuzz", "seeded random property sweep");
  fuzz->add_option("--seed", fuzz_config.seed, "base seed");
  fuzz->add_option("--trials", fuzz_config.trials, "number of trials");
  fuzz->add_option("--max-players", fuzz_config.max_players, "player count cap");
  fuzz->add_option("--max-actions", fuzz_config.max_actions, "actions-per-player cap");
  fuzz->add_option("--payoff-min", fuzz_config.payoff_min, "lowest integer payoff drawn");
  fuzz->add_option("--payoff-max", fuzz_config.payoff_max, "highest integer payoff drawn");
  fuzz->callback([&] {
    const FuzzReport report = run_fuzz(fuzz_config);
    std::cout << render_fuzz(fuzz_config, report);
    if (report.violations > 0)
      throw internal_error("fuzz found " + std::to_string(report.violations) +
                           " invariant violations");
  });

  auto* presets = app.add_subcommand("presets", "list or show built-in games/interventions");
  auto* show_opt = presets->add_option("--show", show_arg, "print one preset as a document");
  presets->callback([&] {
    if (show_opt->count()) {
      for (const auto& p : game_presets())
        if (p.name == show_arg) {
          std::cout << serialize_game_document(p.document);
          return;
        }
      for (const auto& p : intervention_presets())
        if (p.name == show_arg) {
          std::cout << serialize_intervention_document(p.intervention);
          return;
        }
      fail(errc::unknown_preset, "no preset named \"" + show_arg + "\"");
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : game_presets()) rows.push_back({"  " + p.name, "", p.summary});
    std::cout << "game presets:\n" << detail::text_table(rows);
    rows.clear();
    for (const auto& p : intervention_presets())
      rows.push_back({"  " + p.name, "(" + p.game + ")", p.summary});
    std::cout << "intervention presets:\n" << detail::text_table(rows);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : 2;     // bad flags are malformed input
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const inertia::game_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const inertia::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
