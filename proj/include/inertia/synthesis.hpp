#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inertia/equilibria.hpp"
#include "inertia/error.hpp"
#include "inertia/game.hpp"
#include "inertia/interventions.hpp"
#include "inertia/selection.hpp"

namespace inertia {

// Ask: how much must deviating to targets[i] be sweetened before the status
// quo stops being an equilibrium?
struct SubsidyQuery {
  PureProfile status_quo;
  std::vector<std::string> targets;  // one action label per player
};

inline void validate_subsidy_query(const Game& g, const SubsidyQuery& query) {
  if (!survives_as_equilibrium(g, query.status_quo))
    fail(errc::status_quo_not_equilibrium,
         "status quo " + to_string(query.status_quo) + " is not a Nash equilibrium");
  if (static_cast<int>(query.targets.size()) != g.player_count())
    fail(errc::dimension_mismatch,
         "expected " + std::to_string(g.player_count()) + " target actions, got " +
             std::to_string(query.targets.size()));
  for (int i = 0; i < g.player_count(); ++i) {
    if (!g.action_index(i, query.targets[i]))
      fail(errc::unknown_action,
           "player " + g.player_name(i) + " has no action \"" + query.targets[i] + "\"");
    if (query.targets[i] == query.status_quo.actions[i])
      fail(errc::target_equals_status_quo_action,
           "target for player " + g.player_name(i) + " equals its status quo action \"" +
               query.targets[i] + "\"");
  }
}

// Per player: how much worse the target deviation is than staying put, with
// everyone else at the status quo.
inline std::vector<Rational> deviation_margins(const Game& g, const SubsidyQuery& query) {
  validate_subsidy_query(g, query);
  std::vector<Rational> margins;
  margins.reserve(g.player_count());
  for (int i = 0; i < g.player_count(); ++i) {
    PureProfile deviated = query.status_quo;
    deviated.actions[i] = query.targets[i];
    margins.push_back(g.payoff(query.status_quo, i) - g.payoff(deviated, i));
  }
  return margins;
}

// Uniform subsidy s paid to each player at every profile where it plays its
// target action.
inline PriceOnly subsidy_schedule(const Game& g, const std::vector<std::string>& targets,
                                  const Rational& s) {
  PriceOnly iv;
  for (std::size_t f = 0; f < g.profile_count(); ++f) {
    const PureProfile p = g.label_profile(g.index_profile(f));
    std::vector<Rational> t(g.player_count(), Rational(0));
    bool any = false;
    for (int i = 0; i < g.player_count(); ++i)
      if (p.actions[i] == targets[i]) {
        t[i] = s;
        any = true;
      }
    if (any) iv.schedule.transfers.emplace(p, std::move(t));
  }
  return iv;
}

// Smallest margin: subsidies at or below it leave the status quo standing
// (deviations only tie, never win); anything above breaks it.
inline Rational subsidy_threshold(const Game& g, const SubsidyQuery& query) {
  const auto margins = deviation_margins(g, query);
  const Rational threshold = *std::min_element(margins.begin(), margins.end());
  const Game at = apply_price(g, subsidy_schedule(g, query.targets, threshold));
  check_internal(survives_as_equilibrium(at, query.status_quo),
                 "status quo must survive a subsidy at the threshold");
  const Game above = apply_price(g, subsidy_schedule(g, query.targets, threshold + 1));
  check_internal(!survives_as_equilibrium(above, query.status_quo),
                 "status quo must break above the threshold");
  return threshold;
}

struct DeletionItem {
  std::string player;
  std::string action;

  bool operator==(const DeletionItem&) const = default;
};

struct DeletionSynthesis {
  std::vector<std::vector<DeletionItem>> sets;  // inclusion-minimal, by size then order
  std::string diagnostic;                       // why `sets` is empty, when it is
};

namespace detail {

inline bool contains_subset(const std::vector<std::vector<DeletionItem>>& found,
                            const std::vector<DeletionItem>& candidate) {
  for (const auto& set : found) {
    bool subset = true;
    for (const auto& item : set)
      if (std::find(candidate.begin(), candidate.end(), item) == candidate.end()) {
        subset = false;
        break;
      }
    if (subset) return true;
  }
  return false;
}

inline std::optional<Game> apply_deletions(const Game& g,
                                           const std::vector<DeletionItem>& items) {
  Game current = g;
  for (const auto& item : items) {
    const int p = current.player_index(item.player);
    if (current.action_count(p) == 1) return std::nullopt;  // would empty the action set
    current = apply_deletion(current, Deletion{item.player, item.action});
  }
  return current;
}

}  // namespace detail

// Inclusion-minimal deletion sets that knock the status quo out of the
// equilibrium set, enumerated by size so minimality is a subset check against
// what was already found. The uniqueness requirement filters those minimal
// sets afterwards; it does not re-open larger ones.
inline DeletionSynthesis minimal_deletion_sets(const Game& g, const PureProfile& status_quo,
                                               bool require_unique_efficient,
                                               int max_set_size = 3) {
  if (!survives_as_equilibrium(g, status_quo))
    fail(errc::status_quo_not_equilibrium,
         "status quo " + to_string(status_quo) + " is not a Nash equilibrium");
  std::vector<DeletionItem> items;
  for (int i = 0; i < g.player_count(); ++i)
    for (const auto& a : g.actions(i)) items.push_back({g.player_name(i), a});

  std::vector<std::vector<DeletionItem>> breaking;
  DeletionSynthesis result;
  const int n = static_cast<int>(items.size());
  for (int size = 1; size <= max_set_size && size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<DeletionItem> candidate;
      candidate.reserve(size);
      for (int i : pick) candidate.push_back(items[i]);
      if (!detail::contains_subset(breaking, candidate)) {
        if (const auto residual = detail::apply_deletions(g, candidate)) {
          if (!survives_as_equilibrium(*residual, status_quo)) {
            bool keep = true;
            if (require_unique_efficient) {
              const auto report =
                  efficient_equilibria(*residual, enumerate_pure_nash(*residual));
              keep = report.unique_efficient.has_value();
            }
            breaking.push_back(std::move(candidate));
            if (keep) result.sets.push_back(breaking.back());
          }
        }
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  if (result.sets.empty()) {
    if (!breaking.empty())
      result.diagnostic =
          "deletion sets of size <= " + std::to_string(max_set_size) +
          " can break the status quo, but none leaves a unique efficient equilibrium";
    else
      result.diagnostic = "no feasible deletion set of size <= " +
                          std::to_string(max_set_size) + " breaks the status quo";
  }
  return result;
}

struct PredictionReport {
  Intervention intervention;
  bool survives = false;
  SelectionOutcome selection;
  std::vector<std::string> precondition_notes;
};

// Apply, test survival, select, and explain. Survival must coincide with
// inertia keeping the status quo selected — anything else is a bug.
inline PredictionReport predict(const Game& g, const PureProfile& status_quo,
                                const Intervention& iv, const FallbackPolicy& policy,
                                const SelectOptions& options = {}) {
  const Game intervened = apply_intervention(g, iv);
  PredictionReport report{iv, survives_as_equilibrium(intervened, status_quo),
                          select(intervened, status_quo, policy, options),
                          {}};
  if (report.survives) {
    const auto* sel = std::get_if<Selected>(&report.selection);
    check_internal(sel && sel->profile == status_quo &&
                       sel->reason == SelectionReason::inertia,
                   "a surviving status quo must stay selected by inertia");
    report.precondition_notes.push_back(
        "status quo " + to_string(status_quo) +
        " remains a Nash equilibrium of the intervened game; inertia keeps it selected");
  } else {
    report.precondition_notes.push_back(
        "status quo " + to_string(status_quo) +
        (intervened.feasible(status_quo) ? " is no longer a Nash equilibrium"
                                         : " is no longer feasible") +
        "; transition is possible");
    const auto pure = enumerate_pure_nash(intervened);
    if (pure.empty()) {
      report.precondition_notes.push_back("the intervened game has no pure equilibrium");
    } else {
      const auto eff = efficient_equilibria(intervened, pure);
      if (eff.unique_efficient)
        report.precondition_notes.push_back(
            "the intervened game has a unique efficient equilibrium " +
            to_string(*eff.unique_efficient));
      else
        report.precondition_notes.push_back(
            "the intervened game has " + std::to_string(eff.efficient.size()) +
            " efficient equilibria; uniqueness fails");
    }
  }
  return report;
}

struct ComparisonRow {
  std::string klass;   // "baseline", "price", "deletion", "addition", "replacement"
  std::string change;  // human-readable description of the intervention
  bool survives = false;
  SelectionOutcome selection;
  // payoffs are evaluated in the game the row describes
  std::vector<std::pair<PureProfile, std::vector<Rational>>> outcome_payoffs;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
};

namespace detail {

inline std::vector<std::pair<PureProfile, std::vector<Rational>>> outcome_payoffs(
    const Game& g, const SelectionOutcome& outcome) {
  std::vector<std::pair<PureProfile, std::vector<Rational>>> out;
  if (const auto* sel = std::get_if<Selected>(&outcome)) {
    out.emplace_back(sel->profile, g.payoff(sel->profile));
  } else if (const auto* amb = std::get_if<Ambiguous>(&outcome)) {
    for (const auto& c : amb->candidates) out.emplace_back(c, g.payoff(c));
  }
  return out;
}

}  // namespace detail

// One row per intervention, after a baseline row for the unmodified game.
inline ComparisonTable compare(const Game& g, const PureProfile& status_quo,
                               const std::vector<Intervention>& interventions,
                               const FallbackPolicy& policy,
                               const SelectOptions& options = {}) {
  ComparisonTable table;
  {
    ComparisonRow row;
    row.klass = "baseline";
    row.change = "no intervention";
    row.survives = survives_as_equilibrium(g, status_quo);
    row.selection = select(g, status_quo, policy, options);
    row.outcome_payoffs = detail::outcome_payoffs(g, row.selection);
    table.rows.push_back(std::move(row));
  }
  for (const auto& iv : interventions) {
    const Game intervened = apply_intervention(g, iv);
    PredictionReport report = predict(g, status_quo, iv, policy, options);
    ComparisonRow row;
    row.klass = intervention_class(iv);
    row.change = describe_intervention(iv);
    row.survives = report.survives;
    row.selection = std::move(report.selection);
    row.outcome_payoffs = detail::outcome_payoffs(intervened, row.selection);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace inertia
