#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "inertia/equilibria.hpp"
#include "inertia/game.hpp"
#include "inertia/interventions.hpp"
#include "inertia/random.hpp"
#include "inertia/selection.hpp"
#include "inertia/synthesis.hpp"

namespace inertia {

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  int max_players = 3;
  int max_actions = 3;
  std::int64_t payoff_min = -9;
  std::int64_t payoff_max = 9;
};

struct FuzzReport {
  std::uint64_t trials = 0;
  std::uint64_t games_with_pure_equilibrium = 0;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> samples;  // first few violation descriptions
};

namespace detail {

inline bool same_selection(const SelectionOutcome& a, const SelectionOutcome& b) {
  if (a.index() != b.index()) return false;
  if (const auto* sa = std::get_if<Selected>(&a)) return *sa == std::get<Selected>(b);
  if (const auto* aa = std::get_if<Ambiguous>(&a)) {
    const auto& ab = std::get<Ambiguous>(b);
    return aa->candidates == ab.candidates && aa->stage == ab.stage;
  }
  return true;
}

inline void record(FuzzReport& report, std::uint64_t trial, const std::string& what) {
  ++report.violations;
  if (report.samples.size() < 10)
    report.samples.push_back("trial " + std::to_string(trial) + ": " + what);
}

// The inertia invariant itself: the status quo survives the intervention if
// and only if selection keeps it, with inertia as the reason.
inline void check_inertia(FuzzReport& report, std::uint64_t trial, const Game& intervened,
                          const PureProfile& q, const std::string& what) {
  ++report.checks;
  const bool survives = survives_as_equilibrium(intervened, q);
  const SelectionOutcome outcome = select(intervened, q, default_policy());
  const auto* sel = std::get_if<Selected>(&outcome);
  const bool kept = sel && sel->profile == q && sel->reason == SelectionReason::inertia;
  if (survives != kept)
    record(report, trial,
           what + ": survives=" + (survives ? "true" : "false") + " but selection " +
               (kept ? "kept" : "dropped") + " the status quo");
}

}  // namespace detail

// Seeded property sweep. Each trial draws, in this order: player count, action
// count, a game seed, a status-quo equilibrium index, then per-check randomness.
// Per-trial generator state is SplitMix64(seed + trial), so trials are
// independent and any single trial can be replayed.
inline FuzzReport run_fuzz(const FuzzConfig& config) {
  FuzzReport report;
  report.trials = config.trials;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    SplitMix64 rng(config.seed + trial);
    RandomGameConfig game_config;
    game_config.players = static_cast<int>(rng.in_range(1, config.max_players));
    game_config.actions = static_cast<int>(rng.in_range(1, config.max_actions));
    game_config.seed = rng.next();
    game_config.payoff_min = config.payoff_min;
    game_config.payoff_max = config.payoff_max;
    const Game g = random_game(game_config);
    const auto pure = enumerate_pure_nash(g);
    if (pure.empty()) continue;
    ++report.games_with_pure_equilibrium;
    const PureProfile q = pure[rng.below(pure.size())];
    const int n = g.player_count();

    // (a) random transfer schedule; inertia must track survival exactly
    {
      PriceOnly iv;
      for (std::size_t f = 0; f < g.profile_count(); ++f) {
        if (rng.below(2) == 0) continue;
        std::vector<Rational> t;
        for (int i = 0; i < n; ++i)
          t.emplace_back(rng.in_range(config.payoff_min, config.payoff_max));
        iv.schedule.transfers.emplace(g.label_profile(g.index_profile(f)), std::move(t));
      }
      detail::check_inertia(report, trial, apply_price(g, iv), q, "price");
    }

    // (b) an addition strictly worse than everything the player already has
    // must not move the selection at all
    {
      const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      Rational lowest = g.payoff_at(0)[p];
      for (std::size_t f = 1; f < g.profile_count(); ++f)
        lowest = std::min(lowest, g.payoff_at(f)[p]);
      PayoffSlice slice;
      for (const auto& others : others_profiles(g, p)) {
        std::vector<Rational> u(n, Rational(0));
        u[p] = lowest - 1;
        slice.by_others.emplace(others, std::move(u));
      }
      const Game added = apply_addition(g, Addition{g.player_name(p), "z", slice});
      ++report.checks;
      if (!detail::same_selection(select(added, q, default_policy()),
                                  select(g, q, default_policy())))
        detail::record(report, trial, "a dominated addition changed the selection");
      detail::check_inertia(report, trial, added, q, "addition");
    }

    // (c) deleting any status-quo action makes the status quo infeasible;
    // selection must let go of it, and a unique efficient residual wins
    for (int i = 0; i < n; ++i) {
      if (g.action_count(i) < 2) continue;
      const Game residual = apply_deletion(g, Deletion{g.player_name(i), q.actions[i]});
      ++report.checks;
      if (residual.feasible(q)) {
        detail::record(report, trial, "status quo still feasible after deleting its action");
        continue;
      }
      const SelectionOutcome outcome = select(residual, q, default_policy());
      if (const auto* sel = std::get_if<Selected>(&outcome);
          sel && sel->profile == q && sel->reason == SelectionReason::inertia) {
        detail::record(report, trial, "inertia kept an infeasible status quo");
        continue;
      }
      const auto residual_pure = enumerate_pure_nash(residual);
      if (!residual_pure.empty()) {
        const auto eff = efficient_equilibria(residual, residual_pure);
        if (eff.unique_efficient) {
          const auto* sel = std::get_if<Selected>(&outcome);
          if (!sel || !(sel->profile == *eff.unique_efficient) ||
              sel->reason != SelectionReason::unique_efficient)
            detail::record(report, trial,
                           "deletion left a unique efficient equilibrium unselected");
        }
      }
    }

    // (d) a random replacement, same inertia invariant
    {
      const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      if (g.action_count(p) >= 2) {
        const std::uint64_t which = rng.below(static_cast<std::uint64_t>(g.action_count(p)));
        const std::string old_action = g.actions(p)[which];
        PayoffSlice slice;
        for (const auto& others : others_profiles(g, p)) {
          std::vector<Rational> u;
          for (int j = 0; j < n; ++j)
            u.emplace_back(rng.in_range(config.payoff_min, config.payoff_max));
          slice.by_others.emplace(others, std::move(u));
        }
        detail::check_inertia(
            report, trial,
            apply_replacement(g, Replacement{g.player_name(p), old_action, "z", slice}), q,
            "replacement");
      }
    }

    // (e) subsidies at the computed threshold never break the status quo
    {
      bool can_target = true;
      for (int i = 0; i < n; ++i)
        if (g.action_count(i) < 2) can_target = false;
      if (can_target) {
        SubsidyQuery query{q, {}};
        for (int i = 0; i < n; ++i) {
          const auto& list = g.actions(i);
          std::vector<std::string> alternatives;
          for (const auto& a : list)
            if (a != q.actions[i]) alternatives.push_back(a);
          query.targets.push_back(alternatives[rng.below(alternatives.size())]);
        }
        const Rational threshold = subsidy_threshold(g, query);
        const Game at = apply_price(g, subsidy_schedule(g, query.targets, threshold));
        detail::check_inertia(report, trial, at, q, "threshold subsidy");
        ++report.checks;
        if (!survives_as_equilibrium(at, q))
          detail::record(report, trial, "status quo broke at the subsidy threshold");
      }
    }
  }
  return report;
}

inline std::string render_fuzz(const FuzzConfig& config, const FuzzReport& report) {
  std::ostringstream out;
  out << "fuzz seed=" << config.seed << " trials=" << report.trials << "\n";
  out << "games with a pure equilibrium: " << report.games_with_pure_equilibrium << "/"
      << report.trials << "\n";
  out << "checks: " << report.checks << "\n";
  out << "violations: " << report.violations << "\n";
  for (const auto& sample : report.samples) out << "  " << sample << "\n";
  return out.str();
}

}  // namespace inertia
