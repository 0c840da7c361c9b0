#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "inertia/error.hpp"
#include "inertia/game.hpp"
#include "inertia/rational.hpp"

namespace inertia {

// Per-profile transfer vectors; profiles not listed are left untouched.
struct TransferSchedule {
  std::map<PureProfile, std::vector<Rational>> transfers;
};

// Payoff data a new action needs: one payoff vector per profile of the other
// players (keyed by their action labels in player order).
struct PayoffSlice {
  std::map<std::vector<std::string>, std::vector<Rational>> by_others;
};

struct PriceOnly {
  TransferSchedule schedule;
};

struct Deletion {
  std::string player;
  std::string action;
};

struct Addition {
  std::string player;
  std::string action;
  PayoffSlice slice;
};

struct Replacement {
  std::string player;
  std::string old_action;
  std::string new_action;
  PayoffSlice slice;
};

using Intervention = std::variant<PriceOnly, Deletion, Addition, Replacement>;

inline GameSpec to_spec(const Game& g) {
  GameSpec spec;
  spec.players = g.player_names();
  for (int i = 0; i < g.player_count(); ++i) spec.actions.push_back(g.actions(i));
  for (std::size_t f = 0; f < g.profile_count(); ++f)
    spec.payoffs.emplace_back(g.label_profile(g.index_profile(f)).actions, g.payoff_at(f));
  return spec;
}

// Same action sets, payoffs shifted by the schedule.
inline Game apply_price(const Game& g, const PriceOnly& iv) {
  GameSpec spec = to_spec(g);
  for (const auto& [profile, t] : iv.schedule.transfers) {
    if (!g.feasible(profile))
      fail(errc::infeasible_transfer_key,
           "transfer keyed by " + to_string(profile) + ", which is not a feasible profile");
    if (static_cast<int>(t.size()) != g.player_count())
      fail(errc::dimension_mismatch,
           "transfer at " + to_string(profile) + " has " + std::to_string(t.size()) +
               " values, expected " + std::to_string(g.player_count()));
    const std::size_t f = g.flat_index(g.to_indices(profile));
    for (int i = 0; i < g.player_count(); ++i) spec.payoffs[f].second[i] += t[i];
  }
  return Game(spec);
}

inline Game apply_deletion(const Game& g, const Deletion& iv) {
  const int p = g.player_index(iv.player);
  if (!g.action_index(p, iv.action))
    fail(errc::unknown_action,
         "player " + iv.player + " has no action \"" + iv.action + "\"");
  if (g.action_count(p) == 1)
    fail(errc::would_empty_action_set,
         "deleting \"" + iv.action + "\" would leave player " + iv.player +
             " with no actions");
  GameSpec spec;
  spec.players = g.player_names();
  for (int i = 0; i < g.player_count(); ++i) spec.actions.push_back(g.actions(i));
  auto& list = spec.actions[p];
  list.erase(std::find(list.begin(), list.end(), iv.action));
  for (std::size_t f = 0; f < g.profile_count(); ++f) {
    const PureProfile profile = g.label_profile(g.index_profile(f));
    if (profile.actions[p] == iv.action) continue;
    spec.payoffs.emplace_back(profile.actions, g.payoff_at(f));
  }
  return Game(spec);
}

inline Game apply_addition(const Game& g, const Addition& iv) {
  const int p = g.player_index(iv.player);
  if (g.action_index(p, iv.action))
    fail(errc::duplicate_action,
         "player " + iv.player + " already has an action \"" + iv.action + "\"");
  GameSpec spec = to_spec(g);
  spec.actions[p].push_back(iv.action);
  const auto required = others_profiles(g, p);
  std::size_t used = 0;
  for (const auto& others : required) {
    const auto it = iv.slice.by_others.find(others);
    if (it == iv.slice.by_others.end()) {
      fail(errc::incomplete_slice,
           "slice for \"" + iv.action + "\" is missing opponents' profile " +
               to_string(PureProfile{others}));
    }
    if (static_cast<int>(it->second.size()) != g.player_count())
      fail(errc::dimension_mismatch,
           "slice entry for " + to_string(PureProfile{others}) + " has " +
               std::to_string(it->second.size()) + " values, expected " +
               std::to_string(g.player_count()));
    spec.payoffs.emplace_back(compose_profile(p, iv.action, others).actions, it->second);
    ++used;
  }
  if (used != iv.slice.by_others.size())
    for (const auto& [others, unused] : iv.slice.by_others)
      if (std::find(required.begin(), required.end(), others) == required.end())
        fail(errc::infeasible_profile,
             "slice lists opponents' profile " + to_string(PureProfile{others}) +
                 ", which is not feasible");
  return Game(spec);
}

// Replacement is the composite: delete the old action, then add the new one.
inline Game apply_replacement(const Game& g, const Replacement& iv) {
  const Game reduced = apply_deletion(g, Deletion{iv.player, iv.old_action});
  return apply_addition(reduced, Addition{iv.player, iv.new_action, iv.slice});
}

inline Game apply_intervention(const Game& g, const Intervention& iv) {
  return std::visit(
      [&](const auto& concrete) -> Game {
        using T = std::decay_t<decltype(concrete)>;
        if constexpr (std::is_same_v<T, PriceOnly>) return apply_price(g, concrete);
        if constexpr (std::is_same_v<T, Deletion>) return apply_deletion(g, concrete);
        if constexpr (std::is_same_v<T, Addition>) return apply_addition(g, concrete);
        if constexpr (std::is_same_v<T, Replacement>) return apply_replacement(g, concrete);
      },
      iv);
}

inline std::string intervention_class(const Intervention& iv) {
  return std::visit(
      [](const auto& concrete) -> std::string {
        using T = std::decay_t<decltype(concrete)>;
        if constexpr (std::is_same_v<T, PriceOnly>) return "price";
        if constexpr (std::is_same_v<T, Deletion>) return "deletion";
        if constexpr (std::is_same_v<T, Addition>) return "addition";
        if constexpr (std::is_same_v<T, Replacement>) return "replacement";
      },
      iv);
}

inline std::string describe_intervention(const Intervention& iv) {
  return std::visit(
      [](const auto& concrete) -> std::string {
        using T = std::decay_t<decltype(concrete)>;
        if constexpr (std::is_same_v<T, PriceOnly>)
          return "payoffs shifted at " + std::to_string(concrete.schedule.transfers.size()) +
                 " profile(s)";
        if constexpr (std::is_same_v<T, Deletion>)
          return "remove " + concrete.action + " for " + concrete.player;
        if constexpr (std::is_same_v<T, Addition>)
          return "add " + concrete.action + " for " + concrete.player;
        if constexpr (std::is_same_v<T, Replacement>)
          return "replace " + concrete.old_action + " with " + concrete.new_action + " for " +
                 concrete.player;
      },
      iv);
}

}  // namespace inertia
