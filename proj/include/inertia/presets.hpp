#pragma once

#include <string>
#include <vector>

#include "inertia/error.hpp"
#include "inertia/game.hpp"
#include "inertia/interventions.hpp"
#include "inertia/io.hpp"

namespace inertia {

struct GamePreset {
  std::string name;
  std::string summary;
  GameDocument document;
};

struct InterventionPreset {
  std::string name;
  std::string summary;
  std::string game;  // preset game it is written against
  Intervention intervention;
};

namespace detail {

// The canonical 2x2 coordination story: an entrenched old standard at (3,3),
// a better new one at (5,5), miscoordination in between. Relabeled per domain.
inline GameDocument coordination_story(const std::string& old_label,
                                       const std::string& new_label) {
  GameSpec spec;
  spec.players = {"P1", "P2"};
  spec.actions = {{old_label, new_label}, {old_label, new_label}};
  spec.payoffs = {
      {{old_label, old_label}, {3, 3}},
      {{old_label, new_label}, {0, 1}},
      {{new_label, old_label}, {1, 0}},
      {{new_label, new_label}, {5, 5}},
  };
  return GameDocument{Game(spec), PureProfile{{old_label, old_label}}};
}

// Deleting `old` leaves two incomparable equilibria; replacing it with a hub
// action leaves a single efficient one. Built to contrast the two moves.
inline GameDocument fork_story() {
  GameSpec spec;
  spec.players = {"P1", "P2"};
  spec.actions = {{"old", "left", "right"}, {"left", "right"}};
  spec.payoffs = {
      {{"old", "left"}, {5, 5}},
      {{"old", "right"}, {0, 0}},
      {{"left", "left"}, {2, 1}},
      {{"left", "right"}, {0, 0}},
      {{"right", "left"}, {0, 0}},
      {{"right", "right"}, {1, 2}},
  };
  return GameDocument{Game(spec), PureProfile{{"old", "left"}}};
}

inline PriceOnly uniform_new_subsidy(const Rational& s) {
  PriceOnly iv;
  iv.schedule.transfers[PureProfile{{"O", "N"}}] = {0, s};
  iv.schedule.transfers[PureProfile{{"N", "O"}}] = {s, 0};
  iv.schedule.transfers[PureProfile{{"N", "N"}}] = {s, s};
  return iv;
}

}  // namespace detail

inline std::vector<GamePreset> game_presets() {
  return {
      {"coordination", "old standard vs new standard, both equilibria",
       detail::coordination_story("O", "N")},
      {"climate", "fossil vs clean technology lock-in",
       detail::coordination_story("fossil", "clean")},
      {"platform", "closed vs open platform architecture",
       detail::coordination_story("closed", "open")},
      {"finance", "risky vs safe contract form",
       detail::coordination_story("risky", "safe")},
      {"industry", "legacy vs modern production standard",
       detail::coordination_story("legacy", "modern")},
      {"fork", "deletion alone leaves a coordination problem; status quo (old, left)",
       detail::fork_story()},
  };
}

inline std::vector<InterventionPreset> intervention_presets() {
  return {
      {"subsidy-1", "pay each player 1 for choosing N (below the threshold)",
       "coordination", detail::uniform_new_subsidy(1)},
      {"subsidy-3", "pay each player 3 for choosing N (above the threshold)",
       "coordination", detail::uniform_new_subsidy(3)},
      {"add-attractive", "new option N2 for P1, great if the opponent modernizes",
       "coordination",
       Addition{"P1", "N2", PayoffSlice{{{{"O"}, {0, 0}}, {{"N"}, {6, 6}}}}}},
      {"add-tempting", "new option N2 for P1 that beats O against O",
       "coordination",
       Addition{"P1", "N2", PayoffSlice{{{{"O"}, {4, 0}}, {{"N"}, {0, 0}}}}}},
      {"delete-old", "ban O for P1", "coordination", Deletion{"P1", "O"}},
      {"replace-old", "swap P1's O for a transitional option N2", "coordination",
       Replacement{"P1", "O", "N2", PayoffSlice{{{{"O"}, {4, 4}}, {{"N"}, {0, 1}}}}}},
      {"fork-delete", "ban old for P1; two incomparable equilibria remain", "fork",
       Deletion{"P1", "old"}},
      {"fork-replace", "swap old for a hub option that points at (hub, left)", "fork",
       Replacement{"P1", "old", "hub", PayoffSlice{{{{"left"}, {3, 3}}, {{"right"}, {0, 0}}}}}},
  };
}

inline GamePreset find_game_preset(const std::string& name) {
  for (auto& preset : game_presets())
    if (preset.name == name) return preset;
  fail(errc::unknown_preset, "no game preset named \"" + name + "\"");
}

inline InterventionPreset find_intervention_preset(const std::string& name) {
  for (auto& preset : intervention_presets())
    if (preset.name == name) return preset;
  fail(errc::unknown_preset, "no intervention preset named \"" + name + "\"");
}

}  // namespace inertia
