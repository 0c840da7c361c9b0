#pragma once

// Games the tests keep coming back to, built from raw specs on purpose so the
// preset library is itself under test elsewhere.

#include <string>

#include "inertia/error.hpp"
#include "inertia/game.hpp"

namespace testgames {

// Two-standard coordination: entrenched (O,O) at (3,3), better (N,N) at (5,5).
inline inertia::Game coordination() {
  inertia::GameSpec spec;
  spec.players = {"P1", "P2"};
  spec.actions = {{"O", "N"}, {"O", "N"}};
  spec.payoffs = {
      {{"O", "O"}, {3, 3}},
      {{"O", "N"}, {0, 1}},
      {{"N", "O"}, {1, 0}},
      {{"N", "N"}, {5, 5}},
  };
  return inertia::Game(spec);
}

// No pure equilibrium; the unique mixed one is uniform.
inline inertia::Game matching_pennies() {
  inertia::GameSpec spec;
  spec.players = {"P1", "P2"};
  spec.actions = {{"H", "T"}, {"H", "T"}};
  spec.payoffs = {
      {{"H", "H"}, {1, -1}},
      {{"H", "T"}, {-1, 1}},
      {{"T", "H"}, {-1, 1}},
      {{"T", "T"}, {1, -1}},
  };
  return inertia::Game(spec);
}

// Payoff-dominant (S,S) against risk-dominant (H,H).
inline inertia::Game stag_hunt() {
  inertia::GameSpec spec;
  spec.players = {"P1", "P2"};
  spec.actions = {{"S", "H"}, {"S", "H"}};
  spec.payoffs = {
      {{"S", "S"}, {4, 4}},
      {{"S", "H"}, {0, 3}},
      {{"H", "S"}, {3, 0}},
      {{"H", "H"}, {3, 3}},
  };
  return inertia::Game(spec);
}

// P1's rows are payoff-identical and P2 is indifferent everywhere: every
// profile is an equilibrium and the mixed set is a continuum.
inline inertia::Game flatland() {
  inertia::GameSpec spec;
  spec.players = {"P1", "P2"};
  spec.actions = {{"a1", "a2"}, {"b1", "b2"}};
  spec.payoffs = {
      {{"a1", "b1"}, {1, 2}},
      {{"a1", "b2"}, {5, 2}},
      {{"a2", "b1"}, {1, 2}},
      {{"a2", "b2"}, {5, 2}},
  };
  return inertia::Game(spec);
}

inline inertia::PureProfile profile(std::initializer_list<std::string> actions) {
  return inertia::PureProfile{actions};
}

// The error name carried by a call expected to be rejected.
template <typename Fn>
inline std::string rejection(Fn&& fn) {
  try {
    fn();
  } catch (const inertia::game_error& e) {
    return inertia::errc_name(e.code());
  }
  return "(accepted)";
}

}  // namespace testgames
