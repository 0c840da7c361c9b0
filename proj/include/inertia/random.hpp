#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inertia/game.hpp"

namespace inertia {

// SplitMix64. Fixed constants so any implementation of this generator, in any
// language, reproduces the same stream from the same seed.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Modulo reduction, deliberately: simple to replicate exactly.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

struct RandomGameConfig {
  std::uint64_t seed = 0;
  int players = 2;
  int actions = 2;  // per player
  std::int64_t payoff_min = -9;
  std::int64_t payoff_max = 9;
};

// Deterministic game from a seed. Draw order: payoffs profile by profile in
// lexicographic order (player 1's action outermost), players in index order
// within each profile. Labels are fixed: players P1..Pn, actions a1..ak.
inline Game random_game(const RandomGameConfig& config) {
  SplitMix64 rng(config.seed);
  GameSpec spec;
  for (int i = 0; i < config.players; ++i)
    spec.players.push_back("P" + std::to_string(i + 1));
  std::vector<std::string> labels;
  for (int a = 0; a < config.actions; ++a) labels.push_back("a" + std::to_string(a + 1));
  spec.actions.assign(config.players, labels);

  std::size_t total = 1;
  for (int i = 0; i < config.players; ++i) total *= static_cast<std::size_t>(config.actions);
  std::vector<int> idx(config.players, 0);
  for (std::size_t f = 0; f < total; ++f) {
    std::vector<std::string> profile;
    for (int i = 0; i < config.players; ++i) profile.push_back(labels[idx[i]]);
    std::vector<Rational> u;
    for (int i = 0; i < config.players; ++i)
      u.emplace_back(rng.in_range(config.payoff_min, config.payoff_max));
    spec.payoffs.emplace_back(std::move(profile), std::move(u));
    for (int i = config.players - 1; i >= 0; --i) {
      if (++idx[i] < config.actions) break;
      idx[i] = 0;
    }
  }
  return Game(spec);
}

}  // namespace inertia
