#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "inertia/error.hpp"
#include "inertia/game.hpp"
#include "inertia/linear.hpp"
#include "inertia/rational.hpp"

namespace inertia {

// A support pair whose indifference systems are consistent but underdetermined:
// a continuum of equilibria rather than isolated points.
struct DegenerateComponent {
  std::vector<std::string> support_row;  // player 1's support
  std::vector<std::string> support_col;  // player 2's support
};

struct EquilibriumSet {
  std::vector<PureProfile> pure;
  std::vector<MixedProfile> mixed;  // strictly mixed points only
  std::vector<DegenerateComponent> degenerate;
};

// Actions of `player` maximizing its payoff against a fixed pure profile of
// the others. Ties are all included.
inline std::vector<std::string> best_responses(const Game& g, int player,
                                               const std::vector<std::string>& others) {
  if (static_cast<int>(others.size()) != g.player_count() - 1)
    fail(errc::infeasible_profile,
         "expected " + std::to_string(g.player_count() - 1) + " opponent actions, got " +
             std::to_string(others.size()));
  std::vector<std::string> best;
  std::optional<Rational> best_value;
  for (const auto& a : g.actions(player)) {
    const Rational v = g.payoff(compose_profile(player, a, others), player);
    if (!best_value || v > *best_value) {
      best_value = v;
      best.assign(1, a);
    } else if (v == *best_value) {
      best.push_back(a);
    }
  }
  return best;
}

// Weak best-response test: no player gains by a unilateral deviation.
inline bool is_pure_nash(const Game& g, const PureProfile& p) {
  const auto idx = g.to_indices(p);
  const Rational* here = g.payoff_at(g.flat_index(idx)).data();
  for (int i = 0; i < g.player_count(); ++i) {
    std::vector<int> dev = idx;
    for (int a = 0; a < g.action_count(i); ++a) {
      if (a == idx[i]) continue;
      dev[i] = a;
      if (g.payoff_at(g.flat_index(dev))[i] > here[i]) return false;
    }
  }
  return true;
}

// All pure equilibria, in canonical (lexicographic) profile order.
inline std::vector<PureProfile> enumerate_pure_nash(const Game& g) {
  std::vector<PureProfile> out;
  for (std::size_t f = 0; f < g.profile_count(); ++f) {
    const PureProfile p = g.label_profile(g.index_profile(f));
    if (is_pure_nash(g, p)) out.push_back(p);
  }
  return out;
}

// Status-quo survival: an infeasible profile cannot be an equilibrium.
inline bool survives_as_equilibrium(const Game& g, const PureProfile& q) {
  return g.feasible(q) && is_pure_nash(g, q);
}

// Expected payoff to `player` from playing pure action index `a` while
// everyone else follows the mixed profile.
inline Rational action_value(const Game& g, const MixedProfile& m, int player, int a) {
  Rational total = 0;
  for (std::size_t f = 0; f < g.profile_count(); ++f) {
    const auto idx = g.index_profile(f);
    if (idx[player] != a) continue;
    Rational w = 1;
    for (int j = 0; j < g.player_count(); ++j) {
      if (j == player) continue;
      w *= m.strategies[j].probs[idx[j]];
      if (w == 0) break;
    }
    if (w == 0) continue;
    total += w * g.payoff_at(f)[player];
  }
  return total;
}

// Mixed equilibrium test for any player count: every action in a player's
// support must attain that player's best achievable value.
inline bool is_mixed_nash(const Game& g, const MixedProfile& m) {
  validate_mixed(g, m);
  for (int i = 0; i < g.player_count(); ++i) {
    std::vector<Rational> values;
    values.reserve(g.action_count(i));
    for (int a = 0; a < g.action_count(i); ++a) values.push_back(action_value(g, m, i, a));
    const Rational best = *std::max_element(values.begin(), values.end());
    for (int a = 0; a < g.action_count(i); ++a)
      if (m.strategies[i].probs[a] != 0 && values[a] != best) return false;
  }
  return true;
}

namespace detail {

inline std::vector<int> bits_to_indices(unsigned mask, int count) {
  std::vector<int> out;
  for (int a = 0; a < count; ++a)
    if (mask & (1u << a)) out.push_back(a);
  return out;
}

}  // namespace detail

// Support enumeration for two-player games. For each support pair, player 1's
// probabilities must make player 2 indifferent across its support and vice
// versa; both systems plus normalization either pin the point down or reveal
// a degenerate component. Strictly mixed solutions only — pure equilibria are
// enumerated directly.
inline EquilibriumSet enumerate_equilibria_2p(const Game& g) {
  if (g.player_count() != 2)
    fail(errc::not_two_players,
         "mixed enumeration handles exactly two players, game has " +
             std::to_string(g.player_count()));
  EquilibriumSet set;
  set.pure = enumerate_pure_nash(g);
  const int n1 = g.action_count(0);
  const int n2 = g.action_count(1);
  auto u = [&](int a, int b, int player) {
    return g.payoff_at(g.flat_index({a, b}))[player];
  };
  for (unsigned m1 = 1; m1 < (1u << n1); ++m1) {
    for (unsigned m2 = 1; m2 < (1u << n2); ++m2) {
      const auto s1 = detail::bits_to_indices(m1, n1);
      const auto s2 = detail::bits_to_indices(m2, n2);
      if (s1.size() == 1 && s2.size() == 1) continue;

      // Unknowns: y over s2 plus player 1's value v1. Each supported action
      // of player 1 earns exactly v1.
      std::vector<std::vector<Rational>> rows_y;
      for (int a : s1) {
        std::vector<Rational> row(s2.size() + 2, Rational(0));
        for (std::size_t j = 0; j < s2.size(); ++j) row[j] = u(a, s2[j], 0);
        row[s2.size()] = -1;
        rows_y.push_back(std::move(row));
      }
      {
        std::vector<Rational> norm(s2.size() + 2, Rational(0));
        for (std::size_t j = 0; j < s2.size(); ++j) norm[j] = 1;
        norm[s2.size() + 1] = 1;
        rows_y.push_back(std::move(norm));
      }
      const auto sol_y = solve_linear(std::move(rows_y), s2.size() + 1);
      if (sol_y.status == SolveStatus::inconsistent) continue;

      std::vector<std::vector<Rational>> rows_x;
      for (int b : s2) {
        std::vector<Rational> row(s1.size() + 2, Rational(0));
        for (std::size_t i = 0; i < s1.size(); ++i) row[i] = u(s1[i], b, 1);
        row[s1.size()] = -1;
        rows_x.push_back(std::move(row));
      }
      {
        std::vector<Rational> norm(s1.size() + 2, Rational(0));
        for (std::size_t i = 0; i < s1.size(); ++i) norm[i] = 1;
        norm[s1.size() + 1] = 1;
        rows_x.push_back(std::move(norm));
      }
      const auto sol_x = solve_linear(std::move(rows_x), s1.size() + 1);
      if (sol_x.status == SolveStatus::inconsistent) continue;

      if (sol_y.status == SolveStatus::underdetermined ||
          sol_x.status == SolveStatus::underdetermined) {
        DegenerateComponent c;
        for (int a : s1) c.support_row.push_back(g.actions(0)[a]);
        for (int b : s2) c.support_col.push_back(g.actions(1)[b]);
        set.degenerate.push_back(std::move(c));
        continue;
      }

      MixedProfile point;
      point.strategies.resize(2);
      point.strategies[0].probs.assign(n1, Rational(0));
      point.strategies[1].probs.assign(n2, Rational(0));
      bool positive = true;
      for (std::size_t i = 0; i < s1.size(); ++i) {
        if (sol_x.values[i] <= 0) positive = false;
        point.strategies[0].probs[s1[i]] = sol_x.values[i];
      }
      for (std::size_t j = 0; j < s2.size(); ++j) {
        if (sol_y.values[j] <= 0) positive = false;
        point.strategies[1].probs[s2[j]] = sol_y.values[j];
      }
      if (!positive) continue;
      const Rational v1 = sol_y.values[s2.size()];
      const Rational v2 = sol_x.values[s1.size()];
      bool undominated = true;
      for (int a = 0; a < n1 && undominated; ++a)
        if (!(m1 & (1u << a)) && action_value(g, point, 0, a) > v1) undominated = false;
      for (int b = 0; b < n2 && undominated; ++b)
        if (!(m2 & (1u << b)) && action_value(g, point, 1, b) > v2) undominated = false;
      if (!undominated) continue;
      set.mixed.push_back(std::move(point));
    }
  }
  std::sort(set.mixed.begin(), set.mixed.end(), mixed_less);
  return set;
}

// Weak Pareto comparison over profile payoffs.
inline bool weakly_dominates(const Game& g, const PureProfile& a, const PureProfile& b) {
  const auto& ua = g.payoff(a);
  const auto& ub = g.payoff(b);
  for (int i = 0; i < g.player_count(); ++i)
    if (ua[i] < ub[i]) return false;
  return true;
}

inline bool pareto_dominates(const Game& g, const PureProfile& a, const PureProfile& b) {
  if (!weakly_dominates(g, a, b)) return false;
  return g.payoff(a) != g.payoff(b);
}

struct EfficiencyReport {
  std::vector<PureProfile> candidates;  // deduplicated, canonical order
  std::vector<PureProfile> efficient;   // Pareto frontier of the candidates
  std::optional<PureProfile> unique_efficient;
};

// Pareto frontier within an equilibrium set. Every candidate must actually be
// an equilibrium of the game.
inline EfficiencyReport efficient_equilibria(const Game& g,
                                             std::vector<PureProfile> candidates) {
  for (const auto& c : candidates)
    if (!g.feasible(c) || !is_pure_nash(g, c))
      fail(errc::candidate_not_equilibrium,
           "profile " + to_string(c) + " is not a Nash equilibrium of the game");
  std::sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
    return g.flat_index(g.to_indices(a)) < g.flat_index(g.to_indices(b));
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  EfficiencyReport report;
  report.candidates = candidates;
  for (const auto& c : candidates) {
    bool dominated = false;
    for (const auto& d : candidates)
      if (pareto_dominates(g, d, c)) {
        dominated = true;
        break;
      }
    if (!dominated) report.efficient.push_back(c);
  }
  if (report.efficient.size() == 1) report.unique_efficient = report.efficient.front();
  return report;
}

}  // namespace inertia
