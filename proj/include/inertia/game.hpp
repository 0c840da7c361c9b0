#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inertia/error.hpp"
#include "inertia/rational.hpp"

namespace inertia {

// One action label per player, ordered by player index.
struct PureProfile {
  std::vector<std::string> actions;

  auto operator<=>(const PureProfile&) const = default;
};

inline std::string to_string(const PureProfile& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.actions.size(); ++i) {
    if (i) out += ", ";
    out += p.actions[i];
  }
  return out + ")";
}

// Probability per action of one player, aligned with that player's action order.
struct MixedStrategy {
  std::vector<Rational> probs;
};

inline bool operator==(const MixedStrategy& a, const MixedStrategy& b) {
  return a.probs == b.probs;
}

struct MixedProfile {
  std::vector<MixedStrategy> strategies;
};

inline bool operator==(const MixedProfile& a, const MixedProfile& b) {
  return a.strategies == b.strategies;
}

// Canonical ordering: lexicographic over the concatenated probability vectors.
inline bool mixed_less(const MixedProfile& a, const MixedProfile& b) {
  const std::size_t n = std::min(a.strategies.size(), b.strategies.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& pa = a.strategies[i].probs;
    const auto& pb = b.strategies[i].probs;
    const std::size_t k = std::min(pa.size(), pb.size());
    for (std::size_t j = 0; j < k; ++j) {
      if (pa[j] != pb[j]) return pa[j] < pb[j];
    }
    if (pa.size() != pb.size()) return pa.size() < pb.size();
  }
  return a.strategies.size() < b.strategies.size();
}

// Raw material for build_game. Payoff entries are keyed by label profiles and
// must cover every profile exactly once.
struct GameSpec {
  std::vector<std::string> players;  // optional display names, defaulted to P1..Pn
  std::vector<std::vector<std::string>> actions;
  std::vector<std::pair<std::vector<std::string>, std::vector<Rational>>> payoffs;
};

// A validated finite normal-form game. Immutable after construction; payoffs
// are stored densely in lexicographic profile order (player 0 outermost).
class Game {
 public:
  explicit Game(const GameSpec& spec) {
    if (spec.actions.empty())
      fail(errc::empty_action_set, "a game needs at least one player");
    const std::size_t n = spec.actions.size();
    if (!spec.players.empty() && spec.players.size() != n)
      fail(errc::dimension_mismatch, "player list and action lists disagree in length");
    players_ = spec.players;
    if (players_.empty()) {
      players_.reserve(n);
      for (std::size_t i = 0; i < n; ++i) players_.push_back("P" + std::to_string(i + 1));
    }
    actions_ = spec.actions;
    for (std::size_t i = 0; i < n; ++i) {
      if (actions_[i].empty())
        fail(errc::empty_action_set, "player " + players_[i] + " has no actions");
      for (std::size_t a = 0; a < actions_[i].size(); ++a)
        for (std::size_t b = a + 1; b < actions_[i].size(); ++b)
          if (actions_[i][a] == actions_[i][b])
            fail(errc::duplicate_action_label,
                 "player " + players_[i] + " lists action \"" + actions_[i][a] + "\" twice");
    }
    strides_.assign(n, 1);
    for (std::size_t i = n; i-- > 1;) strides_[i - 1] = strides_[i] * actions_[i].size();
    profile_count_ = strides_[0] * actions_[0].size();

    payoffs_.assign(profile_count_, {});
    std::vector<char> seen(profile_count_, 0);
    for (const auto& [labels, values] : spec.payoffs) {
      const std::size_t f = flat_index(to_indices(PureProfile{labels}));
      if (seen[f])
        fail(errc::duplicate_payoff_entry,
             "profile " + to_string(PureProfile{labels}) + " has two payoff entries");
      if (values.size() != n)
        fail(errc::dimension_mismatch,
             "payoff entry for " + to_string(PureProfile{labels}) + " has " +
                 std::to_string(values.size()) + " values, expected " + std::to_string(n));
      payoffs_[f] = values;
      seen[f] = 1;
    }
    for (std::size_t f = 0; f < profile_count_; ++f)
      if (!seen[f])
        fail(errc::missing_payoff_entry,
             "missing payoff entry for profile " + to_string(label_profile(index_profile(f))));
  }

  int player_count() const { return static_cast<int>(actions_.size()); }
  const std::vector<std::string>& player_names() const { return players_; }
  const std::string& player_name(int p) const { return players_[check_player(p)]; }
  const std::vector<std::string>& actions(int p) const { return actions_[check_player(p)]; }
  int action_count(int p) const { return static_cast<int>(actions_[check_player(p)].size()); }
  std::size_t profile_count() const { return profile_count_; }

  int player_index(const std::string& name) const {
    for (std::size_t i = 0; i < players_.size(); ++i)
      if (players_[i] == name) return static_cast<int>(i);
    fail(errc::unknown_player, "no player named \"" + name + "\"");
  }

  std::optional<int> action_index(int player, const std::string& label) const {
    const auto& list = actions_[check_player(player)];
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i] == label) return static_cast<int>(i);
    return std::nullopt;
  }

  bool feasible(const PureProfile& p) const {
    if (p.actions.size() != actions_.size()) return false;
    for (std::size_t i = 0; i < actions_.size(); ++i)
      if (!action_index(static_cast<int>(i), p.actions[i])) return false;
    return true;
  }

  std::vector<int> to_indices(const PureProfile& p) const {
    if (p.actions.size() != actions_.size())
      fail(errc::infeasible_profile,
           "profile " + to_string(p) + " names " + std::to_string(p.actions.size()) +
               " actions for a " + std::to_string(actions_.size()) + "-player game");
    std::vector<int> idx(actions_.size());
    for (std::size_t i = 0; i < actions_.size(); ++i) {
      const auto a = action_index(static_cast<int>(i), p.actions[i]);
      if (!a)
        fail(errc::infeasible_profile,
             "action \"" + p.actions[i] + "\" is not feasible for player " + players_[i]);
      idx[i] = *a;
    }
    return idx;
  }

  std::size_t flat_index(const std::vector<int>& idx) const {
    std::size_t f = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) f += strides_[i] * idx[i];
    return f;
  }

  std::vector<int> index_profile(std::size_t flat) const {
    std::vector<int> idx(actions_.size());
    for (std::size_t i = 0; i < actions_.size(); ++i) {
      idx[i] = static_cast<int>(flat / strides_[i]);
      flat %= strides_[i];
    }
    return idx;
  }

  PureProfile label_profile(const std::vector<int>& idx) const {
    PureProfile p;
    p.actions.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) p.actions.push_back(actions_[i][idx[i]]);
    return p;
  }

  const std::vector<Rational>& payoff_at(std::size_t flat) const { return payoffs_[flat]; }

  const std::vector<Rational>& payoff(const PureProfile& p) const {
    return payoffs_[flat_index(to_indices(p))];
  }

  Rational payoff(const PureProfile& p, int player) const {
    return payoff(p)[check_player(player)];
  }

  // Semantic identity: names, action lists, and the full payoff map.
  bool operator==(const Game& other) const {
    return players_ == other.players_ && actions_ == other.actions_ &&
           payoffs_ == other.payoffs_;
  }

 private:
  int check_player(int p) const {
    if (p < 0 || p >= static_cast<int>(actions_.size()))
      fail(errc::unknown_player, "player index " + std::to_string(p) + " out of range");
    return p;
  }

  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<std::vector<Rational>> payoffs_;
  std::vector<std::size_t> strides_;
  std::size_t profile_count_ = 0;
};

inline Game build_game(const GameSpec& spec) { return Game(spec); }

// Profiles of everyone except `player`, in canonical order.
inline std::vector<std::vector<std::string>> others_profiles(const Game& g, int player) {
  std::vector<std::vector<std::string>> result;
  std::vector<int> counts;
  for (int j = 0; j < g.player_count(); ++j)
    if (j != player) counts.push_back(g.action_count(j));
  std::size_t total = 1;
  for (int c : counts) total *= static_cast<std::size_t>(c);
  std::vector<int> idx(counts.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<std::string> labels;
    labels.reserve(counts.size());
    int slot = 0;
    for (int j = 0; j < g.player_count(); ++j) {
      if (j == player) continue;
      labels.push_back(g.actions(j)[idx[slot]]);
      ++slot;
    }
    result.push_back(std::move(labels));
    for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
      if (++idx[i] < counts[i]) break;
      idx[i] = 0;
    }
  }
  return result;
}

inline PureProfile compose_profile(int player, const std::string& action,
                                   const std::vector<std::string>& others) {
  PureProfile p;
  p.actions.reserve(others.size() + 1);
  int slot = 0;
  for (std::size_t i = 0; i <= others.size(); ++i) {
    if (static_cast<int>(i) == player)
      p.actions.push_back(action);
    else
      p.actions.push_back(others[slot++]);
  }
  return p;
}

inline void validate_mixed(const Game& g, const MixedProfile& m) {
  const int n = g.player_count();
  if (static_cast<int>(m.strategies.size()) != n)
    fail(errc::dimension_mismatch,
         "mixed profile has " + std::to_string(m.strategies.size()) + " strategies for a " +
             std::to_string(n) + "-player game");
  for (int i = 0; i < n; ++i) {
    const auto& probs = m.strategies[i].probs;
    if (static_cast<int>(probs.size()) != g.action_count(i))
      fail(errc::dimension_mismatch,
           "player " + g.player_name(i) + " has " + std::to_string(g.action_count(i)) +
               " actions but the strategy lists " + std::to_string(probs.size()));
    Rational sum = 0;
    for (const auto& p : probs) {
      if (p < 0)
        fail(errc::invalid_mixed_strategy,
             "player " + g.player_name(i) + " has a negative probability");
      sum += p;
    }
    if (sum != 1)
      fail(errc::invalid_mixed_strategy,
           "player " + g.player_name(i) + "'s probabilities sum to " + format_rational(sum));
  }
}

// Exact expectation: sum over profiles of the product of per-player
// probabilities times the player's payoff.
inline Rational expected_payoff(const Game& g, const MixedProfile& m, int player) {
  validate_mixed(g, m);
  if (player < 0 || player >= g.player_count())
    fail(errc::unknown_player, "player index " + std::to_string(player) + " out of range");
  Rational total = 0;
  for (std::size_t f = 0; f < g.profile_count(); ++f) {
    const auto idx = g.index_profile(f);
    Rational w = 1;
    for (int j = 0; j < g.player_count(); ++j) {
      w *= m.strategies[j].probs[idx[j]];
      if (w == 0) break;
    }
    if (w == 0) continue;
    total += w * g.payoff_at(f)[player];
  }
  return total;
}

inline std::vector<Rational> expected_payoffs(const Game& g, const MixedProfile& m) {
  std::vector<Rational> out;
  out.reserve(g.player_count());
  for (int i = 0; i < g.player_count(); ++i) out.push_back(expected_payoff(g, m, i));
  return out;
}

// All probability mass on the profile's actions.
inline MixedProfile degenerate_mixed(const Game& g, const PureProfile& p) {
  const auto idx = g.to_indices(p);
  MixedProfile m;
  m.strategies.resize(g.player_count());
  for (int i = 0; i < g.player_count(); ++i) {
    m.strategies[i].probs.assign(g.action_count(i), Rational(0));
    m.strategies[i].probs[idx[i]] = 1;
  }
  return m;
}

// The pure profile a degenerate mixed profile stands for, if it is one.
inline std::optional<PureProfile> as_pure(const Game& g, const MixedProfile& m) {
  validate_mixed(g, m);
  PureProfile p;
  for (int i = 0; i < g.player_count(); ++i) {
    int chosen = -1;
    for (int a = 0; a < g.action_count(i); ++a) {
      if (m.strategies[i].probs[a] == 0) continue;
      if (chosen >= 0) return std::nullopt;
      chosen = a;
    }
    p.actions.push_back(g.actions(i)[chosen]);
  }
  return p;
}

inline bool strictly_mixed(const MixedProfile& m) {
  for (const auto& s : m.strategies) {
    int support = 0;
    for (const auto& p : s.probs)
      if (p != 0) ++support;
    if (support > 1) return true;
  }
  return false;
}

inline std::string to_string(const Game& g, const MixedProfile& m) {
  std::string out;
  for (int i = 0; i < g.player_count(); ++i) {
    if (i) out += "; ";
    out += g.player_name(i) + ": {";
    for (int a = 0; a < g.action_count(i); ++a) {
      if (a) out += ", ";
      out += g.actions(i)[a] + ": " + format_rational(m.strategies[i].probs[a]);
    }
    out += "}";
  }
  return out;
}

}  // namespace inertia
