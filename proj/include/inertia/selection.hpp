#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "inertia/equilibria.hpp"
#include "inertia/error.hpp"
#include "inertia/game.hpp"

namespace inertia {

enum class Refinement { unique_efficient, payoff_dominance, risk_dominance_2x2, utilitarian };

inline const char* refinement_name(Refinement r) {
  switch (r) {
    case Refinement::unique_efficient: return "unique-efficient";
    case Refinement::payoff_dominance: return "payoff-dominance";
    case Refinement::risk_dominance_2x2: return "risk-dominance-2x2";
    case Refinement::utilitarian: return "utilitarian";
  }
  return "?";
}

inline Refinement parse_refinement(const std::string& name) {
  if (name == "unique-efficient") return Refinement::unique_efficient;
  if (name == "payoff-dominance") return Refinement::payoff_dominance;
  if (name == "risk-dominance-2x2") return Refinement::risk_dominance_2x2;
  if (name == "utilitarian") return Refinement::utilitarian;
  fail(errc::unknown_refinement, "no refinement named \"" + name + "\"");
}

// Ordered fallback chain, tried stage by stage when inertia does not resolve
// the outcome.
using FallbackPolicy = std::vector<Refinement>;

inline void validate_policy(const FallbackPolicy& policy) {
  for (std::size_t i = 0; i < policy.size(); ++i)
    for (std::size_t j = i + 1; j < policy.size(); ++j)
      if (policy[i] == policy[j])
        fail(errc::duplicate_refinement,
             std::string("refinement \"") + refinement_name(policy[i]) +
                 "\" appears twice in the policy");
}

// Comma-separated refinement names; the empty string is the empty policy.
inline FallbackPolicy parse_policy(const std::string& text) {
  FallbackPolicy policy;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    if (!item.empty()) policy.push_back(parse_refinement(item));
    start = comma + 1;
    if (comma == text.size()) break;
  }
  validate_policy(policy);
  return policy;
}

enum class SelectionReason {
  inertia,
  unique_efficient,
  payoff_dominance,
  risk_dominance_2x2,
  utilitarian,
};

inline SelectionReason reason_of(Refinement r) {
  switch (r) {
    case Refinement::unique_efficient: return SelectionReason::unique_efficient;
    case Refinement::payoff_dominance: return SelectionReason::payoff_dominance;
    case Refinement::risk_dominance_2x2: return SelectionReason::risk_dominance_2x2;
    case Refinement::utilitarian: return SelectionReason::utilitarian;
  }
  return SelectionReason::inertia;
}

inline const char* reason_name(SelectionReason r) {
  switch (r) {
    case SelectionReason::inertia: return "Inertia";
    case SelectionReason::unique_efficient: return "UniqueEfficient";
    case SelectionReason::payoff_dominance: return "PayoffDominance";
    case SelectionReason::risk_dominance_2x2: return "RiskDominance2x2";
    case SelectionReason::utilitarian: return "Utilitarian";
  }
  return "?";
}

struct Selected {
  PureProfile profile;
  SelectionReason reason = SelectionReason::inertia;

  bool operator==(const Selected&) const = default;
};

// More than one candidate left after the whole chain (or no chain to run).
// `stage` is the last refinement applied, if any.
struct Ambiguous {
  std::vector<PureProfile> candidates;
  std::optional<Refinement> stage;
  std::vector<MixedProfile> mixed_candidates;
};

struct NoEquilibrium {
  bool operator==(const NoEquilibrium&) const = default;
};

using SelectionOutcome = std::variant<Selected, Ambiguous, NoEquilibrium>;

struct SelectOptions {
  bool include_mixed = false;
};

// Risk dominance for 2x2 games with exactly two strict pure equilibria on a
// diagonal: the equilibrium with the larger product of unilateral deviation
// losses. Anything else (ties included) yields nothing.
inline std::optional<PureProfile> risk_dominant_2x2(const Game& g) {
  if (g.player_count() != 2 || g.action_count(0) != 2 || g.action_count(1) != 2)
    return std::nullopt;
  const auto pure = enumerate_pure_nash(g);
  if (pure.size() != 2) return std::nullopt;
  const PureProfile& e = pure[0];
  const PureProfile& f = pure[1];
  if (e.actions[0] == f.actions[0] || e.actions[1] == f.actions[1]) return std::nullopt;
  const auto loss = [&](const PureProfile& at, const PureProfile& other, int player) {
    PureProfile deviated = at;
    deviated.actions[player] = other.actions[player];
    return g.payoff(at, player) - g.payoff(deviated, player);
  };
  const Rational l1e = loss(e, f, 0), l2e = loss(e, f, 1);
  const Rational l1f = loss(f, e, 0), l2f = loss(f, e, 1);
  if (l1e <= 0 || l2e <= 0 || l1f <= 0 || l2f <= 0) return std::nullopt;
  const Rational pe = l1e * l2e, pf = l1f * l2f;
  if (pe > pf) return e;
  if (pf > pe) return f;
  return std::nullopt;
}

// One refinement stage. Never empties the candidate set: a stage that cannot
// discriminate leaves it unchanged.
inline std::vector<PureProfile> apply_refinement(const Game& g, Refinement stage,
                                                 const std::vector<PureProfile>& candidates) {
  switch (stage) {
    case Refinement::unique_efficient:
      return efficient_equilibria(g, candidates).efficient;
    case Refinement::payoff_dominance: {
      for (const auto& c : candidates) {
        bool dominates_all = true;
        for (const auto& d : candidates)
          if (!(c == d) && !weakly_dominates(g, c, d)) {
            dominates_all = false;
            break;
          }
        if (dominates_all) return {c};
      }
      return candidates;
    }
    case Refinement::risk_dominance_2x2: {
      const auto r = risk_dominant_2x2(g);
      if (r && std::find(candidates.begin(), candidates.end(), *r) != candidates.end())
        return {*r};
      return candidates;
    }
    case Refinement::utilitarian: {
      std::vector<PureProfile> best;
      std::optional<Rational> best_sum;
      for (const auto& c : candidates) {
        Rational sum = 0;
        for (const auto& u : g.payoff(c)) sum += u;
        if (!best_sum || sum > *best_sum) {
          best_sum = sum;
          best.assign(1, c);
        } else if (sum == *best_sum) {
          best.push_back(c);
        }
      }
      return best;
    }
  }
  return candidates;
}

// Outcome selection under status-quo inertia. A status quo that is still an
// equilibrium stays selected, full stop. Otherwise the fallback chain filters
// the pure equilibria stage by stage until one remains; a chain that never
// gets there reports the survivors as ambiguous.
inline SelectionOutcome select(const Game& g, const PureProfile& status_quo,
                               const FallbackPolicy& policy,
                               const SelectOptions& options = {}) {
  validate_policy(policy);
  if (survives_as_equilibrium(g, status_quo))
    return Selected{status_quo, SelectionReason::inertia};
  std::vector<PureProfile> candidates = enumerate_pure_nash(g);
  std::vector<MixedProfile> mixed;
  if (options.include_mixed && g.player_count() == 2)
    mixed = enumerate_equilibria_2p(g).mixed;
  if (candidates.empty()) {
    if (!mixed.empty()) return Ambiguous{{}, std::nullopt, std::move(mixed)};
    return NoEquilibrium{};
  }
  std::optional<Refinement> last_stage;
  for (const Refinement stage : policy) {
    candidates = apply_refinement(g, stage, candidates);
    last_stage = stage;
    if (candidates.size() == 1) return Selected{candidates.front(), reason_of(stage)};
  }
  return Ambiguous{std::move(candidates), last_stage, std::move(mixed)};
}

inline FallbackPolicy default_policy() { return {Refinement::unique_efficient}; }

}  // namespace inertia
