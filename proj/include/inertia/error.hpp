#pragma once

#include <stdexcept>
#include <string>

namespace inertia {

// Input-level failure classes. The CLI maps game_error to exit code 2.
enum class errc {
  duplicate_action_label,
  empty_action_set,
  missing_payoff_entry,
  duplicate_payoff_entry,
  infeasible_profile,
  infeasible_partial_profile,
  dimension_mismatch,
  invalid_mixed_strategy,
  not_two_players,
  unknown_player,
  unknown_action,
  would_empty_action_set,
  duplicate_action,
  incomplete_slice,
  infeasible_transfer_key,
  status_quo_not_equilibrium,
  target_equals_status_quo_action,
  candidate_not_equilibrium,
  duplicate_refinement,
  unknown_refinement,
  unknown_preset,
  io_error,
  syntax_error,
  schema_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_action_label: return "DuplicateActionLabel";
    case errc::empty_action_set: return "EmptyActionSet";
    case errc::missing_payoff_entry: return "MissingPayoffEntry";
    case errc::duplicate_payoff_entry: return "DuplicatePayoffEntry";
    case errc::infeasible_profile: return "InfeasibleProfile";
    case errc::infeasible_partial_profile: return "InfeasiblePartialProfile";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::invalid_mixed_strategy: return "InvalidMixedStrategy";
    case errc::not_two_players: return "NotTwoPlayers";
    case errc::unknown_player: return "UnknownPlayer";
    case errc::unknown_action: return "UnknownAction";
    case errc::would_empty_action_set: return "WouldEmptyActionSet";
    case errc::duplicate_action: return "DuplicateAction";
    case errc::incomplete_slice: return "IncompleteSlice";
    case errc::infeasible_transfer_key: return "InfeasibleTransferKey";
    case errc::status_quo_not_equilibrium: return "StatusQuoNotEquilibrium";
    case errc::target_equals_status_quo_action: return "TargetEqualsStatusQuoAction";
    case errc::candidate_not_equilibrium: return "CandidateNotEquilibrium";
    case errc::duplicate_refinement: return "DuplicateRefinement";
    case errc::unknown_refinement: return "UnknownRefinement";
    case errc::unknown_preset: return "UnknownPreset";
    case errc::io_error: return "IoError";
    case errc::syntax_error: return "SyntaxError";
    case errc::schema_error: return "SchemaError";
  }
  return "UnknownError";
}

// Bad input or a violated operation precondition.
class game_error : public std::runtime_error {
 public:
  game_error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// A broken internal invariant: a bug, never bad input. CLI exit code 3.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw game_error(code, message);
}

inline void check_internal(bool ok, const char* what) {
  if (!ok) throw internal_error(what);
}

}  // namespace inertia
