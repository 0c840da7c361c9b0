#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "inertia/error.hpp"
#include "inertia/game.hpp"
#include "inertia/interventions.hpp"
#include "inertia/rational.hpp"

namespace inertia {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

struct GameDocument {
  Game game;
  std::optional<PureProfile> status_quo;

  bool operator==(const GameDocument&) const = default;
};

namespace detail {

// nlohmann reports a 1-based byte offset; turn it into line/column for the
// message.
inline std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                       std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t end = byte == 0 ? 0 : std::min(byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    fail(errc::syntax_error, "malformed JSON at line " + std::to_string(line) + ", column " +
                                 std::to_string(column));
  }
}

inline void reject_unknown_keys(const json& object, const char* what,
                                std::initializer_list<const char*> allowed) {
  for (const auto& [key, unused] : object.items()) {
    bool known = false;
    for (const char* name : allowed)
      if (key == name) {
        known = true;
        break;
      }
    if (!known)
      fail(errc::schema_error,
           std::string(what) + " has an unknown field \"" + key + "\"");
  }
}

inline const json& require_field(const json& object, const char* what, const char* key) {
  const auto it = object.find(key);
  if (it == object.end())
    fail(errc::schema_error, std::string(what) + " is missing the \"" + key + "\" field");
  return *it;
}

inline void expect_object(const json& value, const std::string& what) {
  if (!value.is_object()) fail(errc::schema_error, what + " must be an object");
}

inline void expect_array(const json& value, const std::string& what) {
  if (!value.is_array()) fail(errc::schema_error, what + " must be an array");
}

inline std::string expect_string(const json& value, const std::string& what) {
  if (!value.is_string()) fail(errc::schema_error, what + " must be a string");
  return value.get<std::string>();
}

// Integers and "p/q" strings; anything else (floats in particular) is out.
inline Rational expect_rational(const json& value, const std::string& what) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer() && !value.is_number_float())
    return Rational(value.get<std::int64_t>());
  if (value.is_number_unsigned()) return Rational(value.get<std::uint64_t>());
  fail(errc::schema_error, what + " must be an integer or a rational string like \"3/4\"");
}

inline std::vector<std::string> expect_string_array(const json& value,
                                                    const std::string& what) {
  expect_array(value, what);
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& item : value) out.push_back(expect_string(item, what + " entries"));
  return out;
}

inline std::vector<Rational> expect_rational_array(const json& value,
                                                   const std::string& what) {
  expect_array(value, what);
  std::vector<Rational> out;
  out.reserve(value.size());
  for (const auto& item : value) out.push_back(expect_rational(item, what + " entries"));
  return out;
}

inline ordered_json rational_json(const Rational& r) { return format_rational(r); }

inline ordered_json rational_array_json(const std::vector<Rational>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& r : values) out.push_back(rational_json(r));
  return out;
}

}  // namespace detail

// Game documents:
//   {
//     "players": ["P1", "P2"],            // optional, defaults to P1..Pn
//     "actions": [["O", "N"], ["O", "N"]],
//     "payoffs": [{"profile": ["O", "O"], "u": ["3", "3"]}, ...],
//     "status_quo": ["O", "O"]            // optional
//   }
// Payoff values may be JSON integers or rational strings. Unknown fields are
// rejected by name.
inline GameDocument parse_game_document(const std::string& text) {
  const json doc = detail::parse_json(text);
  detail::expect_object(doc, "a game document");
  detail::reject_unknown_keys(doc, "a game document",
                              {"players", "actions", "payoffs", "status_quo"});
  GameSpec spec;
  if (const auto it = doc.find("players"); it != doc.end())
    spec.players = detail::expect_string_array(*it, "\"players\"");
  const json& actions = detail::require_field(doc, "a game document", "actions");
  detail::expect_array(actions, "\"actions\"");
  for (const auto& list : actions)
    spec.actions.push_back(detail::expect_string_array(list, "an action list"));
  const json& payoffs = detail::require_field(doc, "a game document", "payoffs");
  detail::expect_array(payoffs, "\"payoffs\"");
  for (const auto& entry : payoffs) {
    detail::expect_object(entry, "a payoff entry");
    detail::reject_unknown_keys(entry, "a payoff entry", {"profile", "u"});
    spec.payoffs.emplace_back(
        detail::expect_string_array(detail::require_field(entry, "a payoff entry", "profile"),
                                    "\"profile\""),
        detail::expect_rational_array(detail::require_field(entry, "a payoff entry", "u"),
                                      "\"u\""));
  }
  GameDocument result{Game(spec), std::nullopt};
  if (const auto it = doc.find("status_quo"); it != doc.end()) {
    PureProfile q{detail::expect_string_array(*it, "\"status_quo\"")};
    if (!result.game.feasible(q))
      fail(errc::infeasible_profile,
           "status_quo " + to_string(q) + " is not a feasible profile of the game");
    result.status_quo = std::move(q);
  }
  return result;
}

// Canonical form: semantic key order, payoffs in lexicographic profile order,
// every payoff a rational string. Serializing then parsing is the identity.
inline std::string serialize_game_document(const GameDocument& doc) {
  const Game& g = doc.game;
  ordered_json out;
  out["players"] = g.player_names();
  ordered_json actions = ordered_json::array();
  for (int i = 0; i < g.player_count(); ++i) actions.push_back(g.actions(i));
  out["actions"] = std::move(actions);
  ordered_json payoffs = ordered_json::array();
  for (std::size_t f = 0; f < g.profile_count(); ++f) {
    ordered_json entry;
    entry["profile"] = g.label_profile(g.index_profile(f)).actions;
    entry["u"] = detail::rational_array_json(g.payoff_at(f));
    payoffs.push_back(std::move(entry));
  }
  out["payoffs"] = std::move(payoffs);
  if (doc.status_quo && g.feasible(*doc.status_quo))
    out["status_quo"] = doc.status_quo->actions;
  return out.dump(2) + "\n";
}

// Intervention documents. The "kind" field picks the shape:
//   {"kind": "price",   "transfers": [{"profile": [...], "t": [...]}]}
//   {"kind": "delete",  "player": "P1", "action": "O"}
//   {"kind": "add",     "player": "P1", "action": "X",
//                       "slice": [{"others": [...], "u": [...]}]}
//   {"kind": "replace", "player": "P1", "old_action": "O", "new_action": "X",
//                       "slice": [...]}
// Name resolution against a concrete game happens when the intervention is
// applied, not here.
inline Intervention parse_intervention_document(const std::string& text) {
  const json doc = detail::parse_json(text);
  detail::expect_object(doc, "an intervention document");
  const std::string kind =
      detail::expect_string(detail::require_field(doc, "an intervention document", "kind"),
                            "\"kind\"");
  if (kind == "price") {
    detail::reject_unknown_keys(doc, "a price intervention", {"kind", "transfers"});
    const json& transfers = detail::require_field(doc, "a price intervention", "transfers");
    detail::expect_array(transfers, "\"transfers\"");
    PriceOnly iv;
    for (const auto& entry : transfers) {
      detail::expect_object(entry, "a transfer entry");
      detail::reject_unknown_keys(entry, "a transfer entry", {"profile", "t"});
      PureProfile profile{detail::expect_string_array(
          detail::require_field(entry, "a transfer entry", "profile"), "\"profile\"")};
      auto t = detail::expect_rational_array(
          detail::require_field(entry, "a transfer entry", "t"), "\"t\"");
      if (!iv.schedule.transfers.emplace(std::move(profile), std::move(t)).second)
        fail(errc::schema_error, "two transfer entries share a profile");
    }
    return iv;
  }
  if (kind == "delete") {
    detail::reject_unknown_keys(doc, "a delete intervention", {"kind", "player", "action"});
    return Deletion{
        detail::expect_string(detail::require_field(doc, "a delete intervention", "player"),
                              "\"player\""),
        detail::expect_string(detail::require_field(doc, "a delete intervention", "action"),
                              "\"action\"")};
  }
  const auto parse_slice = [](const json& value) {
    detail::expect_array(value, "\"slice\"");
    PayoffSlice slice;
    for (const auto& entry : value) {
      detail::expect_object(entry, "a slice entry");
      detail::reject_unknown_keys(entry, "a slice entry", {"others", "u"});
      auto others = detail::expect_string_array(
          detail::require_field(entry, "a slice entry", "others"), "\"others\"");
      auto u = detail::expect_rational_array(
          detail::require_field(entry, "a slice entry", "u"), "\"u\"");
      if (!slice.by_others.emplace(std::move(others), std::move(u)).second)
        fail(errc::schema_error, "two slice entries share an opponents' profile");
    }
    return slice;
  };
  if (kind == "add") {
    detail::reject_unknown_keys(doc, "an add intervention",
                                {"kind", "player", "action", "slice"});
    return Addition{
        detail::expect_string(detail::require_field(doc, "an add intervention", "player"),
                              "\"player\""),
        detail::expect_string(detail::require_field(doc, "an add intervention", "action"),
                              "\"action\""),
        parse_slice(detail::require_field(doc, "an add intervention", "slice"))};
  }
  if (kind == "replace") {
    detail::reject_unknown_keys(doc, "a replace intervention",
                                {"kind", "player", "old_action", "new_action", "slice"});
    return Replacement{
        detail::expect_string(detail::require_field(doc, "a replace intervention", "player"),
                              "\"player\""),
        detail::expect_string(
            detail::require_field(doc, "a replace intervention", "old_action"),
            "\"old_action\""),
        detail::expect_string(
            detail::require_field(doc, "a replace intervention", "new_action"),
            "\"new_action\""),
        parse_slice(detail::require_field(doc, "a replace intervention", "slice"))};
  }
  fail(errc::schema_error, "unknown intervention kind \"" + kind + "\"");
}

inline std::string serialize_intervention_document(const Intervention& iv) {
  ordered_json out;
  std::visit(
      [&](const auto& concrete) {
        using T = std::decay_t<decltype(concrete)>;
        if constexpr (std::is_same_v<T, PriceOnly>) {
          out["kind"] = "price";
          ordered_json transfers = ordered_json::array();
          for (const auto& [profile, t] : concrete.schedule.transfers) {
            ordered_json entry;
            entry["profile"] = profile.actions;
            entry["t"] = detail::rational_array_json(t);
            transfers.push_back(std::move(entry));
          }
          out["transfers"] = std::move(transfers);
        } else if constexpr (std::is_same_v<T, Deletion>) {
          out["kind"] = "delete";
          out["player"] = concrete.player;
          out["action"] = concrete.action;
        } else {
          ordered_json slice = ordered_json::array();
          for (const auto& [others, u] : concrete.slice.by_others) {
            ordered_json entry;
            entry["others"] = others;
            entry["u"] = detail::rational_array_json(u);
            slice.push_back(std::move(entry));
          }
          if constexpr (std::is_same_v<T, Addition>) {
            out["kind"] = "add";
            out["player"] = concrete.player;
            out["action"] = concrete.action;
          } else {
            out["kind"] = "replace";
            out["player"] = concrete.player;
            out["old_action"] = concrete.old_action;
            out["new_action"] = concrete.new_action;
          }
          out["slice"] = std::move(slice);
        }
      },
      iv);
  return out.dump(2) + "\n";
}

}  // namespace inertia
