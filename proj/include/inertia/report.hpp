#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "inertia/equilibria.hpp"
#include "inertia/error.hpp"
#include "inertia/game.hpp"
#include "inertia/selection.hpp"
#include "inertia/synthesis.hpp"

namespace inertia {

enum class ReportFormat { text, csv };

inline ReportFormat parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "csv") return ReportFormat::csv;
  fail(errc::schema_error, "no report format named \"" + name + "\" (use text or csv)");
}

struct Analysis {
  std::vector<PureProfile> pure;
  std::vector<MixedProfile> mixed;
  std::vector<DegenerateComponent> degenerate;
  EfficiencyReport efficiency;
  bool mixed_requested = false;
};

inline Analysis analyze_game(const Game& g, bool include_mixed) {
  Analysis a;
  a.mixed_requested = include_mixed;
  if (include_mixed && g.player_count() == 2) {
    auto set = enumerate_equilibria_2p(g);
    a.pure = std::move(set.pure);
    a.mixed = std::move(set.mixed);
    a.degenerate = std::move(set.degenerate);
  } else {
    if (include_mixed)
      fail(errc::not_two_players, "mixed enumeration handles exactly two players, game has " +
                                      std::to_string(g.player_count()));
    a.pure = enumerate_pure_nash(g);
  }
  a.efficiency = efficient_equilibria(g, a.pure);
  return a;
}

namespace detail {

inline std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

// Column width in code points, so multi-byte headers pad the same as ASCII.
inline std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

// Text tables: two-space gutters, columns padded to the widest cell.
inline std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c >= width.size()) width.resize(c + 1, 0);
      width[c] = std::max(width[c], display_width(row[c]));
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - display_width(row[c]), ' ');
    }
    out += line + "\n";
  }
  return out;
}

inline std::string profile_list(const std::vector<PureProfile>& profiles) {
  std::string out;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (i) out += ", ";
    out += to_string(profiles[i]);
  }
  return out;
}

}  // namespace detail

inline std::string render_game_summary(const Game& g) {
  std::ostringstream out;
  out << "players: ";
  for (int i = 0; i < g.player_count(); ++i) out << (i ? ", " : "") << g.player_name(i);
  out << "\nactions:\n";
  for (int i = 0; i < g.player_count(); ++i) {
    out << "  " << g.player_name(i) << ": ";
    for (int a = 0; a < g.action_count(i); ++a) out << (a ? ", " : "") << g.actions(i)[a];
    out << "\n";
  }
  out << "payoffs:\n";
  for (std::size_t f = 0; f < g.profile_count(); ++f) {
    const PureProfile p = g.label_profile(g.index_profile(f));
    out << "  " << to_string(p) << "  " << format_vector(g.payoff_at(f)) << "\n";
  }
  return out.str();
}

inline std::string render_analysis(const Game& g, const Analysis& a, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::string out = detail::csv_line({"kind", "profile", "payoffs"});
    for (const auto& p : a.pure)
      out += detail::csv_line({"pure", to_string(p), format_vector(g.payoff(p))});
    for (const auto& m : a.mixed)
      out += detail::csv_line({"mixed", to_string(g, m), format_vector(expected_payoffs(g, m))});
    for (const auto& d : a.degenerate) {
      std::string support = g.player_name(0) + ": {";
      for (std::size_t i = 0; i < d.support_row.size(); ++i)
        support += (i ? ", " : "") + d.support_row[i];
      support += "}; " + g.player_name(1) + ": {";
      for (std::size_t i = 0; i < d.support_col.size(); ++i)
        support += (i ? ", " : "") + d.support_col[i];
      support += "}";
      out += detail::csv_line({"degenerate-component", support, ""});
    }
    for (const auto& p : a.efficiency.efficient)
      out += detail::csv_line({"efficient", to_string(p), format_vector(g.payoff(p))});
    return out;
  }
  std::ostringstream out;
  out << "pure equilibria (" << a.pure.size() << "):\n";
  for (const auto& p : a.pure)
    out << "  " << to_string(p) << "  payoffs " << format_vector(g.payoff(p)) << "\n";
  if (a.mixed_requested) {
    out << "mixed equilibria (" << a.mixed.size() << "):\n";
    for (const auto& m : a.mixed)
      out << "  " << to_string(g, m) << "  payoffs " << format_vector(expected_payoffs(g, m))
          << "\n";
    for (const auto& d : a.degenerate) {
      out << "  degenerate component: " << g.player_name(0) << " support {";
      for (std::size_t i = 0; i < d.support_row.size(); ++i)
        out << (i ? ", " : "") << d.support_row[i];
      out << "} vs " << g.player_name(1) << " support {";
      for (std::size_t i = 0; i < d.support_col.size(); ++i)
        out << (i ? ", " : "") << d.support_col[i];
      out << "}\n";
    }
  }
  out << "efficient equilibria (" << a.efficiency.efficient.size() << "):\n";
  for (const auto& p : a.efficiency.efficient)
    out << "  " << to_string(p) << "  payoffs " << format_vector(g.payoff(p)) << "\n";
  if (a.efficiency.unique_efficient)
    out << "unique efficient equilibrium: " << to_string(*a.efficiency.unique_efficient)
        << "\n";
  else if (!a.pure.empty())
    out << "no unique efficient equilibrium\n";
  return out.str();
}

// The selection decision flow, step by step: feasibility, equilibrium test,
// then the refinement chain with candidate counts.
inline std::string render_selection(const Game& g, const PureProfile& status_quo,
                                    const FallbackPolicy& policy,
                                    const SelectOptions& options = {}) {
  std::ostringstream out;
  out << "status quo: " << to_string(status_quo) << "\n";
  const bool feasible = g.feasible(status_quo);
  out << "  feasible? " << (feasible ? "yes" : "no") << "\n";
  if (feasible) {
    const bool nash = is_pure_nash(g, status_quo);
    out << "  still a Nash equilibrium? " << (nash ? "yes" : "no") << "\n";
    if (nash) {
      out << "  -> inertia preserves the status quo\n";
      out << "selected: " << to_string(status_quo) << "  [Inertia]  payoffs "
          << format_vector(g.payoff(status_quo)) << "\n";
      return out.str();
    }
  }
  out << "  -> transition is possible\n";
  std::vector<PureProfile> candidates = enumerate_pure_nash(g);
  std::vector<MixedProfile> mixed;
  if (options.include_mixed && g.player_count() == 2)
    mixed = enumerate_equilibria_2p(g).mixed;
  out << "pure equilibria (" << candidates.size() << ")";
  if (!candidates.empty()) out << ": " << detail::profile_list(candidates);
  out << "\n";
  if (candidates.empty()) {
    if (!mixed.empty()) {
      out << "strictly mixed equilibria (" << mixed.size() << "):\n";
      for (const auto& m : mixed) out << "  " << to_string(g, m) << "\n";
      out << "ambiguous: no pure equilibrium; only mixed equilibria remain\n";
    } else {
      out << "no equilibrium: nothing to select\n";
    }
    return out.str();
  }
  if (policy.empty()) {
    out << "refinement chain: (empty)\n";
  } else {
    out << "refinement chain:\n";
    for (const Refinement stage : policy) {
      const std::size_t before = candidates.size();
      candidates = apply_refinement(g, stage, candidates);
      out << "  " << refinement_name(stage) << ": " << before << " -> " << candidates.size()
          << " candidate(s)\n";
      if (candidates.size() == 1) {
        out << "selected: " << to_string(candidates.front()) << "  ["
            << reason_name(reason_of(stage)) << "]  payoffs "
            << format_vector(g.payoff(candidates.front())) << "\n";
        return out.str();
      }
    }
  }
  out << "ambiguous: " << candidates.size()
      << " candidates remain: " << detail::profile_list(candidates) << "\n";
  return out.str();
}

namespace detail {

inline std::string outcome_cell(const SelectionOutcome& outcome) {
  if (const auto* sel = std::get_if<Selected>(&outcome)) return to_string(sel->profile);
  if (const auto* amb = std::get_if<Ambiguous>(&outcome)) {
    if (amb->candidates.empty()) return "ambiguous (mixed only)";
    return "ambiguous {" + profile_list(amb->candidates) + "}";
  }
  return "none";
}

inline std::string payoffs_cell(const ComparisonRow& row) {
  if (row.outcome_payoffs.empty()) return "-";
  if (row.outcome_payoffs.size() == 1) return format_vector(row.outcome_payoffs[0].second);
  std::string out = "{";
  for (std::size_t i = 0; i < row.outcome_payoffs.size(); ++i) {
    if (i) out += ", ";
    out += format_vector(row.outcome_payoffs[i].second);
  }
  return out + "}";
}

}  // namespace detail

inline std::string render_comparison(const ComparisonTable& table, ReportFormat format) {
  const std::vector<std::string> header = {"class", "change", "q⁻ survives",
                                           "selected outcome", "payoffs at outcome"};
  std::vector<std::vector<std::string>> rows = {header};
  for (const auto& row : table.rows)
    rows.push_back({row.klass, row.change, row.survives ? "true" : "false",
                    detail::outcome_cell(row.selection), detail::payoffs_cell(row)});
  if (format == ReportFormat::csv) {
    std::string out;
    for (const auto& row : rows) out += detail::csv_line(row);
    return out;
  }
  return detail::text_table(rows);
}

inline std::string render_subsidy(const Game& g, const SubsidyQuery& query) {
  const auto margins = deviation_margins(g, query);
  const Rational threshold = subsidy_threshold(g, query);
  std::ostringstream out;
  out << "status quo: " << to_string(query.status_quo) << "\n";
  out << "targets: ";
  for (int i = 0; i < g.player_count(); ++i)
    out << (i ? ", " : "") << g.player_name(i) << " -> " << query.targets[i];
  out << "\ndeviation margins: ";
  for (int i = 0; i < g.player_count(); ++i)
    out << (i ? ", " : "") << g.player_name(i) << ": " << format_rational(margins[i]);
  out << "\nsubsidy threshold: " << format_rational(threshold) << "\n";
  out << "a uniform subsidy s on the targets leaves " << to_string(query.status_quo)
      << " standing for s <= " << format_rational(threshold) << " and breaks it for s > "
      << format_rational(threshold) << "\n";
  return out.str();
}

inline std::string render_deletions(const DeletionSynthesis& synthesis) {
  std::ostringstream out;
  out << "minimal deletion sets (" << synthesis.sets.size() << "):\n";
  for (const auto& set : synthesis.sets) {
    out << "  {";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) out << ", ";
      out << set[i].player << ": " << set[i].action;
    }
    out << "}\n";
  }
  if (synthesis.sets.empty()) out << "  " << synthesis.diagnostic << "\n";
  return out.str();
}

}  // namespace inertia
