// Copyright 2026 The qcorr developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcorr/correlation.hpp"
#include "qcorr/probability.hpp"
#include "qcorr/scenarios.hpp"

namespace qcorr {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Value formatting
// ---------------------------------------------------------------------------

/// Values below this render as exactly 0; reference tables contain exact
/// zeros and display noise would bury the comparison.
inline constexpr double kDisplayZeroTol = 1e-12;

inline double display_value(double v) {
  return std::abs(v) < kDisplayZeroTol ? 0.0 : v;
}

/// Full-precision text for CSV cells.
inline std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", display_value(v));
  return buf;
}

/// Six significant digits plus a parenthesized rational guess when the value
/// sits within 1e-9 of a fraction with denominator <= 64, e.g. "2.25 (9/4)".
inline std::string format_readable(double v) {
  const double shown = display_value(v);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", shown);
  std::string out = buf;
  if (const auto guess = snap_to_rational(shown))
    if (guess->den() > 1) out += " (" + guess->str() + ")";
  return out;
}

inline std::string format_outcome(const Outcome& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += tuple[i].str();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

namespace detail {

inline std::string csv_header(std::size_t axes, const char* value_columns) {
  std::string header;
  for (std::size_t a = 1; a <= axes; ++a)
    header += "axis" + std::to_string(a) + ",";
  return header + value_columns + "\n";
}

}  // namespace detail

/// Schema: axis1,...,axisN,p — outcome labels as exact rationals.
inline std::string to_csv(const ProbabilityTable& table) {
  std::string out = detail::csv_header(table.grid().num_axes(), "p");
  const auto outcomes = table.grid().outcomes();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    for (const Rational& label : outcomes[k]) out += label.str() + ",";
    out += format_exact(table.value(k)) + "\n";
  }
  return out;
}

/// Schema: axis1,...,axisN,phi,undefined — phi empty and undefined=1 on 0/0
/// cells.
inline std::string to_csv(const CorrelationTable& table) {
  std::string out = detail::csv_header(table.grid().num_axes(), "phi,undefined");
  const auto outcomes = table.grid().outcomes();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    for (const Rational& label : outcomes[k]) out += label.str() + ",";
    if (table.defined(k))
      out += format_exact(table.value(k)) + ",0\n";
    else
      out += ",1\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline json to_json(const ProbabilityTable& table) {
  json rows = json::array();
  const auto outcomes = table.grid().outcomes();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    json labels = json::array();
    for (const Rational& label : outcomes[k]) labels.push_back(label.str());
    rows.push_back({{"outcome", labels}, {"p", display_value(table.value(k))}});
  }
  return rows;
}

inline json to_json(const CorrelationTable& table) {
  json rows = json::array();
  const auto outcomes = table.grid().outcomes();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    json labels = json::array();
    for (const Rational& label : outcomes[k]) labels.push_back(label.str());
    json row = {{"outcome", labels}, {"undefined", !table.defined(k)}};
    row["phi"] = table.defined(k) ? json(display_value(table.value(k))) : json();
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const RunReport& report) {
  json tables;
  tables["joint"] = to_json(report.joint);
  tables["product"] = to_json(report.product);
  tables["sum"] = to_json(report.sum);
  tables["phi_t"] = to_json(report.phi_t);
  tables["phi_c"] = to_json(report.phi_c);
  tables["phi_q"] = to_json(report.phi_q);
  json marginals = json::array();
  for (const auto& m : report.marginals) marginals.push_back(to_json(m));
  json deviations = json::object();
  for (const auto& [table, dev] : report.deviations) deviations[table] = dev;
  return {{"name", report.name},
          {"passed", report.passed},
          {"deviations", deviations},
          {"marginals", marginals},
          {"tables", tables}};
}

// ---------------------------------------------------------------------------
// Plain-text rendering
// ---------------------------------------------------------------------------

/// One row per outcome, one column per computed table.
inline void render_report(std::ostream& os, const RunReport& report) {
  os << "scenario " << report.name << "\n";
  const auto outcomes = report.joint.grid().outcomes();
  std::vector<std::vector<std::string>> columns;
  columns.push_back({"outcome"});
  for (const auto& o : outcomes) columns.back().push_back(format_outcome(o));
  const auto add_prob = [&](const char* title, const ProbabilityTable& t) {
    columns.push_back({title});
    for (std::size_t k = 0; k < t.size(); ++k)
      columns.back().push_back(format_readable(t.value(k)));
  };
  const auto add_phi = [&](const char* title, const CorrelationTable& t) {
    columns.push_back({title});
    for (std::size_t k = 0; k < t.size(); ++k)
      columns.back().push_back(t.defined(k) ? format_readable(t.value(k))
                                            : std::string("undef"));
  };
  add_prob("joint", report.joint);
  add_prob("product", report.product);
  add_prob("sum", report.sum);
  add_phi("phi_t", report.phi_t);
  add_phi("phi_c", report.phi_c);
  add_phi("phi_q", report.phi_q);

  std::vector<std::size_t> widths(columns.size(), 0);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& cell : columns[c])
      widths[c] = std::max(widths[c], cell.size());
  for (std::size_t r = 0; r < outcomes.size() + 1; ++r) {
    os << "  ";
    for (std::size_t c = 0; c < columns.size(); ++c)
      os << std::left << std::setw(static_cast<int>(widths[c]) + 2)
         << columns[c][r];
    os << "\n";
  }
  if (!report.deviations.empty()) {
    os << "  golden diff:";
    for (const auto& [table, dev] : report.deviations)
      os << " " << table << "=" << std::scientific << std::setprecision(2) << dev
         << std::defaultfloat;
    os << "  ->  " << (report.passed ? "pass" : "FAIL") << "\n";
  }
}

inline void render_report_csv(std::ostream& os, const RunReport& report) {
  os << "# scenario: " << report.name << "\n";
  os << "# table: joint\n" << to_csv(report.joint);
  os << "# table: product\n" << to_csv(report.product);
  os << "# table: sum\n" << to_csv(report.sum);
  os << "# table: phi_t\n" << to_csv(report.phi_t);
  os << "# table: phi_c\n" << to_csv(report.phi_c);
  os << "# table: phi_q\n" << to_csv(report.phi_q);
}

// ---------------------------------------------------------------------------
// Config parsing
// ---------------------------------------------------------------------------

namespace detail {

inline Complex parse_complex(const json& node) {
  if (node.is_number()) return Complex(node.get<double>(), 0.0);
  if (node.is_array() && node.size() == 2 && node[0].is_number() &&
      node[1].is_number())
    return Complex(node[0].get<double>(), node[1].get<double>());
  throw std::invalid_argument("config: complex entries must be numbers or [re,im]");
}

inline std::vector<Complex> parse_amplitudes(const json& node) {
  if (!node.is_array() || node.empty())
    throw std::invalid_argument("config: 'amplitudes' must be a non-empty array");
  std::vector<Complex> amps;
  amps.reserve(node.size());
  for (const auto& entry : node) amps.push_back(parse_complex(entry));
  return amps;
}

/// Explicit "dims" if present; otherwise an all-qubit profile inferred from
/// the amplitude count.
inline DimensionProfile profile_for(const json& node, std::size_t dim) {
  if (node.contains("dims")) {
    std::vector<std::size_t> dims;
    for (const auto& d : node.at("dims")) dims.push_back(d.get<std::size_t>());
    return DimensionProfile(std::move(dims));
  }
  std::size_t qubits = 0;
  while ((std::size_t{1} << qubits) < dim) ++qubits;
  if ((std::size_t{1} << qubits) != dim)
    throw std::invalid_argument("config: cannot infer factor dims for length " +
                                std::to_string(dim) + "; give 'dims' explicitly");
  return DimensionProfile::qubits(qubits);
}

inline Rational parse_label(const json& node) {
  if (node.is_string()) return Rational::parse(node.get<std::string>());
  if (node.is_number_integer()) return Rational(node.get<long long>());
  throw std::invalid_argument(
      "config: outcome labels must be rational strings or integers");
}

}  // namespace detail

/// State block: {"amplitudes": [[re,im],...], "dims": [2,2,2]} or
/// {"mixture": [{"weight": w, "amplitudes": [...]}, ...]}. "dims" may be
/// omitted for qubit spaces.
inline std::variant<PureState, StateDecomposition> parse_state(const json& node) {
  if (node.contains("amplitudes")) {
    auto amps = detail::parse_amplitudes(node.at("amplitudes"));
    auto profile = detail::profile_for(node, amps.size());
    return PureState(std::move(amps), std::move(profile));
  }
  if (node.contains("mixture")) {
    const json& mix = node.at("mixture");
    if (!mix.is_array() || mix.empty())
      throw std::invalid_argument("config: 'mixture' must be a non-empty array");
    std::vector<StateDecomposition::Term> terms;
    for (const auto& entry : mix) {
      auto amps = detail::parse_amplitudes(entry.at("amplitudes"));
      auto profile = entry.contains("dims")
                         ? detail::profile_for(entry, amps.size())
                         : detail::profile_for(node, amps.size());
      terms.push_back({entry.at("weight").get<double>(),
                       PureState(std::move(amps), std::move(profile))});
    }
    return StateDecomposition(std::move(terms));
  }
  throw std::invalid_argument("config: state needs 'amplitudes' or 'mixture'");
}

/// Observable block: {"builder":"local_joint","axes":["z","z","z"]},
/// {"builder":"embed","inner":{...},"slots":[1,2],"dims":[2,2,2]} or
/// {"effects":[{"outcome":[...],"matrix":[[...],...]},...]}. An embed block
/// without "dims" targets the state's profile.
inline DiscreteObservable parse_observable(const json& node,
                                           const DimensionProfile* state_profile) {
  if (node.contains("builder")) {
    const std::string builder = node.at("builder").get<std::string>();
    if (builder == "local_joint") {
      std::vector<SpinAxis> axes;
      for (const auto& a : node.at("axes"))
        axes.push_back(spin_axis_from(a.get<std::string>()));
      return local_joint(axes);
    }
    if (builder == "embed") {
      DiscreteObservable inner = parse_observable(node.at("inner"), nullptr);
      std::vector<std::size_t> slots;
      for (const auto& s : node.at("slots")) slots.push_back(s.get<std::size_t>());
      DimensionProfile target = [&] {
        if (node.contains("dims")) {
          std::vector<std::size_t> dims;
          for (const auto& d : node.at("dims")) dims.push_back(d.get<std::size_t>());
          return DimensionProfile(std::move(dims));
        }
        if (state_profile) return *state_profile;
        throw std::invalid_argument(
            "config: embed needs 'dims' when no state profile is available");
      }();
      return embed(inner, target, slots);
    }
    throw std::invalid_argument("config: unknown builder '" + builder + "'");
  }
  if (node.contains("effects")) {
    const json& effects_node = node.at("effects");
    if (!effects_node.is_array() || effects_node.empty())
      throw std::invalid_argument("config: 'effects' must be a non-empty array");
    std::vector<Outcome> outcomes;
    std::vector<ComplexMatrix> matrices;
    for (const auto& entry : effects_node) {
      Outcome tuple;
      for (const auto& label : entry.at("outcome"))
        tuple.push_back(detail::parse_label(label));
      outcomes.push_back(std::move(tuple));
      const json& rows = entry.at("matrix");
      const std::size_t n = rows.size();
      std::vector<Complex> entries;
      entries.reserve(n * n);
      for (const auto& row : rows) {
        if (row.size() != n)
          throw std::invalid_argument("config: effect matrix must be square");
        for (const auto& cell : row) entries.push_back(detail::parse_complex(cell));
      }
      matrices.emplace_back(n, n, std::move(entries));
    }
    const std::size_t arity = outcomes.front().size();
    std::vector<std::vector<Rational>> axes(arity);
    for (const auto& tuple : outcomes) {
      if (tuple.size() != arity)
        throw std::invalid_argument("config: outcome tuples differ in arity");
      for (std::size_t a = 0; a < arity; ++a)
        if (std::find(axes[a].begin(), axes[a].end(), tuple[a]) == axes[a].end())
          axes[a].push_back(tuple[a]);
    }
    OutcomeGrid grid(std::move(axes));
    if (grid.size() != matrices.size())
      throw std::invalid_argument("config: effects do not cover the outcome grid");
    std::vector<ComplexMatrix> ordered(grid.size(), ComplexMatrix());
    std::vector<bool> seen(grid.size(), false);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const std::size_t k = grid.index_of(outcomes[i]);
      if (seen[k])
        throw std::invalid_argument("config: duplicate outcome tuple " +
                                    format_outcome(outcomes[i]));
      seen[k] = true;
      ordered[k] = std::move(matrices[i]);
    }
    const std::size_t dim = ordered.front().rows();
    DimensionProfile profile =
        state_profile && state_profile->total_dim() == dim
            ? *state_profile
            : DimensionProfile({dim});
    return DiscreteObservable(std::move(grid), std::move(ordered),
                              std::move(profile));
  }
  throw std::invalid_argument("config: observable needs 'builder' or 'effects'");
}

inline GoldenTables parse_golden(const json& node) {
  GoldenTables golden;
  const auto probs = [&](const char* key) -> std::optional<std::vector<Rational>> {
    if (!node.contains(key)) return std::nullopt;
    std::vector<std::string> cells;
    for (const auto& c : node.at(key)) cells.push_back(c.get<std::string>());
    return golden_probs(cells);
  };
  const auto phis =
      [&](const char* key) -> std::optional<std::vector<std::optional<Rational>>> {
    if (!node.contains(key)) return std::nullopt;
    std::vector<std::string> cells;
    for (const auto& c : node.at(key)) cells.push_back(c.get<std::string>());
    return golden_phis(cells);
  };
  golden.joint = probs("joint");
  golden.product = probs("product");
  golden.sum = probs("sum");
  golden.phi_t = phis("phi_t");
  golden.phi_c = phis("phi_c");
  golden.phi_q = phis("phi_q");
  return golden;
}

/// Whole config document: state + observable (+ optional name, expected).
inline Scenario parse_scenario(const json& node) {
  auto state = parse_state(node.at("state"));
  const DimensionProfile& profile = std::holds_alternative<PureState>(state)
                                        ? std::get<PureState>(state).profile()
                                        : std::get<StateDecomposition>(state).profile();
  DiscreteObservable obs = parse_observable(node.at("observable"), &profile);
  GoldenTables expected;
  if (node.contains("expected")) expected = parse_golden(node.at("expected"));
  const std::string name =
      node.contains("name") ? node.at("name").get<std::string>() : "config";
  return Scenario{name, "", std::move(state), std::move(obs), std::move(expected)};
}

}  // namespace qcorr
