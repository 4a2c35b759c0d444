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

#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcorr/correlation.hpp"
#include "qcorr/observables.hpp"
#include "qcorr/probability.hpp"
#include "qcorr/rational.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Per-cell agreement required between a computed table and its golden
/// reference.
inline constexpr double kGoldenTol = 1e-10;

/// Golden reference tables, kept as exact rationals so fixtures never pick
/// up decimal-rounding drift. Correlation cells may be UNDEFINED.
struct GoldenTables {
  std::optional<std::vector<Rational>> joint;
  std::optional<std::vector<Rational>> product;
  std::optional<std::vector<Rational>> sum;
  std::optional<std::vector<std::optional<Rational>>> phi_t;
  std::optional<std::vector<std::optional<Rational>>> phi_c;
  std::optional<std::vector<std::optional<Rational>>> phi_q;

  bool empty() const {
    return !joint && !product && !sum && !phi_t && !phi_c && !phi_q;
  }
};

/// Parses a list of rational strings ("1/2", "0") into golden values.
inline std::vector<Rational> golden_probs(const std::vector<std::string>& cells) {
  std::vector<Rational> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(Rational::parse(c));
  return out;
}

/// Same, with "undef" marking a 0/0 cell.
inline std::vector<std::optional<Rational>> golden_phis(
    const std::vector<std::string>& cells) {
  std::vector<std::optional<Rational>> out;
  out.reserve(cells.size());
  for (const auto& c : cells) {
    if (c == "undef")
      out.push_back(std::nullopt);
    else
      out.push_back(Rational::parse(c));
  }
  return out;
}

/// A named (state, observable) pair with optional golden tables.
struct Scenario {
  std::string name;
  std::string description;
  std::variant<PureState, StateDecomposition> state;
  DiscreteObservable observable;
  GoldenTables expected;
};

/// Everything run() computes for a scenario, plus per-golden-table maximum
/// absolute deviations. passed is true iff every deviation is at most
/// kGoldenTol (an UNDEFINED-cell mismatch counts as infinite deviation).
struct RunReport {
  std::string name;
  ProbabilityTable joint;
  std::vector<ProbabilityTable> marginals;
  ProbabilityTable product;
  ProbabilityTable sum;
  CorrelationTable phi_t;
  CorrelationTable phi_c;
  CorrelationTable phi_q;
  std::map<std::string, double> deviations;
  bool passed;

  double max_deviation() const {
    double m = 0.0;
    for (const auto& [table, dev] : deviations) m = std::max(m, dev);
    return m;
  }
};

namespace detail {

inline double golden_deviation(const ProbabilityTable& table,
                               const std::vector<Rational>& golden,
                               const std::string& which) {
  if (golden.size() != table.size())
    throw std::invalid_argument("run: golden '" + which + "' has " +
                                std::to_string(golden.size()) + " cells, grid has " +
                                std::to_string(table.size()));
  double dev = 0.0;
  for (std::size_t k = 0; k < table.size(); ++k)
    dev = std::max(dev, std::abs(table.value(k) - golden[k].value()));
  return dev;
}

inline double golden_deviation(const CorrelationTable& table,
                               const std::vector<std::optional<Rational>>& golden,
                               const std::string& which) {
  if (golden.size() != table.size())
    throw std::invalid_argument("run: golden '" + which + "' has " +
                                std::to_string(golden.size()) + " cells, grid has " +
                                std::to_string(table.size()));
  double dev = 0.0;
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (golden[k].has_value() != table.defined(k))
      return std::numeric_limits<double>::infinity();
    if (golden[k])
      dev = std::max(dev, std::abs(table.value(k) - golden[k]->value()));
  }
  return dev;
}

}  // namespace detail

/// Full pipeline for one scenario: measured joint, per-axis marginals,
/// product and sum references, the three correlation functions, and golden
/// diffs. A pure state runs through its trivial one-term decomposition.
inline RunReport run(const Scenario& s) {
  const StateDecomposition decomposition =
      std::holds_alternative<PureState>(s.state)
          ? StateDecomposition::pure(std::get<PureState>(s.state))
          : std::get<StateDecomposition>(s.state);

  ProbabilityTable joint =
      std::holds_alternative<PureState>(s.state)
          ? measure(s.observable, std::get<PureState>(s.state))
          : measure(s.observable, density_of(std::get<StateDecomposition>(s.state)));

  std::vector<ProbabilityTable> marginals;
  for (std::size_t a = 1; a <= joint.grid().num_axes(); ++a)
    marginals.push_back(marginal_table(joint, a));
  ProbabilityTable product = product_table(marginals);
  ProbabilityTable sum = sum_table(s.observable, decomposition);

  CorrelationTable phi_t = total_correlation(joint, product);
  CorrelationTable phi_c = classical_correlation(sum, product);
  CorrelationTable phi_q = quantum_correlation(joint, sum);

  std::map<std::string, double> deviations;
  if (s.expected.joint)
    deviations["joint"] = detail::golden_deviation(joint, *s.expected.joint, "joint");
  if (s.expected.product)
    deviations["product"] =
        detail::golden_deviation(product, *s.expected.product, "product");
  if (s.expected.sum)
    deviations["sum"] = detail::golden_deviation(sum, *s.expected.sum, "sum");
  if (s.expected.phi_t)
    deviations["phi_t"] = detail::golden_deviation(phi_t, *s.expected.phi_t, "phi_t");
  if (s.expected.phi_c)
    deviations["phi_c"] = detail::golden_deviation(phi_c, *s.expected.phi_c, "phi_c");
  if (s.expected.phi_q)
    deviations["phi_q"] = detail::golden_deviation(phi_q, *s.expected.phi_q, "phi_q");

  bool passed = true;
  for (const auto& [table, dev] : deviations)
    if (!(dev <= kGoldenTol)) passed = false;

  return RunReport{s.name,
                   std::move(joint),
                   std::move(marginals),
                   std::move(product),
                   std::move(sum),
                   std::move(phi_t),
                   std::move(phi_c),
                   std::move(phi_q),
                   std::move(deviations),
                   passed};
}

/// The built-in case studies. Golden tables are exact rationals; the two
/// reduced-GHZ scenarios carry references obtained by expanding the sum
/// probability function term by term (the tests recompute them from raw
/// amplitudes).
inline std::vector<Scenario> builtin_scenarios() {
  std::vector<Scenario> all;

  const auto zzz = local_joint({SpinAxis::z, SpinAxis::z, SpinAxis::z});
  const auto xyy = local_joint({SpinAxis::x, SpinAxis::y, SpinAxis::y});
  const auto zz = local_joint({SpinAxis::z, SpinAxis::z});
  const auto zz_embedded = embed(zz, DimensionProfile::qubits(3), {1, 2});

  const PureState ghz = make_ghz();
  const PureState w = make_w();
  const DimensionProfile two = DimensionProfile::qubits(2);

  const StateDecomposition rho_prime_comp({{0.5, basis_state(two, {0, 0})},
                                           {0.5, basis_state(two, {1, 1})}});
  const StateDecomposition rho_prime_bell({{0.5, make_bell(1)},
                                           {0.5, make_bell(2)}});
  const StateDecomposition rho_second({{2.0 / 3.0, make_bell(3)},
                                       {1.0 / 3.0, basis_state(two, {1, 1})}});

  all.push_back({"ghz_case1",
                 "joint z-spin observable on all three qubits at the GHZ state",
                 ghz,
                 zzz,
                 {golden_probs({"1/2", "0", "0", "0", "0", "0", "0", "1/2"}),
                  golden_probs({"1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8"}),
                  golden_probs({"1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8"}),
                  golden_phis({"4", "0", "0", "0", "0", "0", "0", "4"}),
                  golden_phis({"1", "1", "1", "1", "1", "1", "1", "1"}),
                  golden_phis({"4", "0", "0", "0", "0", "0", "0", "4"})}});

  all.push_back({"ghz_case2",
                 "joint x,y,y spin observable at the GHZ state",
                 ghz,
                 xyy,
                 {golden_probs({"1/4", "0", "0", "1/4", "0", "1/4", "1/4", "0"}),
                  golden_probs({"1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8"}),
                  golden_probs({"1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8"}),
                  golden_phis({"2", "0", "0", "2", "0", "2", "2", "0"}),
                  golden_phis({"1", "1", "1", "1", "1", "1", "1", "1"}),
                  golden_phis({"2", "0", "0", "2", "0", "2", "2", "0"})}});

  all.push_back({"w_case1",
                 "joint z-spin observable on all three qubits at the W state",
                 w,
                 zzz,
                 {golden_probs({"0", "0", "0", "1/3", "0", "1/3", "1/3", "0"}),
                  golden_probs({"1/27", "2/27", "2/27", "4/27", "2/27", "4/27",
                                "4/27", "8/27"}),
                  golden_probs({"1/27", "2/27", "2/27", "4/27", "2/27", "4/27",
                                "4/27", "8/27"}),
                  golden_phis({"0", "0", "0", "9/4", "0", "9/4", "9/4", "0"}),
                  golden_phis({"1", "1", "1", "1", "1", "1", "1", "1"}),
                  golden_phis({"0", "0", "0", "9/4", "0", "9/4", "9/4", "0"})}});

  all.push_back({"w_case2",
                 "joint x,y,y spin observable at the W state",
                 w,
                 xyy,
                 {golden_probs({"5/24", "1/24", "1/24", "5/24", "5/24", "1/24",
                                "1/24", "5/24"}),
                  golden_probs({"1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8"}),
                  golden_probs({"1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8"}),
                  golden_phis({"5/3", "1/3", "1/3", "5/3", "5/3", "1/3", "1/3", "5/3"}),
                  golden_phis({"1", "1", "1", "1", "1", "1", "1", "1"}),
                  golden_phis({"5/3", "1/3", "1/3", "5/3", "5/3", "1/3", "1/3", "5/3"})}});

  all.push_back({"ghz_bipartite",
                 "two-qubit z-spin joint observable, identity on the third "
                 "qubit, at the GHZ state",
                 ghz,
                 zz_embedded,
                 {golden_probs({"1/2", "0", "0", "1/2"}),
                  golden_probs({"1/4", "1/4", "1/4", "1/4"}),
                  golden_probs({"1/4", "1/4", "1/4", "1/4"}),
                  golden_phis({"2", "0", "0", "2"}),
                  golden_phis({"1", "1", "1", "1"}),
                  golden_phis({"2", "0", "0", "2"})}});

  all.push_back({"reduced_ghz_comp",
                 "reduced GHZ state with its computational-basis statistical "
                 "content",
                 rho_prime_comp,
                 zz,
                 {golden_probs({"1/2", "0", "0", "1/2"}),
                  golden_probs({"1/4", "1/4", "1/4", "1/4"}),
                  golden_probs({"1/2", "0", "0", "1/2"}),
                  golden_phis({"2", "0", "0", "2"}),
                  golden_phis({"2", "0", "0", "2"}),
                  golden_phis({"1", "undef", "undef", "1"})}});

  all.push_back({"reduced_ghz_bell",
                 "reduced GHZ state with its Bell-basis statistical content",
                 rho_prime_bell,
                 zz,
                 {golden_probs({"1/2", "0", "0", "1/2"}),
                  golden_probs({"1/4", "1/4", "1/4", "1/4"}),
                  golden_probs({"1/4", "1/4", "1/4", "1/4"}),
                  golden_phis({"2", "0", "0", "2"}),
                  golden_phis({"1", "1", "1", "1"}),
                  golden_phis({"2", "0", "0", "2"})}});

  all.push_back({"w_bipartite",
                 "two-qubit z-spin joint observable, identity on the third "
                 "qubit, at the W state",
                 w,
                 zz_embedded,
                 {golden_probs({"0", "1/3", "1/3", "1/3"}),
                  golden_probs({"1/9", "2/9", "2/9", "4/9"}),
                  golden_probs({"1/9", "2/9", "2/9", "4/9"}),
                  golden_phis({"0", "3/2", "3/2", "3/4"}),
                  golden_phis({"1", "1", "1", "1"}),
                  golden_phis({"0", "3/2", "3/2", "3/4"})}});

  all.push_back({"reduced_w_bell_mix",
                 "reduced W state as the Bell/|11> mixture (2/3, 1/3)",
                 rho_second,
                 zz,
                 {golden_probs({"0", "1/3", "1/3", "1/3"}),
                  golden_probs({"1/9", "2/9", "2/9", "4/9"}),
                  golden_probs({"1/6", "1/6", "1/6", "1/2"}),
                  golden_phis({"0", "3/2", "3/2", "3/4"}),
                  golden_phis({"3/2", "3/4", "3/4", "9/8"}),
                  golden_phis({"0", "2", "2", "2/3"})}});

  return all;
}

/// Looks up a built-in scenario by name.
inline std::optional<Scenario> find_scenario(const std::string& name) {
  for (Scenario& s : builtin_scenarios())
    if (s.name == name) return std::move(s);
  return std::nullopt;
}

}  // namespace qcorr
