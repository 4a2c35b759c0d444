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

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/observables.hpp"
#include "qcorr/states.hpp"
#include "qcorr/tensor.hpp"

namespace qcorr {

/// A table must account for all probability this closely.
inline constexpr double kNormalizationTol = 1e-10;

/// Outcome distribution over a grid, values in grid enumeration order.
/// Values within kTol outside [0,1] are clamped on construction; anything
/// further out is rejected.
class ProbabilityTable {
 public:
  ProbabilityTable(OutcomeGrid grid, std::vector<double> values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size())
      throw std::invalid_argument("ProbabilityTable: value count " +
                                  std::to_string(values_.size()) +
                                  " does not match grid size " +
                                  std::to_string(grid_.size()));
    double total = 0.0;
    for (double& v : values_) {
      if (v < -kTol || v > 1.0 + kTol)
        throw std::invalid_argument("ProbabilityTable: value " +
                                    std::to_string(v) + " outside [0,1]");
      v = std::min(std::max(v, 0.0), 1.0);
      total += v;
    }
    if (std::abs(total - 1.0) > kNormalizationTol)
      throw std::invalid_argument("ProbabilityTable: values sum to " +
                                  std::to_string(total));
  }

  const OutcomeGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  double value(std::size_t index) const { return values_.at(index); }
  double value(const Outcome& tuple) const {
    return values_[grid_.index_of(tuple)];
  }

 private:
  OutcomeGrid grid_;
  std::vector<double> values_;
};

/// Outcome distribution of an observable at a state: value at xi is
/// Re Tr(E(xi) rho). A residual imaginary part above kPositivityTol means a
/// non-Hermitian input slipped through and is reported as an error.
inline ProbabilityTable measure(const DiscreteObservable& obs,
                                const DensityOperator& rho) {
  if (obs.profile() != rho.profile())
    throw std::invalid_argument("measure: observable and state profiles differ");
  std::vector<double> values;
  values.reserve(obs.effects().size());
  for (const ComplexMatrix& e : obs.effects()) {
    const Complex p = trace(e * rho.matrix());
    if (std::abs(p.imag()) > kPositivityTol)
      throw std::runtime_error("measure: probability has imaginary residue " +
                               std::to_string(p.imag()));
    values.push_back(p.real());
  }
  return ProbabilityTable(obs.grid(), std::move(values));
}

inline ProbabilityTable measure(const DiscreteObservable& obs,
                                const PureState& psi) {
  return measure(obs, density_of(psi));
}

/// Single-axis table obtained by summing out every other axis (axis 1-based).
inline ProbabilityTable marginal_table(const ProbabilityTable& table,
                                       std::size_t axis) {
  const auto& grid = table.grid();
  if (axis < 1 || axis > grid.num_axes())
    throw std::out_of_range("marginal_table: axis " + std::to_string(axis) +
                            " outside 1.." + std::to_string(grid.num_axes()));
  const auto& labels = grid.axes()[axis - 1];
  std::vector<double> values(labels.size(), 0.0);
  const auto outcomes = grid.outcomes();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& label = outcomes[k][axis - 1];
    const auto it = std::find(labels.begin(), labels.end(), label);
    values[static_cast<std::size_t>(it - labels.begin())] += table.value(k);
  }
  return ProbabilityTable(OutcomeGrid({labels}), std::move(values));
}

/// The no-correlation reference: value at a tuple is the product of the
/// per-axis marginal values. Inputs must be single-axis tables.
inline ProbabilityTable product_table(const std::vector<ProbabilityTable>& marginals) {
  if (marginals.empty())
    throw std::invalid_argument("product_table: no marginals");
  std::vector<std::vector<Rational>> axes;
  for (const auto& m : marginals) {
    if (m.grid().num_axes() != 1)
      throw std::invalid_argument("product_table: inputs must be single-axis tables");
    axes.push_back(m.grid().axes()[0]);
  }
  OutcomeGrid grid(std::move(axes));
  const auto sizes = grid.axis_sizes();
  std::vector<double> values;
  values.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto idx = detail::decode_index(k, sizes);
    double p = 1.0;
    for (std::size_t a = 0; a < marginals.size(); ++a)
      p *= marginals[a].value(idx[a]);
    values.push_back(p);
  }
  return ProbabilityTable(std::move(grid), std::move(values));
}

/// Convenience: product of the marginals of a measured table.
inline ProbabilityTable product_of_marginals(const ProbabilityTable& table) {
  std::vector<ProbabilityTable> marginals;
  for (std::size_t a = 1; a <= table.grid().num_axes(); ++a)
    marginals.push_back(marginal_table(table, a));
  return product_table(marginals);
}

/// The classical-only reference for a fixed statistical content: the
/// decomposition-weighted average, over pure members psi_m, of the product
/// of per-axis marginal probabilities at psi_m. Mixing alone produces
/// exactly this much correlation.
inline ProbabilityTable sum_table(const DiscreteObservable& obs,
                                  const StateDecomposition& d) {
  if (obs.profile() != d.profile())
    throw std::invalid_argument("sum_table: observable and state profiles differ");
  const std::size_t n = obs.grid().num_axes();
  std::vector<DiscreteObservable> axis_obs;
  axis_obs.reserve(n);
  for (std::size_t a = 1; a <= n; ++a) axis_obs.push_back(marginal(obs, {a}));

  const auto sizes = obs.grid().axis_sizes();
  std::vector<double> values(obs.grid().size(), 0.0);
  for (const auto& term : d.terms()) {
    std::vector<ProbabilityTable> per_axis;
    per_axis.reserve(n);
    for (const auto& ax : axis_obs) per_axis.push_back(measure(ax, term.state));
    for (std::size_t k = 0; k < values.size(); ++k) {
      const auto idx = detail::decode_index(k, sizes);
      double p = 1.0;
      for (std::size_t a = 0; a < n; ++a) p *= per_axis[a].value(idx[a]);
      values[k] += term.weight * p;
    }
  }
  return ProbabilityTable(obs.grid(), std::move(values));
}

}  // namespace qcorr
