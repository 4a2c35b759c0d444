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

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/probability.hpp"

namespace qcorr {

/// Below this mass a probability cell counts as off-support.
inline constexpr double kSupportTol = 1e-12;

/// Default tolerance for the constancy test; looser than kTol because the
/// pointwise division amplifies arithmetic noise.
inline constexpr double kConstancyTol = 1e-9;

/// Pointwise ratio of two outcome distributions. A cell is UNDEFINED
/// (nullopt) where both numerator and denominator vanish; such cells are
/// excluded from the constancy and product-rule tests instead of being
/// assigned a convention. Defined values are nonnegative reals and routinely
/// exceed 1: a value above 1 marks an outcome the joint distribution favors
/// over the reference, below 1 one it suppresses.
class CorrelationTable {
 public:
  CorrelationTable(OutcomeGrid grid, std::vector<std::optional<double>> cells)
      : grid_(std::move(grid)), cells_(std::move(cells)) {
    if (cells_.size() != grid_.size())
      throw std::invalid_argument("CorrelationTable: cell count does not match grid");
    for (const auto& c : cells_)
      if (c && *c < 0.0)
        throw std::invalid_argument("CorrelationTable: negative value");
  }

  const OutcomeGrid& grid() const { return grid_; }
  const std::vector<std::optional<double>>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  bool defined(std::size_t index) const { return cells_.at(index).has_value(); }
  double value(std::size_t index) const {
    const auto& c = cells_.at(index);
    if (!c)
      throw std::domain_error("CorrelationTable: cell " + std::to_string(index) +
                              " is undefined (0/0)");
    return *c;
  }
  const std::optional<double>& cell(const Outcome& tuple) const {
    return cells_[grid_.index_of(tuple)];
  }

  std::size_t defined_count() const {
    std::size_t n = 0;
    for (const auto& c : cells_) n += c.has_value() ? 1 : 0;
    return n;
  }

 private:
  OutcomeGrid grid_;
  std::vector<std::optional<double>> cells_;
};

namespace detail {

inline CorrelationTable ratio_table(const ProbabilityTable& numerator,
                                    const ProbabilityTable& denominator,
                                    const char* who) {
  if (numerator.grid() != denominator.grid())
    throw std::invalid_argument(std::string(who) + ": grids differ");
  std::vector<std::optional<double>> cells;
  cells.reserve(numerator.size());
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    const double num = numerator.value(k);
    const double den = denominator.value(k);
    if (den < kSupportTol) {
      if (num >= kSupportTol)
        throw std::runtime_error(
            std::string(who) + ": numerator carries mass " +
            std::to_string(num) + " at cell " + std::to_string(k) +
            " where the reference distribution vanishes");
      cells.push_back(std::nullopt);
    } else {
      cells.push_back(num / den);
    }
  }
  return CorrelationTable(numerator.grid(), std::move(cells));
}

}  // namespace detail

/// Total correlation: measured joint over product of marginals. Constant 1
/// iff the observables are independent at the state.
inline CorrelationTable total_correlation(const ProbabilityTable& joint,
                                          const ProbabilityTable& product) {
  return detail::ratio_table(joint, product, "total_correlation");
}

/// Classical correlation: sum probability function over product of
/// marginals. Describes the correlation contributed by the mixing weights of
/// the chosen statistical content alone.
inline CorrelationTable classical_correlation(const ProbabilityTable& sum,
                                              const ProbabilityTable& product) {
  return detail::ratio_table(sum, product, "classical_correlation");
}

/// Quantum correlation: measured joint over sum probability function.
/// Whatever correlation mixing cannot explain is quantum.
inline CorrelationTable quantum_correlation(const ProbabilityTable& joint,
                                            const ProbabilityTable& sum) {
  return detail::ratio_table(joint, sum, "quantum_correlation");
}

/// Checks the product rule phi_t = phi_c * phi_q on every cell where all
/// three tables are defined.
inline bool product_rule_check(const CorrelationTable& total,
                               const CorrelationTable& classical,
                               const CorrelationTable& quantum, double tol) {
  if (total.grid() != classical.grid() || total.grid() != quantum.grid())
    throw std::invalid_argument("product_rule_check: grids differ");
  for (std::size_t k = 0; k < total.size(); ++k) {
    if (!total.defined(k) || !classical.defined(k) || !quantum.defined(k))
      continue;
    if (std::abs(total.value(k) - classical.value(k) * quantum.value(k)) > tol)
      return false;
  }
  return true;
}

/// The presence criterion: quantum correlation is present iff phi_q is not
/// constant over its defined cells. Throws if every cell is undefined.
inline bool is_quantum_correlated(const CorrelationTable& q,
                                  double tol = kConstancyTol) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (!q.defined(k)) continue;
    lo = std::min(lo, q.value(k));
    hi = std::max(hi, q.value(k));
  }
  if (!(lo <= hi))
    throw std::domain_error("is_quantum_correlated: every cell is undefined");
  return hi - lo > tol;
}

}  // namespace qcorr
