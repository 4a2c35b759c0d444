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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcorr/rational.hpp"
#include "qcorr/tensor.hpp"

namespace qcorr {

/// One point of an outcome grid: a label per axis.
using Outcome = std::vector<Rational>;

/// Product outcome set of a joint observable. Labels are exact rationals
/// (+1/2 and -1/2 for spin components) and act as identifiers only.
///
/// Cells enumerate lexicographically, first axis slowest, labels in their
/// stored order. The spin builders list +1/2 before -1/2, which matches the
/// conventional row order of outcome tables.
class OutcomeGrid {
 public:
  explicit OutcomeGrid(std::vector<std::vector<Rational>> axes)
      : axes_(std::move(axes)) {
    if (axes_.empty()) throw std::invalid_argument("OutcomeGrid: no axes");
    for (const auto& axis : axes_) {
      if (axis.empty()) throw std::invalid_argument("OutcomeGrid: empty axis");
      for (std::size_t i = 0; i < axis.size(); ++i)
        for (std::size_t j = i + 1; j < axis.size(); ++j)
          if (axis[i] == axis[j])
            throw std::invalid_argument("OutcomeGrid: duplicate label " +
                                        axis[i].str() + " on one axis");
    }
  }

  /// n axes of {+1/2, -1/2}.
  static OutcomeGrid spin_axes(std::size_t n) {
    std::vector<std::vector<Rational>> axes(
        n, {Rational(1, 2), Rational(-1, 2)});
    return OutcomeGrid(std::move(axes));
  }

  const std::vector<std::vector<Rational>>& axes() const { return axes_; }
  std::size_t num_axes() const { return axes_.size(); }

  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& axis : axes_) n *= axis.size();
    return n;
  }

  std::vector<std::size_t> axis_sizes() const {
    std::vector<std::size_t> sizes;
    for (const auto& axis : axes_) sizes.push_back(axis.size());
    return sizes;
  }

  /// All outcome tuples in enumeration order.
  std::vector<Outcome> outcomes() const {
    const auto sizes = axis_sizes();
    std::vector<Outcome> all;
    all.reserve(size());
    for (std::size_t k = 0; k < size(); ++k) {
      const auto idx = detail::decode_index(k, sizes);
      Outcome tuple;
      tuple.reserve(axes_.size());
      for (std::size_t a = 0; a < axes_.size(); ++a)
        tuple.push_back(axes_[a][idx[a]]);
      all.push_back(std::move(tuple));
    }
    return all;
  }

  /// Enumeration index of a tuple; throws if any label is unknown.
  std::size_t index_of(const Outcome& tuple) const {
    if (tuple.size() != axes_.size())
      throw std::invalid_argument("OutcomeGrid: tuple arity mismatch");
    std::size_t linear = 0;
    for (std::size_t a = 0; a < axes_.size(); ++a) {
      const auto& axis = axes_[a];
      const auto it = std::find(axis.begin(), axis.end(), tuple[a]);
      if (it == axis.end())
        throw std::invalid_argument("OutcomeGrid: label " + tuple[a].str() +
                                    " not on axis " + std::to_string(a + 1));
      linear = linear * axis.size() +
               static_cast<std::size_t>(it - axis.begin());
    }
    return linear;
  }

  friend bool operator==(const OutcomeGrid& a, const OutcomeGrid& b) {
    return a.axes_ == b.axes_;
  }
  friend bool operator!=(const OutcomeGrid& a, const OutcomeGrid& b) {
    return !(a == b);
  }

 private:
  std::vector<std::vector<Rational>> axes_;
};

/// Discrete POV function: positive operators over a labeled outcome grid,
/// summing to the identity. Construction verifies both conditions, so any
/// DiscreteObservable in circulation is a valid observable.
class DiscreteObservable {
 public:
  /// Effects are given in grid enumeration order.
  DiscreteObservable(OutcomeGrid grid, std::vector<ComplexMatrix> effects,
                     DimensionProfile profile)
      : grid_(std::move(grid)),
        effects_(std::move(effects)),
        profile_(std::move(profile)) {
    if (effects_.size() != grid_.size())
      throw std::invalid_argument("DiscreteObservable: effect count " +
                                  std::to_string(effects_.size()) +
                                  " does not match grid size " +
                                  std::to_string(grid_.size()));
    const std::size_t dim = profile_.total_dim();
    const auto probes = probe_vectors(dim);
    ComplexMatrix sum(dim, dim);
    for (const ComplexMatrix& e : effects_) {
      validate_effect(e, dim, probes);
      sum = sum + e;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(dim)) > kTol)
      throw std::invalid_argument("DiscreteObservable: effects do not sum to identity");
  }

  const OutcomeGrid& grid() const { return grid_; }
  const DimensionProfile& profile() const { return profile_; }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }

  const ComplexMatrix& effect(std::size_t index) const {
    return effects_.at(index);
  }
  const ComplexMatrix& effect(const Outcome& tuple) const {
    return effects_[grid_.index_of(tuple)];
  }

  /// True iff every effect is a projection (the observable is sharp).
  bool is_sharp(double tol = kTol) const {
    for (const ComplexMatrix& e : effects_)
      if (!is_projection(e, tol)) return false;
    return true;
  }

 private:
  static void validate_effect(const ComplexMatrix& e, std::size_t dim,
                              const std::vector<std::vector<Complex>>& probes) {
    if (!e.is_square() || e.rows() != dim)
      throw std::invalid_argument("DiscreteObservable: effect dim mismatch");
    if (!is_hermitian(e, kTol))
      throw std::invalid_argument("DiscreteObservable: effect not Hermitian");
    for (std::size_t i = 0; i < dim; ++i) {
      const double d = e(i, i).real();
      if (d < -kTol || d > 1.0 + kTol)
        throw std::invalid_argument("DiscreteObservable: diagonal entry outside [0,1]");
    }
    if (e.max_abs() > 1.0 + kTol)
      throw std::invalid_argument("DiscreteObservable: effect norm exceeds 1");
    for (const auto& probe : probes) {
      const double v = quadratic_form(e, probe).real();
      if (v < -kPositivityTol || v > 1.0 + kPositivityTol)
        throw std::invalid_argument("DiscreteObservable: effect expectation outside [0,1]");
    }
  }

  OutcomeGrid grid_;
  std::vector<ComplexMatrix> effects_;
  DimensionProfile profile_;
};

enum class SpinAxis { x, y, z };

inline SpinAxis spin_axis_from(std::string_view name) {
  if (name == "x") return SpinAxis::x;
  if (name == "y") return SpinAxis::y;
  if (name == "z") return SpinAxis::z;
  throw std::invalid_argument("spin_axis_from: unknown axis '" +
                              std::string(name) + "'");
}

inline std::string to_string(SpinAxis axis) {
  switch (axis) {
    case SpinAxis::x: return "x";
    case SpinAxis::y: return "y";
    case SpinAxis::z: return "z";
  }
  throw std::logic_error("to_string(SpinAxis): bad enum");
}

/// Spectral projector pair (eigenvalue +1/2 first, then -1/2) of a qubit.
using ProjectorPair = std::pair<ComplexMatrix, ComplexMatrix>;

/// Spectral projectors of the spin-1/2 component along the given axis:
///   z: |0><0| and |1><1|
///   x: P with P|0> = P|1> = (|0> + |1>)/2, and 1 - P
///   y: P with P|0> = (|0> + i|1>)/2, P|1> = (-i|0> + |1>)/2, and 1 - P
inline ProjectorPair spin_half(SpinAxis axis) {
  const Complex i{0.0, 1.0};
  switch (axis) {
    case SpinAxis::z:
      return {ComplexMatrix(2, 2, {1, 0, 0, 0}), ComplexMatrix(2, 2, {0, 0, 0, 1})};
    case SpinAxis::x: {
      const ComplexMatrix plus(2, 2, {0.5, 0.5, 0.5, 0.5});
      return {plus, ComplexMatrix::identity(2) - plus};
    }
    case SpinAxis::y: {
      const ComplexMatrix plus(2, 2, {0.5, -0.5 * i, 0.5 * i, 0.5});
      return {plus, ComplexMatrix::identity(2) - plus};
    }
  }
  throw std::logic_error("spin_half: bad enum");
}

/// Joint PV observable of one spin component per qubit: the effect at
/// (eps_1, ..., eps_n) is the Kronecker product of the chosen +1/2 or -1/2
/// projector on each factor. Factors act on distinct slots, so they commute
/// and the product joint always exists. Each pair must be a genuine qubit
/// spectral pair (two 2x2 projections summing to 1); anything else is
/// rejected rather than combined into a sham joint.
inline DiscreteObservable local_joint(const std::vector<ProjectorPair>& factors) {
  if (factors.empty()) throw std::invalid_argument("local_joint: no factors");
  for (const auto& [plus, minus] : factors) {
    if (plus.rows() != 2 || plus.cols() != 2 || minus.rows() != 2 ||
        minus.cols() != 2)
      throw std::invalid_argument("local_joint: factor operators must be 2x2");
    if (!is_projection(plus, kTol) || !is_projection(minus, kTol))
      throw std::invalid_argument("local_joint: factor operator is not a projection");
    if (max_abs_diff(plus + minus, ComplexMatrix::identity(2)) > kTol)
      throw std::invalid_argument("local_joint: factor projectors do not sum to 1");
  }
  const std::size_t n = factors.size();
  const OutcomeGrid grid = OutcomeGrid::spin_axes(n);
  std::vector<ComplexMatrix> effects;
  effects.reserve(grid.size());
  const std::vector<std::size_t> sizes(n, 2);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto choice = detail::decode_index(k, sizes);
    std::vector<ComplexMatrix> parts;
    parts.reserve(n);
    for (std::size_t f = 0; f < n; ++f)
      parts.push_back(choice[f] == 0 ? factors[f].first : factors[f].second);
    effects.push_back(kron(parts));
  }
  return DiscreteObservable(grid, std::move(effects),
                            DimensionProfile::qubits(n));
}

inline DiscreteObservable local_joint(const std::vector<SpinAxis>& axes) {
  std::vector<ProjectorPair> factors;
  factors.reserve(axes.size());
  for (const SpinAxis a : axes) factors.push_back(spin_half(a));
  return local_joint(factors);
}

/// Embeds an observable into a larger tensor space: each effect acts as
/// before on the given slots (1-based, strictly increasing) and as the
/// identity on every other factor. embed(E, [2,2,2], {1,2}) turns a
/// two-qubit joint observable into its three-qubit version E (x) 1.
inline DiscreteObservable embed(const DiscreteObservable& obs,
                                const DimensionProfile& target_profile,
                                const std::vector<std::size_t>& slots) {
  if (slots.size() != obs.profile().factors())
    throw std::invalid_argument("embed: slot count does not match observable factors");
  for (std::size_t i = 1; i < slots.size(); ++i)
    if (slots[i] <= slots[i - 1])
      throw std::invalid_argument("embed: slots must be strictly increasing");
  const std::vector<std::size_t> slots0 =
      detail::checked_factor_set(slots, target_profile, "embed");
  for (std::size_t i = 0; i < slots0.size(); ++i)
    if (target_profile.dims()[slots0[i]] != obs.profile().dims()[i])
      throw std::invalid_argument("embed: slot " + std::to_string(slots0[i] + 1) +
                                  " dim does not match observable factor");

  const auto& tdims = target_profile.dims();
  const auto& odims = obs.profile().dims();
  const std::size_t tdim = target_profile.total_dim();
  std::vector<ComplexMatrix> effects;
  effects.reserve(obs.effects().size());
  for (const ComplexMatrix& e : obs.effects()) {
    ComplexMatrix out(tdim, tdim);
    for (std::size_t r = 0; r < tdim; ++r) {
      const auto r_idx = detail::decode_index(r, tdims);
      for (std::size_t c = 0; c < tdim; ++c) {
        const auto c_idx = detail::decode_index(c, tdims);
        bool off_slot_diagonal = true;
        for (std::size_t f = 0; f < tdims.size() && off_slot_diagonal; ++f)
          if (std::find(slots0.begin(), slots0.end(), f) == slots0.end() &&
              r_idx[f] != c_idx[f])
            off_slot_diagonal = false;
        if (!off_slot_diagonal) continue;
        std::vector<std::size_t> er_idx(slots0.size()), ec_idx(slots0.size());
        for (std::size_t i = 0; i < slots0.size(); ++i) {
          er_idx[i] = r_idx[slots0[i]];
          ec_idx[i] = c_idx[slots0[i]];
        }
        out(r, c) = e(detail::encode_index(er_idx, odims),
                      detail::encode_index(ec_idx, odims));
      }
    }
    effects.push_back(std::move(out));
  }
  return DiscreteObservable(obs.grid(), std::move(effects), target_profile);
}

/// Marginal observable over the kept axes (1-based), axis order preserved:
/// effects are summed over every dropped axis.
inline DiscreteObservable marginal(const DiscreteObservable& obs,
                                   const std::vector<std::size_t>& kept_axes) {
  if (kept_axes.empty()) throw std::invalid_argument("marginal: no axes kept");
  std::vector<std::size_t> kept = kept_axes;
  std::sort(kept.begin(), kept.end());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < 1 || kept[i] > obs.grid().num_axes())
      throw std::out_of_range("marginal: axis index " + std::to_string(kept[i]) +
                              " outside 1.." +
                              std::to_string(obs.grid().num_axes()));
    if (i > 0 && kept[i] == kept[i - 1])
      throw std::invalid_argument("marginal: duplicate axis index");
  }

  std::vector<std::vector<Rational>> new_axes;
  for (const std::size_t a : kept) new_axes.push_back(obs.grid().axes()[a - 1]);
  OutcomeGrid new_grid(std::move(new_axes));

  const std::size_t dim = obs.profile().total_dim();
  std::vector<ComplexMatrix> effects(new_grid.size(), ComplexMatrix(dim, dim));
  const auto all = obs.grid().outcomes();
  for (std::size_t k = 0; k < all.size(); ++k) {
    Outcome reduced;
    reduced.reserve(kept.size());
    for (const std::size_t a : kept) reduced.push_back(all[k][a - 1]);
    const std::size_t target = new_grid.index_of(reduced);
    effects[target] = effects[target] + obs.effect(k);
  }
  return DiscreteObservable(std::move(new_grid), std::move(effects),
                            obs.profile());
}

/// Sufficient comeasurability check: every effect of a commutes with every
/// effect of b within tol. Commuting POV functions always admit the product
/// joint observable; non-commuting pairs are not combined by this library.
inline bool comeasurable(const DiscreteObservable& a, const DiscreteObservable& b,
                         double tol = kTol) {
  if (a.profile() != b.profile())
    throw std::invalid_argument("comeasurable: observables live on different spaces");
  for (const ComplexMatrix& ea : a.effects())
    for (const ComplexMatrix& eb : b.effects())
      if (max_abs_diff(ea * eb, eb * ea) > tol) return false;
  return true;
}

}  // namespace qcorr
