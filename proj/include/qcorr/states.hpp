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

#include "qcorr/tensor.hpp"

namespace qcorr {

/// Normalized state vector on a tensor-product space.
class PureState {
 public:
  PureState(std::vector<Complex> amplitudes, DimensionProfile profile)
      : amplitudes_(std::move(amplitudes)), profile_(std::move(profile)) {
    if (amplitudes_.size() != profile_.total_dim())
      throw std::invalid_argument(
          "PureState: amplitude count " + std::to_string(amplitudes_.size()) +
          " does not match profile dim " + std::to_string(profile_.total_dim()));
    double norm2 = 0.0;
    for (const Complex& a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > kTol)
      throw std::invalid_argument("PureState: vector not normalized (|psi|^2 = " +
                                  std::to_string(norm2) + ")");
  }

  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  const DimensionProfile& profile() const { return profile_; }
  std::size_t dim() const { return amplitudes_.size(); }

  /// |psi><psi| as a matrix.
  ComplexMatrix projector() const {
    ComplexMatrix p(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        p(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    return p;
  }

 private:
  std::vector<Complex> amplitudes_;
  DimensionProfile profile_;
};

/// A mixed state with explicit statistical content: weighted pure states.
/// Two decompositions may share one density matrix yet carry different
/// classical correlation, so the decomposition itself is the value.
class StateDecomposition {
 public:
  struct Term {
    double weight;
    PureState state;
  };

  explicit StateDecomposition(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty())
      throw std::invalid_argument("StateDecomposition: no terms");
    double total = 0.0;
    for (const Term& t : terms_) {
      if (t.weight < 0.0)
        throw std::invalid_argument("StateDecomposition: negative weight");
      if (t.state.profile() != terms_.front().state.profile())
        throw std::invalid_argument("StateDecomposition: mixed profiles");
      total += t.weight;
    }
    if (std::abs(total - 1.0) > kTol)
      throw std::invalid_argument("StateDecomposition: weights sum to " +
                                  std::to_string(total));
  }

  /// The trivial single-term mixture of a pure state.
  static StateDecomposition pure(PureState state) {
    return StateDecomposition({Term{1.0, std::move(state)}});
  }

  const std::vector<Term>& terms() const { return terms_; }
  const DimensionProfile& profile() const { return terms_.front().state.profile(); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<Term> terms_;
};

/// Density matrix with its tensor-product structure. Construction checks
/// hermiticity, unit trace and probe-set positivity.
class DensityOperator {
 public:
  DensityOperator(ComplexMatrix matrix, DimensionProfile profile)
      : matrix_(std::move(matrix)), profile_(std::move(profile)) {
    if (!matrix_.is_square() || matrix_.rows() != profile_.total_dim())
      throw std::invalid_argument("DensityOperator: matrix dim does not match profile");
    if (!is_hermitian(matrix_, kTol))
      throw std::invalid_argument("DensityOperator: matrix not Hermitian");
    const Complex tr = trace(matrix_);
    if (std::abs(tr - Complex{1.0, 0.0}) > kTol)
      throw std::invalid_argument("DensityOperator: trace != 1");
    for (const auto& probe : probe_vectors(matrix_.rows()))
      if (quadratic_form(matrix_, probe).real() < -kPositivityTol)
        throw std::invalid_argument("DensityOperator: negative on probe vector");
  }

  const ComplexMatrix& matrix() const { return matrix_; }
  const DimensionProfile& profile() const { return profile_; }

 private:
  ComplexMatrix matrix_;
  DimensionProfile profile_;
};

/// Sum of weight * |psi><psi| over the decomposition.
inline DensityOperator density_of(const StateDecomposition& d) {
  const std::size_t dim = d.profile().total_dim();
  ComplexMatrix rho(dim, dim);
  for (const auto& term : d.terms())
    rho = rho + term.weight * term.state.projector();
  return DensityOperator(std::move(rho), d.profile());
}

inline DensityOperator density_of(const PureState& psi) {
  return DensityOperator(psi.projector(), psi.profile());
}

/// (|000> - |111>)/sqrt(2).
inline PureState make_ghz() {
  std::vector<Complex> amp(8);
  const double r = 1.0 / std::sqrt(2.0);
  amp[0] = r;
  amp[7] = -r;
  return PureState(std::move(amp), DimensionProfile::qubits(3));
}

/// (|011> + |101> + |110>)/sqrt(3).
inline PureState make_w() {
  std::vector<Complex> amp(8);
  const double r = 1.0 / std::sqrt(3.0);
  amp[3] = r;
  amp[5] = r;
  amp[6] = r;
  return PureState(std::move(amp), DimensionProfile::qubits(3));
}

/// Bell basis, indexed 1..4:
///   B1 = (|00> + |11>)/sqrt(2)   B2 = (|00> - |11>)/sqrt(2)
///   B3 = (|01> + |10>)/sqrt(2)   B4 = (|01> - |10>)/sqrt(2)
inline PureState make_bell(int k) {
  std::vector<Complex> amp(4);
  const double r = 1.0 / std::sqrt(2.0);
  switch (k) {
    case 1: amp[0] = r; amp[3] = r; break;
    case 2: amp[0] = r; amp[3] = -r; break;
    case 3: amp[1] = r; amp[2] = r; break;
    case 4: amp[1] = r; amp[2] = -r; break;
    default:
      throw std::out_of_range("make_bell: index " + std::to_string(k) +
                              " outside 1..4");
  }
  return PureState(std::move(amp), DimensionProfile::qubits(2));
}

/// Computational basis state |labels[0] labels[1] ...>; each label is the
/// basis index within its factor (0-based, < factor dim).
inline PureState basis_state(const DimensionProfile& profile,
                             const std::vector<std::size_t>& labels) {
  if (labels.size() != profile.factors())
    throw std::invalid_argument("basis_state: label count does not match profile");
  for (std::size_t f = 0; f < labels.size(); ++f)
    if (labels[f] >= profile.dims()[f])
      throw std::out_of_range("basis_state: label " + std::to_string(labels[f]) +
                              " outside factor " + std::to_string(f + 1));
  std::vector<Complex> amp(profile.total_dim());
  amp[detail::encode_index(labels, profile.dims())] = 1.0;
  return PureState(std::move(amp), profile);
}

/// Partial trace over the given factors (1-based); remaining factors keep
/// their original order.
inline DensityOperator reduce(const DensityOperator& rho,
                              const std::vector<std::size_t>& traced_factors) {
  const ComplexMatrix reduced =
      partial_trace(rho.matrix(), rho.profile(), traced_factors);
  const std::vector<std::size_t> traced =
      detail::checked_factor_set(traced_factors, rho.profile(), "reduce");
  std::vector<std::size_t> kept_dims;
  for (std::size_t f = 0; f < rho.profile().factors(); ++f)
    if (std::find(traced.begin(), traced.end(), f) == traced.end())
      kept_dims.push_back(rho.profile().dims()[f]);
  if (kept_dims.empty())
    throw std::invalid_argument("reduce: cannot trace out every factor");
  return DensityOperator(reduced, DimensionProfile(kept_dims));
}

inline DensityOperator reduce(const PureState& psi,
                              const std::vector<std::size_t>& traced_factors) {
  return reduce(density_of(psi), traced_factors);
}

inline DensityOperator reduce(const StateDecomposition& d,
                              const std::vector<std::size_t>& traced_factors) {
  return reduce(density_of(d), traced_factors);
}

}  // namespace qcorr
