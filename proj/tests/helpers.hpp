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

#include <array>
#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "qcorr/qcorr.hpp"

// Test-side utilities. The probability oracle here works straight from state
// amplitudes and hard-coded spin eigenvectors; it never touches effect
// matrices, traces or the library's measurement path, so agreement with
// measure() is evidence, not tautology.
namespace testutil {

using qcorr::Complex;
using Rng = std::mt19937;

inline constexpr unsigned kSeed = 20260815u;

// ---------------------------------------------------------------------------
// Independent probability oracle
// ---------------------------------------------------------------------------

/// Normalized eigenvector of the spin-1/2 component along the given axis,
/// for eigenvalue +1/2 (plus) or -1/2.
inline std::array<Complex, 2> spin_eigvec(qcorr::SpinAxis axis, bool plus) {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  switch (axis) {
    case qcorr::SpinAxis::z:
      return plus ? std::array<Complex, 2>{1.0, 0.0}
                  : std::array<Complex, 2>{0.0, 1.0};
    case qcorr::SpinAxis::x:
      return plus ? std::array<Complex, 2>{r, r} : std::array<Complex, 2>{r, -r};
    case qcorr::SpinAxis::y:
      return plus ? std::array<Complex, 2>{r, r * i}
                  : std::array<Complex, 2>{r, -r * i};
  }
  return {0.0, 0.0};
}

/// Probability of the outcome fixed by plus[a] on slot slots[a] (1-based
/// qubit positions, axes[a] the measured component), identity on the other
/// qubits, by explicit amplitude sums over the computational basis: group
/// amplitudes by the unmeasured digits, project each group on the product
/// eigenvector, add squared magnitudes.
inline double oracle_prob(const std::vector<Complex>& amps, std::size_t n_qubits,
                          const std::vector<std::size_t>& slots,
                          const std::vector<qcorr::SpinAxis>& axes,
                          const std::vector<bool>& plus) {
  std::vector<int> slot_of(n_qubits, -1);
  for (std::size_t a = 0; a < slots.size(); ++a)
    slot_of[slots[a] - 1] = static_cast<int>(a);
  const std::size_t free_qubits = n_qubits - slots.size();
  std::vector<Complex> grouped(std::size_t{1} << free_qubits, Complex{});
  for (std::size_t j = 0; j < amps.size(); ++j) {
    Complex weight = 1.0;
    std::size_t key = 0;
    for (std::size_t q = 0; q < n_qubits; ++q) {
      const std::size_t digit = (j >> (n_qubits - 1 - q)) & 1u;
      if (slot_of[q] >= 0) {
        const auto v =
            spin_eigvec(axes[static_cast<std::size_t>(slot_of[q])],
                        plus[static_cast<std::size_t>(slot_of[q])]);
        weight *= std::conj(v[digit]);
      } else {
        key = key * 2 + digit;
      }
    }
    grouped[key] += weight * amps[j];
  }
  double p = 0.0;
  for (const Complex& g : grouped) p += std::norm(g);
  return p;
}

/// Whole outcome table in the library's enumeration order (+1/2 before -1/2
/// on every axis, first axis slowest) for a weighted mixture of pure states.
inline std::vector<double> oracle_table(
    const std::vector<std::pair<double, std::vector<Complex>>>& mixture,
    std::size_t n_qubits, const std::vector<std::size_t>& slots,
    const std::vector<qcorr::SpinAxis>& axes) {
  const std::size_t n_axes = axes.size();
  std::vector<double> table(std::size_t{1} << n_axes, 0.0);
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::vector<bool> plus(n_axes);
    for (std::size_t a = 0; a < n_axes; ++a)
      plus[a] = ((k >> (n_axes - 1 - a)) & 1u) == 0;
    for (const auto& [w, amps] : mixture)
      table[k] += w * oracle_prob(amps, n_qubits, slots, axes, plus);
  }
  return table;
}

inline std::vector<std::size_t> all_slots(std::size_t n_qubits) {
  std::vector<std::size_t> slots(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) slots[q] = q + 1;
  return slots;
}

inline std::vector<std::pair<double, std::vector<Complex>>> as_mixture(
    const qcorr::StateDecomposition& d) {
  std::vector<std::pair<double, std::vector<Complex>>> mix;
  for (const auto& term : d.terms())
    mix.emplace_back(term.weight, term.state.amplitudes());
  return mix;
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

inline qcorr::PureState random_pure(Rng& rng, std::size_t n_qubits) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (Complex& a : amps) {
      a = Complex(gauss(rng), gauss(rng));
      norm2 += std::norm(a);
    }
  } while (norm2 < 1e-6);
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& a : amps) a *= scale;
  return qcorr::PureState(std::move(amps),
                          qcorr::DimensionProfile::qubits(n_qubits));
}

inline std::vector<qcorr::SpinAxis> random_axes(Rng& rng, std::size_t n) {
  static constexpr qcorr::SpinAxis kAxes[] = {qcorr::SpinAxis::x,
                                              qcorr::SpinAxis::y,
                                              qcorr::SpinAxis::z};
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<qcorr::SpinAxis> axes(n);
  for (auto& a : axes) a = kAxes[pick(rng)];
  return axes;
}

inline qcorr::StateDecomposition random_decomposition(Rng& rng,
                                                      std::size_t n_qubits,
                                                      std::size_t max_terms = 4) {
  std::uniform_int_distribution<std::size_t> n_terms(1, max_terms);
  std::uniform_real_distribution<double> raw_weight(0.1, 1.0);
  const std::size_t n = n_terms(rng);
  std::vector<double> weights(n);
  double total = 0.0;
  for (double& w : weights) {
    w = raw_weight(rng);
    total += w;
  }
  std::vector<qcorr::StateDecomposition::Term> terms;
  terms.reserve(n);
  for (std::size_t m = 0; m < n; ++m)
    terms.push_back({weights[m] / total, random_pure(rng, n_qubits)});
  return qcorr::StateDecomposition(std::move(terms));
}

}  // namespace testutil
