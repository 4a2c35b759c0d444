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
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

/// Arithmetic comparison tolerance. All reference values in this library are
/// small exact rationals, so double precision leaves plenty of headroom.
inline constexpr double kTol = 1e-12;

/// Slack allowed below zero when probing operator positivity.
inline constexpr double kPositivityTol = 1e-10;

/// Ordered factor dimensions of a tensor-product space, e.g. {2,2,2} for
/// three qubits. Factor 1 is the leftmost tensor slot; the composite basis
/// index is big-endian (|011> has index 3).
class DimensionProfile {
 public:
  DimensionProfile() = default;

  explicit DimensionProfile(std::vector<std::size_t> dims)
      : dims_(std::move(dims)) {
    if (dims_.empty())
      throw std::invalid_argument("DimensionProfile: no factors");
    for (const std::size_t d : dims_)
      if (d < 1) throw std::invalid_argument("DimensionProfile: factor dim < 1");
  }

  DimensionProfile(std::initializer_list<std::size_t> dims)
      : DimensionProfile(std::vector<std::size_t>(dims)) {}

  static DimensionProfile qubits(std::size_t n) {
    return DimensionProfile(std::vector<std::size_t>(n, 2));
  }

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t factors() const { return dims_.size(); }

  std::size_t total_dim() const {
    std::size_t d = 1;
    for (const std::size_t f : dims_) d *= f;
    return d;
  }

  friend bool operator==(const DimensionProfile& a, const DimensionProfile& b) {
    return a.dims_ == b.dims_;
  }
  friend bool operator!=(const DimensionProfile& a, const DimensionProfile& b) {
    return !(a == b);
  }

 private:
  std::vector<std::size_t> dims_;
};

/// Dense complex matrix, row-major. The workhorse for operators, projectors
/// and density matrices; everything here lives at dimension <= 8, so no
/// sparsity or blocking.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("ComplexMatrix: entry count " +
                                  std::to_string(entries_.size()) +
                                  " does not match " + std::to_string(rows_) +
                                  "x" + std::to_string(cols_));
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  /// Max absolute entry (the ||.||_max norm used for all checks).
  double max_abs() const {
    double m = 0.0;
    for (const Complex& e : entries_) m = std::max(m, std::abs(e));
    return m;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_shape(a, b, "operator+");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
      out.entries_[i] += b.entries_[i];
    return out;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_shape(a, b, "operator-");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
      out.entries_[i] -= b.entries_[i];
    return out;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("operator*: inner dimensions differ (" +
                                  shape_str(a) + " vs " + shape_str(b) + ")");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend ComplexMatrix operator*(const Complex& s, const ComplexMatrix& a) {
    ComplexMatrix out = a;
    for (Complex& e : out.entries_) e *= s;
    return out;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const Complex& s) {
    return s * a;
  }

 private:
  static std::string shape_str(const ComplexMatrix& m) {
    return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
  }
  static void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                               const char* op) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument(std::string(op) + ": shape mismatch (" +
                                  shape_str(a) + " vs " + shape_str(b) + ")");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                         double tol = kTol) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         max_abs_diff(a, b) <= tol;
}

namespace detail {

/// Big-endian strides: factor 1 varies slowest.
inline std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t f = dims.size(); f-- > 1;)
    strides[f - 1] = strides[f] * dims[f];
  return strides;
}

inline std::vector<std::size_t> decode_index(std::size_t linear,
                                             const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t f = dims.size(); f-- > 0;) {
    idx[f] = linear % dims[f];
    linear /= dims[f];
  }
  return idx;
}

inline std::size_t encode_index(const std::vector<std::size_t>& idx,
                                const std::vector<std::size_t>& dims) {
  std::size_t linear = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) linear = linear * dims[f] + idx[f];
  return linear;
}

/// Validates a set of 1-based factor indices against a profile and returns
/// them sorted, duplicate-free and converted to 0-based.
inline std::vector<std::size_t> checked_factor_set(
    const std::vector<std::size_t>& factors, const DimensionProfile& profile,
    const char* who) {
  if (factors.empty())
    throw std::invalid_argument(std::string(who) + ": empty factor set");
  std::vector<std::size_t> sorted = factors;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > profile.factors())
      throw std::out_of_range(std::string(who) + ": factor index " +
                              std::to_string(sorted[i]) + " outside 1.." +
                              std::to_string(profile.factors()));
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument(std::string(who) + ": duplicate factor index " +
                                  std::to_string(sorted[i]));
  }
  for (std::size_t& f : sorted) --f;
  return sorted;
}

}  // namespace detail

/// Kronecker product; dimensions multiply.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

/// Kronecker chain, left to right.
inline ComplexMatrix kron(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("kron: empty factor list");
  ComplexMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

inline Complex trace(const ComplexMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("trace: matrix must be square (got " +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + ")");
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// Partial trace over the given factors (1-based). Remaining factors keep
/// their original order.
inline ComplexMatrix partial_trace(const ComplexMatrix& a,
                                   const DimensionProfile& profile,
                                   const std::vector<std::size_t>& traced_factors) {
  if (!a.is_square())
    throw std::invalid_argument("partial_trace: matrix must be square");
  if (a.rows() != profile.total_dim())
    throw std::invalid_argument("partial_trace: matrix dim " +
                                std::to_string(a.rows()) +
                                " does not match profile dim " +
                                std::to_string(profile.total_dim()));
  const std::vector<std::size_t> traced =
      detail::checked_factor_set(traced_factors, profile, "partial_trace");

  const std::vector<std::size_t>& dims = profile.dims();
  std::vector<std::size_t> kept;
  for (std::size_t f = 0; f < dims.size(); ++f)
    if (std::find(traced.begin(), traced.end(), f) == traced.end())
      kept.push_back(f);

  std::vector<std::size_t> kept_dims, traced_dims;
  for (const std::size_t f : kept) kept_dims.push_back(dims[f]);
  for (const std::size_t f : traced) traced_dims.push_back(dims[f]);
  const std::size_t kept_total =
      std::accumulate(kept_dims.begin(), kept_dims.end(), std::size_t{1},
                      std::multiplies<>());
  const std::size_t traced_total =
      std::accumulate(traced_dims.begin(), traced_dims.end(), std::size_t{1},
                      std::multiplies<>());

  ComplexMatrix out(kept_total, kept_total);
  std::vector<std::size_t> row_idx(dims.size()), col_idx(dims.size());
  for (std::size_t rk = 0; rk < kept_total; ++rk) {
    const auto rk_idx = detail::decode_index(rk, kept_dims);
    for (std::size_t ck = 0; ck < kept_total; ++ck) {
      const auto ck_idx = detail::decode_index(ck, kept_dims);
      Complex acc = 0.0;
      for (std::size_t t = 0; t < traced_total; ++t) {
        const auto t_idx = detail::decode_index(t, traced_dims);
        for (std::size_t i = 0; i < kept.size(); ++i) {
          row_idx[kept[i]] = rk_idx[i];
          col_idx[kept[i]] = ck_idx[i];
        }
        for (std::size_t i = 0; i < traced.size(); ++i) {
          row_idx[traced[i]] = t_idx[i];
          col_idx[traced[i]] = t_idx[i];
        }
        acc += a(detail::encode_index(row_idx, dims),
                 detail::encode_index(col_idx, dims));
      }
      out(rk, ck) = acc;
    }
  }
  return out;
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = kTol) {
  if (!a.is_square()) return false;
  return max_abs_diff(a, a.adjoint()) <= tol;
}

/// True iff a is Hermitian and idempotent within tol (both in ||.||_max).
inline bool is_projection(const ComplexMatrix& a, double tol = kTol) {
  if (!a.is_square())
    throw std::invalid_argument("is_projection: matrix must be square");
  if (!is_hermitian(a, tol)) return false;
  return max_abs_diff(a * a, a) <= tol;
}

/// <v|M|v> for a square matrix and a vector of matching length.
inline Complex quadratic_form(const ComplexMatrix& m, const std::vector<Complex>& v) {
  if (!m.is_square() || m.rows() != v.size())
    throw std::invalid_argument("quadratic_form: dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      acc += std::conj(v[i]) * m(i, j) * v[j];
  return acc;
}

/// Fixed probe set for positivity checks: the computational basis plus all
/// two-element uniform superpositions (e_i +- e_j)/sqrt(2), (e_i +- i e_j)/sqrt(2).
/// Enough to catch construction bugs at dimension <= 8; not a spectral proof.
inline std::vector<std::vector<Complex>> probe_vectors(std::size_t dim) {
  std::vector<std::vector<Complex>> probes;
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Complex> e(dim);
    e[i] = 1.0;
    probes.push_back(e);
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (const Complex phase : {Complex{1, 0}, Complex{-1, 0}, Complex{0, 1},
                                  Complex{0, -1}}) {
        std::vector<Complex> v(dim);
        v[i] = r;
        v[j] = r * phase;
        probes.push_back(std::move(v));
      }
  return probes;
}

}  // namespace qcorr
