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
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcorr {

/// Exact rational number with reduced terms and the sign carried by the
/// numerator. Used for outcome labels and for golden-table fixtures; state
/// and operator arithmetic stays in floating point.
class Rational {
 public:
  Rational() = default;

  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  explicit Rational(long long num) : num_(num) {}

  /// Parses "5/24", "-1/2", "3"; throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text) {
    const auto bad = [&] {
      return std::invalid_argument("Rational: cannot parse '" +
                                   std::string(text) + "'");
    };
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const auto to_ll = [&](std::string_view part) {
      std::string buf(part);
      char* end = nullptr;
      const long long v = std::strtoll(buf.c_str(), &end, 10);
      if (end != buf.c_str() + buf.size() || buf.empty()) throw bad();
      return v;
    };
    if (slash == std::string_view::npos) return Rational(to_ll(text));
    return Rational(to_ll(text.substr(0, slash)), to_ll(text.substr(slash + 1)));
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  double value() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

/// Nearest rational with denominator <= max_den (continued-fraction walk),
/// or nullopt if no such fraction lands within tol of x. Display aid for
/// diffing computed tables against exact references.
inline std::optional<Rational> snap_to_rational(double x, long long max_den = 64,
                                                double tol = 1e-9) {
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double floor_f = std::floor(frac);
    const auto a = static_cast<long long>(floor_f);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double rem = frac - floor_f;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  const Rational guess(p1, q1);
  if (std::abs(guess.value() - x) <= tol) return guess;
  return std::nullopt;
}

}  // namespace qcorr
