// Copyright 2026 The power-ops Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Elements of the degree-0 chart a = c, b = 1 of the graded base ring:
// Q[c] localized at c and c^2 - 16. Homogeneous elements of known weight are
// determined by their chart image, which is how most S-level objects in this
// library are computed (see rehomogenize in multipoly.hpp).

#ifndef POPS_CHART_HPP
#define POPS_CHART_HPP

#include <string>

#include "pops/qpoly.hpp"

namespace pops {

/// num / (c^c_exp * (c^2 - 16)^disc_exp) in lowest terms.
class ChartScalar {
 public:
  ChartScalar() = default;
  ChartScalar(long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  explicit ChartScalar(Rational q) : num_(std::move(q)) {}
  explicit ChartScalar(QPoly num, int c_exp = 0, int disc_exp = 0);

  /// Throws NotLocal when the denominator has other factors.
  static ChartScalar from_ratfun(const RatFun& r);
  static ChartScalar c() { return ChartScalar(QPoly::x()); }

  const QPoly& num() const { return num_; }
  int c_exp() const { return c_exp_; }
  int disc_exp() const { return disc_exp_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Units are const * c^k * (c^2-16)^m.
  bool is_unit() const;
  ChartScalar inverse() const;
  RatFun to_ratfun() const;

  friend ChartScalar operator+(const ChartScalar& x, const ChartScalar& y);
  friend ChartScalar operator-(const ChartScalar& x, const ChartScalar& y);
  friend ChartScalar operator*(const ChartScalar& x, const ChartScalar& y);
  ChartScalar operator-() const;
  ChartScalar& operator+=(const ChartScalar& y) { return *this = *this + y; }
  ChartScalar& operator-=(const ChartScalar& y) { return *this = *this - y; }
  ChartScalar& operator*=(const ChartScalar& y) { return *this = *this * y; }
  friend bool operator==(const ChartScalar& x, const ChartScalar& y) = default;

  std::string to_string() const;

 private:
  void canonicalize();
  QPoly num_;
  int c_exp_ = 0;
  int disc_exp_ = 0;
};

inline bool is_zero(const ChartScalar& x) { return x.is_zero(); }
inline bool is_unit(const ChartScalar& x) { return x.is_unit(); }
inline ChartScalar inverse(const ChartScalar& x) { return x.inverse(); }

/// p * (c^2 - 16)^k.
QPoly mul_disc(const QPoly& p, int k = 1);
/// Exact quotient by c^2 - 16, or nullopt-like false return when not divisible.
bool div_disc(const QPoly& p, QPoly& quotient);

}  // namespace pops

#endif  // POPS_CHART_HPP
