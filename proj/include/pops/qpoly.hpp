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

// Dense univariate polynomials over Q and the rational function field Q(c).
// These carry the degree-0 chart computations, where every homogeneous
// element of the graded base ring becomes a function of the single
// parameter c.

#ifndef POPS_QPOLY_HPP
#define POPS_QPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "pops/scalar.hpp"

namespace pops {

class QPoly {
 public:
  QPoly() = default;
  QPoly(long n) : QPoly(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  explicit QPoly(Rational q);
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly x(int power = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return c_.back(); }
  /// Largest k with x^k dividing this (0 for the zero polynomial).
  int low_degree() const;

  Rational eval(const Rational& x) const;
  QPoly derivative() const;
  QPoly monic() const;
  QPoly shift_down(int k) const;  // divide by x^k, exact
  QPoly shift_up(int k) const;

  friend QPoly operator+(const QPoly& p, const QPoly& q);
  friend QPoly operator-(const QPoly& p, const QPoly& q);
  friend QPoly operator*(const QPoly& p, const QPoly& q);
  friend QPoly operator*(const Rational& s, const QPoly& p);
  QPoly operator-() const;
  friend bool operator==(const QPoly& p, const QPoly& q) { return p.c_ == q.c_; }

  std::string to_string(const std::string& var = "c") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// p = q*d + r with deg r < deg d. d must be nonzero.
std::pair<QPoly, QPoly> divrem(const QPoly& p, const QPoly& d);
/// Monic gcd (zero if both inputs are zero).
QPoly gcd(QPoly p, QPoly q);

/// num/den in lowest terms with monic denominator.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFun(Rational q) : num_(std::move(q)), den_(1) {}
  explicit RatFun(QPoly num) : num_(std::move(num)), den_(1) {}
  RatFun(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFun inverse() const;

  friend RatFun operator+(const RatFun& x, const RatFun& y);
  friend RatFun operator-(const RatFun& x, const RatFun& y);
  friend RatFun operator*(const RatFun& x, const RatFun& y);
  friend RatFun operator/(const RatFun& x, const RatFun& y) { return x * y.inverse(); }
  RatFun operator-() const;
  RatFun& operator+=(const RatFun& y) { return *this = *this + y; }
  RatFun& operator-=(const RatFun& y) { return *this = *this - y; }
  RatFun& operator*=(const RatFun& y) { return *this = *this * y; }
  friend bool operator==(const RatFun& x, const RatFun& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

  std::string to_string(const std::string& var = "c") const;

 private:
  struct Reduced {};
  // num/den already coprime with den monic.
  RatFun(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const RatFun& x) { return x.is_zero(); }
inline bool is_unit(const RatFun& x) { return !x.is_zero(); }
inline RatFun inverse(const RatFun& x) { return x.inverse(); }

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_unit(const Rational& q) { return q != 0; }
inline Rational inverse(const Rational& q) {
  if (q == 0) throw Error(Errc::DivisionByNonUnit, "division by zero");
  return 1 / q;
}

}  // namespace pops

#endif  // POPS_QPOLY_HPP
