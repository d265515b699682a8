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

// Sparse multivariate Laurent polynomials over Q on a fixed, graded variable
// universe. The unit-tracked denominators of the base ring appear here as
// negative exponents of a and b together with an explicit power of
// D = a^2 - 16b (see LPoly).

#ifndef POPS_MULTIPOLY_HPP
#define POPS_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pops/chart.hpp"
#include "pops/scalar.hpp"

namespace pops {

enum class Var : int {
  a, b, c, d, e, u, v, x, y, alpha, kappa, lambda, h, i, u1, u2, u3,
  Q0x, Q1x, Q2x, Q3x,
  Q0y, Q1y, Q2y, Q3y,
  // QjQk(x), index 4*j + k
  QQ00, QQ01, QQ02, QQ03, QQ10, QQ11, QQ12, QQ13,
  QQ20, QQ21, QQ22, QQ23, QQ30, QQ31, QQ32, QQ33,
  kCount
};

constexpr int kNumVars = static_cast<int>(Var::kCount);

std::string_view var_name(Var v);
int var_weight(Var v);
std::optional<Var> var_from_name(std::string_view name);
inline Var q_of_x(int k) { return static_cast<Var>(static_cast<int>(Var::Q0x) + k); }
inline Var q_of_y(int k) { return static_cast<Var>(static_cast<int>(Var::Q0y) + k); }
inline Var qq_of_x(int j, int k) { return static_cast<Var>(static_cast<int>(Var::QQ00) + 4 * j + k); }
bool is_q_symbol(Var v);

using Monomial = std::array<std::int16_t, kNumVars>;

/// Higher total degree first, then lexicographically larger exponents first.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(long n) : MultiPoly(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(const Rational& q);
  static MultiPoly var(Var v, int power = 1);
  static MultiPoly term(const Monomial& m, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }

  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);
  MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }
  friend bool operator==(const MultiPoly& p, const MultiPoly& q) { return p.terms_ == q.terms_; }

  /// Negative powers are allowed only for unit monomials.
  MultiPoly pow(int n) const;
  bool uses(Var v) const;
  int degree_in(Var v) const;      // max exponent; 0 for the zero polynomial
  int low_degree_in(Var v) const;  // min exponent
  /// Coefficient of v^k as a polynomial in the other variables.
  MultiPoly coeff(Var v, int k) const;
  MultiPoly subs(Var v, const MultiPoly& value) const;
  /// Multiplies by v^k (k may be negative).
  MultiPoly shift(Var v, int k) const;
  MultiPoly map_coefficients(const std::function<Rational(const Rational&)>& fn) const;

  /// Weight shared by every term, or nullopt when inhomogeneous (or zero).
  std::optional<int> graded_degree() const;
  /// A single term with nonzero coefficient.
  bool is_monomial() const { return terms_.size() == 1; }
  /// Every single-term polynomial is a unit of the Laurent ring.
  bool is_unit() const;
  MultiPoly inverse() const;

  /// Flat canonical text, terms in MonomialOrder.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline bool is_unit(const MultiPoly& p) { return p.is_unit(); }
inline MultiPoly inverse(const MultiPoly& p) { return p.inverse(); }

/// Dense view of p as a polynomial in one variable; coefficients[k] holds the
/// coefficient of main^(low + k).
struct UniPolyView {
  Var main = Var::u;
  int low = 0;
  std::vector<MultiPoly> coefficients;

  static UniPolyView of(const MultiPoly& p, Var main);
  MultiPoly to_poly() const;
  int degree() const { return coefficients.empty() ? -1 : low + static_cast<int>(coefficients.size()) - 1; }
};

/// p = q*d + r in the main variable v, with deg_v r < deg_v d. The leading
/// coefficient of d must be a unit monomial.
std::pair<MultiPoly, MultiPoly> divrem(const MultiPoly& p, const MultiPoly& d, Var v);
std::pair<UniPolyView, UniPolyView> divrem(const UniPolyView& p, const UniPolyView& d);

/// The discriminant factor a^2 - 16b.
MultiPoly disc_poly();
/// Exact division by a^2 - 16b; false when it does not divide.
bool exact_div_disc(const MultiPoly& p, MultiPoly& quotient);

/// num / (a^2 - 16b)^disc in lowest terms.
class LPoly {
 public:
  LPoly() = default;
  LPoly(long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  explicit LPoly(MultiPoly num, int disc = 0);

  const MultiPoly& num() const { return num_; }
  int disc() const { return disc_; }
  bool is_zero() const { return num_.is_zero(); }

  friend LPoly operator+(const LPoly& x, const LPoly& y);
  friend LPoly operator-(const LPoly& x, const LPoly& y);
  friend LPoly operator*(const LPoly& x, const LPoly& y);
  LPoly operator-() const { return LPoly(-num_, disc_); }
  friend bool operator==(const LPoly& x, const LPoly& y) = default;

  LPoly coeff(Var v, int k) const { return LPoly(num_.coeff(v, k), disc_); }
  /// Reduction modulo a polynomial m whose leading coefficient in v is a unit.
  LPoly reduce_mod(const MultiPoly& m, Var v) const;
  LPoly subs(Var v, const MultiPoly& value) const { return LPoly(num_.subs(v, value), disc_); }
  std::optional<int> graded_degree() const;

  /// Content-factored canonical text.
  std::string to_string() const;

 private:
  void canonicalize();
  MultiPoly num_;
  int disc_ = 0;
};

/// General quotient num/den; equality by cross multiplication.
class Fraction {
 public:
  Fraction() : den_(1) {}
  Fraction(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Fraction(MultiPoly num, MultiPoly den = MultiPoly(1));
  explicit Fraction(const LPoly& p);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend Fraction operator+(const Fraction& x, const Fraction& y);
  friend Fraction operator-(const Fraction& x, const Fraction& y);
  friend Fraction operator*(const Fraction& x, const Fraction& y);
  friend Fraction operator/(const Fraction& x, const Fraction& y);
  Fraction operator-() const { return Fraction(-num_, den_); }
  Fraction pow(int n) const;
  friend bool operator==(const Fraction& x, const Fraction& y);

  /// Succeeds when the denominator is a unit monomial times a power of D.
  std::optional<LPoly> to_lpoly() const;
  std::string to_string() const;

 private:
  void normalize();
  MultiPoly num_;
  MultiPoly den_;
};

/// Parses +, -, *, /, ^ (signed integer exponents), parentheses, juxtaposition,
/// integer literals and the variable names of var_name (ASCII or Greek).
/// Throws ParseError.
Fraction parse_expression(std::string_view text);

/// Rewrites a chart element of the given weight back to the graded ring:
/// c -> a, with b-powers restoring the weight, (c^2-16) -> D. Throws
/// ReductionMismatch when the weight parity is impossible.
LPoly rehomogenize(const ChartScalar& x, int weight);
/// Chart specialization a = c, b = 1 of a coefficient free of other variables.
ChartScalar to_chart(const LPoly& p);
/// Chart images of the coefficients of p as a polynomial in main.
std::vector<ChartScalar> chart_coeffs(const LPoly& p, Var main);
/// Inverse of chart_coeffs for a homogeneous polynomial of the given weight.
LPoly rehomogenize_poly(const std::vector<ChartScalar>& coeffs, Var main, int weight);

}  // namespace pops

#endif  // POPS_MULTIPOLY_HPP
