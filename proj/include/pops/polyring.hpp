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

// Dense univariate polynomials over an arbitrary coefficient ring, the
// Euclidean/Bezout chain, quotient rings R[x]/(m) by a monic modulus, and the
// ideal tests at (3, H) used by the irreducibility argument.

#ifndef POPS_POLYRING_HPP
#define POPS_POLYRING_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pops/chart.hpp"
#include "pops/multipoly.hpp"
#include "pops/qpoly.hpp"
#include "pops/ring.hpp"

namespace pops {

template <class R>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit UniPoly(const R& constant) : c_{constant} { trim(); }
  static UniPoly x(int power = 1) {
    std::vector<R> c(power + 1);
    c[power] = R(1);
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : R(); }
  const R& leading() const { return c_.back(); }

  friend UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<R> c(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& p, const UniPoly& q) {
    std::vector<R> c(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(static_cast<int>(k)) - q.coeff(static_cast<int>(k));
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly();
    std::vector<R> c(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (ring::zero(p.c_[i])) continue;
      for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    }
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const R& s, const UniPoly& p) {
    std::vector<R> c(p.c_);
    for (auto& x : c) x = s * x;
    return UniPoly(std::move(c));
  }
  friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.c_ == q.c_; }

 private:
  void trim() {
    while (!c_.empty() && ring::zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

/// p = q*d + r, deg r < deg d. The leading coefficient of d must be a unit.
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> divrem(const UniPoly<R>& p, const UniPoly<R>& d) {
  if (d.is_zero()) throw Error(Errc::DivisionByNonUnit, "division by the zero polynomial");
  if (!ring::unit(d.leading())) throw Error(Errc::NonUnitLeadingCoefficient, "leading coefficient is not a unit");
  int dd = d.degree();
  if (p.degree() < dd) return {UniPoly<R>(), p};
  std::vector<R> r = p.coeffs();
  std::vector<R> q(p.degree() - dd + 1);
  R inv = ring::inv(d.leading());
  const auto& dc = d.coeffs();
  for (int k = p.degree(); k >= dd; --k) {
    if (ring::zero(r[k])) continue;
    R f = r[k] * inv;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * dc[j];
    q[k - dd] = std::move(f);
  }
  r.resize(dd);
  return {UniPoly<R>(std::move(q)), UniPoly<R>(std::move(r))};
}

template <class R>
struct BezoutResult {
  UniPoly<R> gcd;
  UniPoly<R> m;  // coefficient of f
  UniPoly<R> n;  // coefficient of g
};

/// m*f + n*g = gcd, with gcd made monic when its leading coefficient is a unit.
template <class R>
BezoutResult<R> gcd_bezout(const UniPoly<R>& f, const UniPoly<R>& g) {
  UniPoly<R> r0 = f, r1 = g;
  UniPoly<R> m0(R(1)), m1, n0, n1(R(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    UniPoly<R> m2 = m0 - q * m1, n2 = n0 - q * n1;
    r0 = std::move(r1);
    r1 = std::move(r);
    m0 = std::move(m1);
    m1 = std::move(m2);
    n0 = std::move(n1);
    n1 = std::move(n2);
  }
  if (!r0.is_zero() && ring::unit(r0.leading())) {
    R inv = ring::inv(r0.leading());
    r0 = inv * r0;
    m0 = inv * m0;
    n0 = inv * n0;
  }
  return {r0, m0, n0};
}

// Conversions between a coefficient ring and the fraction field Q(c), used to
// invert elements of quotient rings.
template <class R>
struct FracBridge;

template <>
struct FracBridge<RatFun> {
  static RatFun to(const RatFun& x) { return x; }
  static RatFun from(const RatFun& x) { return x; }
};

template <>
struct FracBridge<ChartScalar> {
  static RatFun to(const ChartScalar& x) { return x.to_ratfun(); }
  static ChartScalar from(const RatFun& x) { return ChartScalar::from_ratfun(x); }
};

template <>
struct FracBridge<Rational> {
  static RatFun to(const Rational& x) { return RatFun(x); }
  static Rational from(const RatFun& x) {
    if (x.num().degree() > 0 || x.den().degree() > 0)
      throw Error(Errc::NotLocal, "value " + x.to_string() + " is not a rational constant");
    return x.num().coeff(0) / x.den().coeff(0);
  }
};

/// Monic modulus for quotient rings R[x]/(m).
template <class R>
struct Modulus {
  std::vector<R> coeffs;  // ascending, leading coefficient 1
  std::string var = "x";
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Element of R[x]/(m). A null modulus marks an embedded constant, which lets
/// R(0) and R(1) act as ring constants before a modulus is attached.
template <class R>
class PolyMod {
 public:
  using ModPtr = std::shared_ptr<const Modulus<R>>;

  PolyMod() = default;
  PolyMod(long n) : c_{R(n)} {}  // NOLINT(google-explicit-constructor)
  explicit PolyMod(const R& constant) : c_{constant} {}
  PolyMod(ModPtr mod, std::vector<R> poly) : mod_(std::move(mod)), c_(std::move(poly)) { reduce(); }

  static PolyMod generator(ModPtr mod) { return PolyMod(mod, {R(), R(1)}); }

  const ModPtr& modulus() const { return mod_; }
  /// Coordinates in the basis 1, x, ..., x^(n-1) (padded).
  std::vector<R> coords() const {
    std::vector<R> c = c_;
    if (mod_) c.resize(mod_->degree());
    return c;
  }
  R coord(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : R(); }
  bool is_zero() const {
    for (const auto& x : c_)
      if (!ring::zero(x)) return false;
    return true;
  }

  friend PolyMod operator+(const PolyMod& x, const PolyMod& y) {
    std::vector<R> c(std::max(x.c_.size(), y.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.coord(static_cast<int>(k)) + y.coord(static_cast<int>(k));
    return PolyMod(x.mod_ ? x.mod_ : y.mod_, std::move(c));
  }
  friend PolyMod operator-(const PolyMod& x, const PolyMod& y) {
    std::vector<R> c(std::max(x.c_.size(), y.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.coord(static_cast<int>(k)) - y.coord(static_cast<int>(k));
    return PolyMod(x.mod_ ? x.mod_ : y.mod_, std::move(c));
  }
  friend PolyMod operator*(const PolyMod& x, const PolyMod& y) {
    if (x.c_.empty() || y.c_.empty()) return PolyMod(x.mod_ ? x.mod_ : y.mod_, {});
    std::vector<R> c(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
      if (ring::zero(x.c_[i])) continue;
      for (std::size_t j = 0; j < y.c_.size(); ++j) {
        if (ring::zero(y.c_[j])) continue;
        c[i + j] += x.c_[i] * y.c_[j];
      }
    }
    return PolyMod(x.mod_ ? x.mod_ : y.mod_, std::move(c));
  }
  friend PolyMod operator*(const R& s, const PolyMod& x) {
    std::vector<R> c = x.c_;
    for (auto& v : c) v = s * v;
    return PolyMod(x.mod_, std::move(c));
  }
  PolyMod operator-() const {
    std::vector<R> c = c_;
    for (auto& v : c) v = -v;
    return PolyMod(mod_, std::move(c));
  }
  PolyMod& operator+=(const PolyMod& y) { return *this = *this + y; }
  PolyMod& operator-=(const PolyMod& y) { return *this = *this - y; }
  PolyMod& operator*=(const PolyMod& y) { return *this = *this * y; }
  friend bool operator==(const PolyMod& x, const PolyMod& y) {
    std::size_t n = std::max(x.c_.size(), y.c_.size());
    for (std::size_t k = 0; k < n; ++k)
      if (!(x.coord(static_cast<int>(k)) == y.coord(static_cast<int>(k)))) return false;
    return true;
  }

  /// Inverse via the Bezout identity against the modulus over Q(c).
  PolyMod inverse() const {
    if (!mod_) {
      if (c_.empty()) throw Error(Errc::DivisionByNonUnit, "inverse of zero");
      return PolyMod(ring::inv(c_[0]));
    }
    std::vector<RatFun> xs, ms;
    for (const auto& v : c_) xs.push_back(FracBridge<R>::to(v));
    for (const auto& v : mod_->coeffs) ms.push_back(FracBridge<R>::to(v));
    auto bz = gcd_bezout(UniPoly<RatFun>(ms), UniPoly<RatFun>(xs));
    if (bz.gcd.degree() != 0) throw Error(Errc::DivisionByNonUnit, "element shares a factor with the modulus");
    std::vector<R> inv;
    for (const auto& v : bz.n.coeffs()) inv.push_back(FracBridge<R>::from(v));
    return PolyMod(mod_, std::move(inv));
  }

 private:
  void reduce() {
    while (!c_.empty() && ring::zero(c_.back())) c_.pop_back();
    if (!mod_) return;
    int n = mod_->degree();
    const auto& m = mod_->coeffs;
    for (int k = static_cast<int>(c_.size()) - 1; k >= n; --k) {
      if (ring::zero(c_[k])) continue;
      R t = c_[k];
      for (int j = 0; j < n; ++j)
        if (!ring::zero(m[j])) c_[k - n + j] -= t * m[j];
      c_[k] = R();
    }
    if (static_cast<int>(c_.size()) > n) c_.resize(n);
    while (!c_.empty() && ring::zero(c_.back())) c_.pop_back();
  }

  ModPtr mod_;
  std::vector<R> c_;
};

template <class R>
bool is_zero(const PolyMod<R>& x) {
  return x.is_zero();
}
template <class R>
PolyMod<R> inverse(const PolyMod<R>& x) {
  return x.inverse();
}

/// Solves sum_j x_j * cols[j] = target for x over the fraction field. Every
/// vector has the same length; throws UnsolvableSystem if inconsistent or
/// underdetermined.
std::vector<RatFun> solve_linear(const std::vector<std::vector<RatFun>>& cols, const std::vector<RatFun>& target);

/// Coefficients reduced to {0,1,2} mod 3 (3-integral input); with at_H also
/// substitutes b -> -a^2, i.e. reduces modulo (3, H).
MultiPoly reduce_mod3_and_ideal(const MultiPoly& p, bool at_H = false);
bool in_ideal_3H(const MultiPoly& p);
bool in_ideal_3H_squared(const MultiPoly& p);
/// Eisenstein at (3, H) for a polynomial in main.
bool eisenstein_check(const MultiPoly& f, Var main);

}  // namespace pops

#endif  // POPS_POLYRING_HPP
