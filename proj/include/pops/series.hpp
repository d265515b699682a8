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

// Truncated power series with per-object validity orders, and Laurent series
// over finite-precision 3-adic Gaussian integers.

#ifndef POPS_SERIES_HPP
#define POPS_SERIES_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pops/error.hpp"
#include "pops/ring.hpp"
#include "pops/scalar.hpp"

namespace pops {

/// sum_k c_k t^k, known exactly through t^order. kExact marks polynomials.
template <class R>
class TruncSeries {
 public:
  static constexpr int kExact = 1 << 28;

  TruncSeries() = default;
  TruncSeries(std::vector<R> coeffs, int order) : c_(std::move(coeffs)), order_(order) { trim(); }
  static TruncSeries constant(const R& r, int order = kExact) { return TruncSeries({r}, order); }
  static TruncSeries variable(int order = kExact) { return TruncSeries({R(), R(1)}, order); }

  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  const std::vector<R>& coeffs() const { return c_; }
  /// Coefficient of t^k; throws TruncationInsufficient beyond the known order.
  R coeff(int k) const {
    if (k > order_)
      throw Error(Errc::TruncationInsufficient,
                  "coefficient " + std::to_string(k) + " requested from a series known to order " + std::to_string(order_));
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : R();
  }
  /// Index of the first nonzero coefficient, order+1 if none is known.
  int valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!ring::zero(c_[k])) return static_cast<int>(k);
    return is_exact() ? kExact : order_ + 1;
  }
  TruncSeries truncate(int order) const { return TruncSeries(c_, std::min(order, order_)); }
  /// Exact multiplication by t^k (k may be negative when the low terms vanish).
  TruncSeries shift(int k) const {
    if (k >= 0) {
      std::vector<R> c(k);
      c.insert(c.end(), c_.begin(), c_.end());
      return TruncSeries(std::move(c), is_exact() ? kExact : order_ + k);
    }
    for (int j = 0; j < -k && j < static_cast<int>(c_.size()); ++j)
      if (!ring::zero(c_[j])) throw Error(Errc::NonInvertibleDenominator, "series is not divisible by the requested power");
    std::vector<R> c(c_.size() > static_cast<std::size_t>(-k) ? std::vector<R>(c_.begin() - k, c_.end()) : std::vector<R>());
    return TruncSeries(std::move(c), is_exact() ? kExact : order_ + k);
  }

  template <class F>
  auto map(F fn) const {
    using S = decltype(fn(std::declval<R>()));
    std::vector<S> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(fn(x));
    return TruncSeries<S>(std::move(c), order_);
  }

  friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
    int n = std::min(x.order_, y.order_);
    std::vector<R> c(std::min<std::size_t>(std::max(x.c_.size(), y.c_.size()), bound(n)));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.at(k) + y.at(k);
    return TruncSeries(std::move(c), n);
  }
  friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) {
    int n = std::min(x.order_, y.order_);
    std::vector<R> c(std::min<std::size_t>(std::max(x.c_.size(), y.c_.size()), bound(n)));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.at(k) - y.at(k);
    return TruncSeries(std::move(c), n);
  }
  TruncSeries operator-() const {
    std::vector<R> c = c_;
    for (auto& v : c) v = -v;
    return TruncSeries(std::move(c), order_);
  }
  friend TruncSeries operator*(const R& s, const TruncSeries& x) {
    std::vector<R> c = x.c_;
    for (auto& v : c) v = s * v;
    return TruncSeries(std::move(c), x.order_);
  }
  friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
    int vx = x.valuation(), vy = y.valuation();
    long nx = x.is_exact() ? kExact : static_cast<long>(x.order_) + vy;
    long ny = y.is_exact() ? kExact : static_cast<long>(y.order_) + vx;
    int n = static_cast<int>(std::min<long>({nx, ny, kExact}));
    std::size_t len = x.c_.empty() || y.c_.empty() ? 0 : std::min(x.c_.size() + y.c_.size() - 1, bound(n));
    std::vector<R> c(len);
    for (std::size_t i = 0; i < x.c_.size() && i < len; ++i) {
      if (ring::zero(x.c_[i])) continue;
      for (std::size_t j = 0; j < y.c_.size() && i + j < len; ++j) {
        if (ring::zero(y.c_[j])) continue;
        c[i + j] += x.c_[i] * y.c_[j];
      }
    }
    return TruncSeries(std::move(c), n);
  }
  TruncSeries& operator+=(const TruncSeries& y) { return *this = *this + y; }
  TruncSeries& operator-=(const TruncSeries& y) { return *this = *this - y; }
  TruncSeries& operator*=(const TruncSeries& y) { return *this = *this * y; }

  /// Coefficientwise equality through the common order.
  bool agrees_with(const TruncSeries& y, int through) const {
    for (int k = 0; k <= through; ++k)
      if (!(coeff(k) == y.coeff(k))) return false;
    return true;
  }

  /// 1/x for a series with unit constant term; an exact input is inverted to
  /// `order`.
  TruncSeries inverse(int order = kExact) const {
    int n = std::min(order_, order);
    if (n >= kExact) throw Error(Errc::TruncationInsufficient, "inverse of an exact series needs an explicit order");
    if (c_.empty() || ring::zero(c_[0])) throw Error(Errc::NonInvertibleDenominator, "constant term is zero");
    R inv0 = ring::inv(c_[0]);
    std::vector<R> r(n + 1);
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
      R acc;
      for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
        if (!ring::zero(c_[j])) acc += c_[j] * r[k - j];
      r[k] = -(inv0 * acc);
    }
    return TruncSeries(std::move(r), n);
  }

  /// x / y, shifting out the valuation of y, whose first nonzero coefficient
  /// must be a unit.
  friend TruncSeries divide(const TruncSeries& x, const TruncSeries& y, int order = kExact) {
    int v = y.valuation();
    if (v > y.order_) throw Error(Errc::NonInvertibleDenominator, "divisor is zero to its known order");
    TruncSeries ys = y.shift(-v);
    TruncSeries xs = x.shift(-v);
    int n = std::min({ys.order_, order, xs.is_exact() ? kExact : xs.order_});
    if (n >= kExact) throw Error(Errc::TruncationInsufficient, "exact division needs an explicit order");
    return xs * ys.inverse(n);
  }

  std::string to_string(const std::function<std::string(const R&)>& fmt, const std::string& var = "u") const {
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (ring::zero(c_[k])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + fmt(c_[k]) + ")";
      if (k > 0) s += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (s.empty()) s = "0";
    if (!is_exact()) s += " + O(" + var + "^" + std::to_string(order_ + 1) + ")";
    return s;
  }

 private:
  static std::size_t bound(int n) { return n >= kExact ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(n + 1); }
  R at(std::size_t k) const { return k < c_.size() ? c_[k] : R(); }
  void trim() {
    if (!is_exact() && static_cast<int>(c_.size()) > order_ + 1) c_.resize(order_ + 1);
    while (!c_.empty() && ring::zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
  int order_ = kExact;
};

template <class R>
bool is_zero(const TruncSeries<R>& s) {
  return s.coeffs().empty();
}

/// f(g(t)); g must have zero constant term.
template <class R>
TruncSeries<R> compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  if (!g.coeffs().empty() && !ring::zero(g.coeffs()[0]))
    throw Error(Errc::NonzeroConstantTerm, "inner series has a nonzero constant term");
  constexpr int kExact = TruncSeries<R>::kExact;
  int vg = g.valuation();
  long nf = f.order();
  long from_f = f.is_exact() ? kExact : (nf + 1) * vg - 1;
  long from_g = g.is_exact() ? kExact : g.order();
  int n = static_cast<int>(std::min<long>({from_f, from_g, kExact}));
  // Horner: f_0 + g (f_1 + g (f_2 + ...)), truncated to n throughout
  int top = static_cast<int>(f.coeffs().size()) - 1;
  TruncSeries<R> acc = TruncSeries<R>::constant(R(), n);
  TruncSeries<R> gt = g.truncate(n);
  for (int k = top; k >= 0; --k) acc = (acc * gt + TruncSeries<R>::constant(f.coeffs()[k], n)).truncate(n);
  return acc.truncate(n);
}

/// The unique v with v = phi(v) through t^order, by fixed-point iteration from
/// zero. Each pass must fix at least one more coefficient.
template <class R>
TruncSeries<R> solve_by_recursion(const std::function<TruncSeries<R>(const TruncSeries<R>&)>& phi, int order) {
  TruncSeries<R> v(std::vector<R>{}, order);
  for (int pass = 0; pass <= order + 2; ++pass) {
    TruncSeries<R> next = phi(v);
    if (next.order() < order)
      throw Error(Errc::NoContraction, "substitution lost precision: order " + std::to_string(next.order()));
    next = next.truncate(order);
    if (next.agrees_with(v, order)) return next;
    v = std::move(next);
  }
  throw Error(Errc::NoContraction, "fixed-point iteration did not stabilize");
}

/// Laurent series sum_{k >= low} c_k t^k over Z[i]/3^N, known through
/// t^order. For the K(1)-local expansions t = 1/h.
class LaurentSeries {
 public:
  LaurentSeries(int low, std::vector<PadicGauss> coeffs, int order, int precision);
  static LaurentSeries monomial(const PadicGauss& c, int exponent, int order, int precision);

  int low() const { return low_; }
  int order() const { return order_; }
  int precision() const { return precision_; }
  /// Coefficient of t^k; zero below low, TruncationInsufficient above order.
  PadicGauss coeff(int k) const;
  int valuation() const;

  friend LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y);
  friend LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y);
  friend LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y);
  LaurentSeries operator-() const;
  /// Requires a 3-adic unit leading coefficient (NonUnitLeading).
  LaurentSeries invert() const;
  LaurentSeries truncate(int order, int precision) const;

  /// Highest power of `var` first when inverted (t = var^-1).
  std::string to_string(const std::string& var = "h", bool inverted = true) const;

 private:
  int low_;
  std::vector<PadicGauss> c_;
  int order_;
  int precision_;
};

}  // namespace pops

#endif  // POPS_SERIES_HPP
