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

#include "pops/qpoly.hpp"

#include <algorithm>

namespace pops {

QPoly::QPoly(Rational q) {
  if (q != 0) c_.push_back(std::move(q));
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::x(int power) {
  std::vector<Rational> c(power + 1);
  c[power] = 1;
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

int QPoly::low_degree() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
  return c_.empty() ? 0 : k;
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (c_.empty()) return *this;
  Rational inv = 1 / c_.back();
  return inv * *this;
}

QPoly QPoly::shift_down(int k) const {
  if (k <= 0) return *this;
  if (k > static_cast<int>(c_.size())) return QPoly();
  return QPoly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

QPoly QPoly::shift_up(int k) const {
  if (c_.empty() || k <= 0) return *this;
  std::vector<Rational> c(k);
  c.insert(c.end(), c_.begin(), c_.end());
  return QPoly(std::move(c));
}

QPoly operator+(const QPoly& p, const QPoly& q) {
  std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t k = 0; k < p.c_.size(); ++k) c[k] = p.c_[k];
  for (std::size_t k = 0; k < q.c_.size(); ++k) c[k] += q.c_[k];
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& p, const QPoly& q) {
  std::vector<Rational> c(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t k = 0; k < p.c_.size(); ++k) c[k] = p.c_[k];
  for (std::size_t k = 0; k < q.c_.size(); ++k) c[k] -= q.c_[k];
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& p, const QPoly& q) {
  if (p.c_.empty() || q.c_.empty()) return QPoly();
  std::vector<Rational> c(p.c_.size() + q.c_.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i] == 0) continue;
    for (std::size_t j = 0; j < q.c_.size(); ++j) {
      mpq_mul(t.get_mpq_t(), p.c_[i].get_mpq_t(), q.c_[j].get_mpq_t());
      c[i + j] += t;
    }
  }
  return QPoly(std::move(c));
}

QPoly operator*(const Rational& s, const QPoly& p) {
  if (s == 0) return QPoly();
  std::vector<Rational> c(p.c_);
  for (auto& x : c) x *= s;
  return QPoly(std::move(c));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string QPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    Rational a = abs(q);
    if (s.empty()) {
      if (q < 0) s += "-";
    } else {
      s += q < 0 ? " - " : " + ";
    }
    bool one = (a == 1);
    if (!one || k == 0) s += pops::to_string(a);
    if (k > 0) {
      if (!one) s += "*";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

std::pair<QPoly, QPoly> divrem(const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw Error(Errc::DivisionByNonUnit, "polynomial division by zero");
  std::vector<Rational> r = p.coeffs();
  int dd = d.degree();
  if (p.degree() < dd) return {QPoly(), p};
  std::vector<Rational> q(p.degree() - dd + 1);
  Rational inv = 1 / d.leading();
  const auto& dc = d.coeffs();
  for (int k = p.degree(); k >= dd; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] * inv;
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * dc[j];
  }
  r.resize(dd);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(QPoly p, QPoly q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.degree() == 0 || q.degree() == 0) return QPoly(1);
  // Powers of x are common denominators; their gcd is read off directly.
  int lp = p.low_degree(), lq = q.low_degree();
  if (p.degree() == lp || q.degree() == lq) return QPoly::x(std::min(lp, lq));
  while (!q.is_zero()) {
    QPoly r = divrem(p, q).second;
    p = std::move(q);
    q = r.monic();
  }
  return p.monic();
}

RatFun::RatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::DivisionByNonUnit, "rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divrem(num_, g).first;
      den_ = divrem(den_, g).first;
    }
  }
  Rational lc = den_.leading();
  if (lc != 1) {
    Rational inv = 1 / lc;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RatFun RatFun::inverse() const {
  if (num_.is_zero()) throw Error(Errc::DivisionByNonUnit, "inverse of zero rational function");
  return RatFun(den_, num_);
}

namespace {

QPoly exact_quotient(const QPoly& p, const QPoly& g) { return g.degree() <= 0 ? p : divrem(p, g).first; }

}  // namespace

// Sums and products cancel only against the factors that can actually be
// shared, which keeps the gcds small.
RatFun operator+(const RatFun& x, const RatFun& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den_.degree() == 0 && y.den_.degree() == 0) return RatFun(x.num_ + y.num_, QPoly(1), RatFun::Reduced{});
  if (x.den_ == y.den_) return RatFun(x.num_ + y.num_, x.den_);
  if (x.den_.degree() == 0) return RatFun(x.num_ * y.den_ + y.num_, y.den_, RatFun::Reduced{});
  if (y.den_.degree() == 0) return RatFun(x.num_ + y.num_ * x.den_, x.den_, RatFun::Reduced{});
  QPoly g = gcd(x.den_, y.den_);
  if (g.degree() == 0)
    return RatFun(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_, RatFun::Reduced{});
  QPoly xd = exact_quotient(x.den_, g), yd = exact_quotient(y.den_, g);
  QPoly num = x.num_ * yd + y.num_ * xd;
  if (num.is_zero()) return RatFun();
  QPoly den = xd * y.den_;
  QPoly h = gcd(num, g);
  return RatFun(exact_quotient(num, h), exact_quotient(den, h), RatFun::Reduced{});
}

RatFun operator-(const RatFun& x, const RatFun& y) { return x + (-y); }

RatFun operator*(const RatFun& x, const RatFun& y) {
  if (x.is_zero() || y.is_zero()) return RatFun();
  if (x.den_.degree() == 0 && y.den_.degree() == 0) return RatFun(x.num_ * y.num_, QPoly(1), RatFun::Reduced{});
  QPoly g1 = gcd(x.num_, y.den_), g2 = gcd(y.num_, x.den_);
  return RatFun(exact_quotient(x.num_, g1) * exact_quotient(y.num_, g2),
                exact_quotient(x.den_, g2) * exact_quotient(y.den_, g1), RatFun::Reduced{});
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFun::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace pops
