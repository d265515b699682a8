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

#include "pops/chart.hpp"

#include <algorithm>

namespace pops {

QPoly mul_disc(const QPoly& p, int k) {
  QPoly r = p;
  for (int j = 0; j < k; ++j) r = r.shift_up(2) - Rational(16) * r;
  return r;
}

bool div_disc(const QPoly& p, QPoly& quotient) {
  if (p.is_zero()) {
    quotient = p;
    return true;
  }
  if (p.degree() < 2) return false;
  // p = (c^2 - 16) q: q_{k-2} = p_k + 16 q_k, from the top.
  std::vector<Rational> q(p.degree() - 1);
  const auto& pc = p.coeffs();
  for (int k = p.degree(); k >= 2; --k) {
    Rational v = pc[k];
    if (k + 2 <= p.degree()) v += 16 * q[k];
    q[k - 2] = v;
  }
  // remainder terms: p_1 + 16 q_1 and p_0 + 16 q_0
  Rational r1 = pc[1] + (q.size() > 1 ? Rational(16 * q[1]) : Rational(0));
  Rational r0 = pc[0] + 16 * q[0];
  if (r1 != 0 || r0 != 0) return false;
  quotient = QPoly(std::move(q));
  return true;
}

ChartScalar::ChartScalar(QPoly num, int c_exp, int disc_exp)
    : num_(std::move(num)), c_exp_(c_exp), disc_exp_(disc_exp) {
  if (disc_exp_ < 0) {
    num_ = mul_disc(num_, -disc_exp_);
    disc_exp_ = 0;
  }
  if (c_exp_ < 0) {
    num_ = num_.shift_up(-c_exp_);
    c_exp_ = 0;
  }
  canonicalize();
}

void ChartScalar::canonicalize() {
  if (num_.is_zero()) {
    c_exp_ = 0;
    disc_exp_ = 0;
    return;
  }
  if (c_exp_ > 0) {
    int k = std::min(c_exp_, num_.low_degree());
    if (k > 0) {
      num_ = num_.shift_down(k);
      c_exp_ -= k;
    }
  }
  QPoly q;
  while (disc_exp_ > 0 && div_disc(num_, q)) {
    num_ = std::move(q);
    --disc_exp_;
  }
}

bool ChartScalar::is_unit() const {
  if (num_.is_zero()) return false;
  QPoly p = num_.shift_down(num_.low_degree());
  QPoly q;
  while (p.degree() >= 2 && div_disc(p, q)) p = std::move(q);
  return p.degree() == 0;
}

ChartScalar ChartScalar::inverse() const {
  if (num_.is_zero()) throw Error(Errc::DivisionByNonUnit, "inverse of zero");
  int low = num_.low_degree();
  QPoly p = num_.shift_down(low);
  int m = 0;
  QPoly q;
  while (p.degree() >= 2 && div_disc(p, q)) {
    p = std::move(q);
    ++m;
  }
  if (p.degree() != 0)
    throw Error(Errc::DivisionByNonUnit, to_string() + " is not a unit of the chart ring");
  // 1/(k c^low D^m) * c^c_exp D^disc_exp
  Rational inv = 1 / p.leading();
  QPoly n = mul_disc(QPoly(inv).shift_up(c_exp_), disc_exp_);
  return ChartScalar(std::move(n), low, m);
}

ChartScalar ChartScalar::from_ratfun(const RatFun& r) {
  if (r.is_zero()) return ChartScalar();
  QPoly den = r.den();
  int low = den.low_degree();
  den = den.shift_down(low);
  int m = 0;
  QPoly q;
  while (den.degree() >= 2 && div_disc(den, q)) {
    den = std::move(q);
    ++m;
  }
  if (den.degree() != 0)
    throw Error(Errc::NotLocal, "denominator " + r.den().to_string() + " is not a unit of the chart ring");
  return ChartScalar(Rational(1 / den.leading()) * r.num(), low, m);
}

RatFun ChartScalar::to_ratfun() const { return RatFun(num_, mul_disc(QPoly::x(c_exp_), disc_exp_)); }

ChartScalar operator+(const ChartScalar& x, const ChartScalar& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  int ce = std::max(x.c_exp_, y.c_exp_);
  int de = std::max(x.disc_exp_, y.disc_exp_);
  QPoly a = mul_disc(x.num_.shift_up(ce - x.c_exp_), de - x.disc_exp_);
  QPoly b = mul_disc(y.num_.shift_up(ce - y.c_exp_), de - y.disc_exp_);
  return ChartScalar(a + b, ce, de);
}

ChartScalar operator-(const ChartScalar& x, const ChartScalar& y) { return x + (-y); }

ChartScalar operator*(const ChartScalar& x, const ChartScalar& y) {
  if (x.is_zero() || y.is_zero()) return ChartScalar();
  return ChartScalar(x.num_ * y.num_, x.c_exp_ + y.c_exp_, x.disc_exp_ + y.disc_exp_);
}

ChartScalar ChartScalar::operator-() const {
  ChartScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string ChartScalar::to_string() const {
  if (c_exp_ == 0 && disc_exp_ == 0) return num_.to_string();
  std::string den;
  if (c_exp_ > 0) den += c_exp_ == 1 ? "c" : "c^" + std::to_string(c_exp_);
  if (disc_exp_ > 0) {
    if (!den.empty()) den += "*";
    den += "(c^2 - 16)";
    if (disc_exp_ > 1) den += "^" + std::to_string(disc_exp_);
  }
  return "(" + num_.to_string() + ")/(" + den + ")";
}

}  // namespace pops
