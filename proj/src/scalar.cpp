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

#include "pops/scalar.hpp"

#include <algorithm>

namespace pops {

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool has_two_power_denominator(const Rational& q) {
  Integer d = q.get_den();
  while (d % 2 == 0) d /= 2;
  return d == 1;
}

namespace {
int valuation3(Integer n) {
  int v = 0;
  while (n % 3 == 0) {
    n /= 3;
    ++v;
  }
  return v;
}
}  // namespace

int valuation3(const Rational& q) {
  if (q == 0) throw Error(Errc::DivisionByNonUnit, "3-adic valuation of zero");
  return valuation3(Integer(q.get_num())) - valuation3(Integer(q.get_den()));
}

int residue_mod3(const Rational& q) {
  Integer den = q.get_den();
  if (den % 3 == 0) throw Error(Errc::DivisionByNonUnit, "rational " + to_string(q) + " is not 3-integral");
  Integer num = q.get_num();
  int n = static_cast<int>(mpz_fdiv_ui(num.get_mpz_t(), 3));
  int d = static_cast<int>(mpz_fdiv_ui(den.get_mpz_t(), 3));
  // d is 1 or 2 and is its own inverse mod 3
  return (n * d) % 3;
}

// ---------------------------------------------------------------------------
// LocalizedRational

LocalizedRational LocalizedRational::inverse_unit(UnitTag tag, unsigned power) {
  LocalizedRational r(1);
  r.exps_[static_cast<int>(tag)] = power;
  return r;
}

bool LocalizedRational::is_unit() const {
  if (num_ == 0) return false;
  Integer n = abs(num_);
  while (n % 2 == 0) n /= 2;
  return n == 1;
}

Rational LocalizedRational::to_rational() const {
  if (!is_plain()) throw Error(Errc::IncompatibleUnits, to_string() + " has non-integer units in its denominator");
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), exps_[0]);
  Rational q(num_, den);
  q.canonicalize();
  return q;
}

LocalizedRational LocalizedRational::divide_by_unit(UnitTag tag, unsigned power) const {
  LocalizedRational r = *this;
  if (r.num_ == 0) return r;
  r.exps_[static_cast<int>(tag)] += power;
  r.canonicalize();
  return r;
}

void LocalizedRational::canonicalize() {
  if (num_ == 0) {
    exps_ = {0, 0, 0, 0};
    return;
  }
  while (exps_[0] > 0 && mpz_even_p(num_.get_mpz_t())) {
    num_ /= 2;
    --exps_[0];
  }
}

std::string LocalizedRational::to_string() const {
  std::string den;
  auto add = [&](const std::string& factor, unsigned e) {
    if (e == 0) return;
    if (!den.empty()) den += "*";
    den += factor;
    if (e > 1) den += "^" + std::to_string(e);
  };
  add("2", exps_[0]);
  add("a", exps_[1]);
  add("b", exps_[2]);
  add("(a^2 - 16*b)", exps_[3]);
  if (den.empty()) return num_.get_str();
  return num_.get_str() + "/(" + den + ")";
}

LocalizedRational operator+(const LocalizedRational& x, const LocalizedRational& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  for (int t = 1; t < 4; ++t)
    if (x.exps_[t] != y.exps_[t])
      throw Error(Errc::IncompatibleUnits, "sum " + x.to_string() + " + " + y.to_string() + " leaves the unit monoid");
  LocalizedRational r;
  unsigned e = std::max(x.exps_[0], y.exps_[0]);
  Integer a = x.num_, b = y.num_;
  mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), e - x.exps_[0]);
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), e - y.exps_[0]);
  r.num_ = a + b;
  r.exps_ = x.exps_;
  r.exps_[0] = e;
  r.canonicalize();
  return r;
}

LocalizedRational LocalizedRational::operator-() const {
  LocalizedRational r = *this;
  r.num_ = -r.num_;
  return r;
}

LocalizedRational operator-(const LocalizedRational& x, const LocalizedRational& y) { return x + (-y); }

LocalizedRational operator*(const LocalizedRational& x, const LocalizedRational& y) {
  LocalizedRational r;
  r.num_ = x.num_ * y.num_;
  for (int t = 0; t < 4; ++t) r.exps_[t] = x.exps_[t] + y.exps_[t];
  r.canonicalize();
  return r;
}

LocalizedRational operator/(const LocalizedRational& x, const LocalizedRational& y) {
  if (!y.is_unit()) throw Error(Errc::DivisionByNonUnit, "divisor " + y.to_string() + " is not a unit");
  if (!y.is_plain()) throw Error(Errc::IncompatibleUnits, "cannot move " + y.to_string() + " into a numerator");
  LocalizedRational r = x;
  Integer n = abs(y.num_);
  unsigned k = 0;
  while (n > 1) {
    n /= 2;
    ++k;
  }
  if (y.num_ < 0) r.num_ = -r.num_;
  // multiplying by 2^{y.exps_[0]} and dividing by 2^k
  mpz_mul_2exp(r.num_.get_mpz_t(), r.num_.get_mpz_t(), y.exps_[0]);
  r.exps_[0] += k;
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// PadicGauss

Integer PadicGauss::modulus(int precision) {
  Integer m;
  mpz_ui_pow_ui(m.get_mpz_t(), 3, static_cast<unsigned long>(precision));
  return m;
}

PadicGauss::PadicGauss(long re, long im, int precision) : PadicGauss(Integer(re), Integer(im), precision) {}

PadicGauss::PadicGauss(Integer re, Integer im, int precision)
    : re_(std::move(re)), im_(std::move(im)), precision_(precision) {
  if (precision < 1) throw Error(Errc::PrecisionInsufficient, "3-adic precision must be at least 1");
  reduce();
}

void PadicGauss::reduce() {
  Integer m = modulus(precision_);
  mpz_fdiv_r(re_.get_mpz_t(), re_.get_mpz_t(), m.get_mpz_t());
  mpz_fdiv_r(im_.get_mpz_t(), im_.get_mpz_t(), m.get_mpz_t());
}

PadicGauss PadicGauss::with_precision(int precision) const { return PadicGauss(re_, im_, precision); }

bool PadicGauss::is_unit() const {
  return mpz_divisible_ui_p(re_.get_mpz_t(), 3) == 0 || mpz_divisible_ui_p(im_.get_mpz_t(), 3) == 0;
}

int PadicGauss::valuation() const {
  if (is_zero()) return precision_;
  int vr = re_ == 0 ? precision_ : valuation3(re_);
  int vi = im_ == 0 ? precision_ : valuation3(im_);
  return std::min(vr, vi);
}

PadicGauss PadicGauss::inverse() const {
  if (!is_unit()) throw Error(Errc::DivisionByNonUnit, to_string() + " is divisible by 3");
  Integer m = modulus(precision_);
  Integer norm = re_ * re_ + im_ * im_;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), norm.get_mpz_t(), m.get_mpz_t());
  return PadicGauss(re_ * inv, -im_ * inv, precision_);
}

Integer PadicGauss::symmetric_re() const {
  Integer m = modulus(precision_);
  return 2 * re_ > m ? Integer(re_ - m) : re_;
}

Integer PadicGauss::symmetric_im() const {
  Integer m = modulus(precision_);
  return 2 * im_ > m ? Integer(im_ - m) : im_;
}

std::string PadicGauss::to_string() const {
  std::string s = symmetric_re().get_str();
  Integer im = symmetric_im();
  if (im != 0) s += (im > 0 ? " + " : " - ") + Integer(abs(im)).get_str() + "*i";
  return "(" + s + " mod 3^" + std::to_string(precision_) + ")";
}

PadicGauss operator+(const PadicGauss& x, const PadicGauss& y) {
  return PadicGauss(x.re_ + y.re_, x.im_ + y.im_, std::min(x.precision_, y.precision_));
}

PadicGauss operator-(const PadicGauss& x, const PadicGauss& y) {
  return PadicGauss(x.re_ - y.re_, x.im_ - y.im_, std::min(x.precision_, y.precision_));
}

PadicGauss operator*(const PadicGauss& x, const PadicGauss& y) {
  return PadicGauss(x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_,
                    std::min(x.precision_, y.precision_));
}

PadicGauss operator/(const PadicGauss& x, const PadicGauss& y) { return x * y.inverse(); }

bool operator==(const PadicGauss& x, const PadicGauss& y) {
  return x.precision_ == y.precision_ && x.re_ == y.re_ && x.im_ == y.im_;
}

PadicGauss evaluate(std::span<const PadicGauss> coeffs, const PadicGauss& x) {
  PadicGauss acc(0, 0, x.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PadicGauss hensel_lift_root(std::span<const PadicGauss> coeffs, const PadicGauss& seed, int target_precision) {
  std::vector<PadicGauss> f, df;
  for (const auto& c : coeffs) f.push_back(c.with_precision(target_precision));
  for (std::size_t k = 1; k < f.size(); ++k) df.push_back(f[k] * PadicGauss(static_cast<long>(k), 0, target_precision));

  PadicGauss r = seed.with_precision(target_precision);
  if (evaluate(f, r).valuation() < 1) throw Error(Errc::NoRoot, "seed " + seed.to_string() + " is not a root mod 3");
  if (!evaluate(df, r).is_unit())
    throw Error(Errc::NonsimpleRoot, "derivative vanishes mod 3 at " + seed.to_string());

  // Newton: each step at least doubles the number of correct digits.
  for (int step = 0; step <= target_precision + 1; ++step) {
    PadicGauss value = evaluate(f, r);
    if (value.is_zero()) return r;
    r = r - value / evaluate(df, r);
  }
  throw Error(Errc::NoConvergence, "Newton iteration did not converge");
}

}  // namespace pops
