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

#include "pops/series.hpp"

namespace pops {

LaurentSeries::LaurentSeries(int low, std::vector<PadicGauss> coeffs, int order, int precision)
    : low_(low), order_(order), precision_(precision) {
  for (auto& c : coeffs) c_.push_back(c.with_precision(precision));
  if (static_cast<int>(c_.size()) > order_ - low_ + 1) c_.resize(std::max(0, order_ - low_ + 1));
}

LaurentSeries LaurentSeries::monomial(const PadicGauss& c, int exponent, int order, int precision) {
  return LaurentSeries(exponent, {c}, order, precision);
}

PadicGauss LaurentSeries::coeff(int k) const {
  if (k > order_)
    throw Error(Errc::TruncationInsufficient, "Laurent coefficient " + std::to_string(k) + " beyond known order " +
                                                  std::to_string(order_));
  int idx = k - low_;
  if (idx < 0 || idx >= static_cast<int>(c_.size())) return PadicGauss(0, 0, precision_);
  return c_[idx];
}

int LaurentSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return low_ + static_cast<int>(k);
  return order_ + 1;
}

namespace {

LaurentSeries combine(const LaurentSeries& x, const LaurentSeries& y, int sign) {
  int low = std::min(x.low(), y.low());
  int order = std::min(x.order(), y.order());
  int prec = std::min(x.precision(), y.precision());
  std::vector<PadicGauss> c;
  for (int k = low; k <= order; ++k) {
    PadicGauss a = x.coeff(k).with_precision(prec), b = y.coeff(k).with_precision(prec);
    c.push_back(sign > 0 ? a + b : a - b);
  }
  return LaurentSeries(low, std::move(c), order, prec);
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) { return combine(x, y, 1); }
LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) { return combine(x, y, -1); }

LaurentSeries LaurentSeries::operator-() const {
  std::vector<PadicGauss> c;
  for (const auto& v : c_) c.push_back(PadicGauss(0, 0, precision_) - v);
  return LaurentSeries(low_, std::move(c), order_, precision_);
}

LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) {
  int vx = x.valuation(), vy = y.valuation();
  int order = std::min(x.order() + vy, y.order() + vx);
  int prec = std::min(x.precision(), y.precision());
  int low = x.low() + y.low();
  std::vector<PadicGauss> c(std::max(0, order - low + 1), PadicGauss(0, 0, prec));
  for (int i = x.low(); i <= x.order(); ++i) {
    PadicGauss a = x.coeff(i);
    if (a.is_zero()) continue;
    for (int j = y.low(); j <= y.order() && i + j <= order; ++j) {
      PadicGauss b = y.coeff(j);
      if (b.is_zero()) continue;
      c[i + j - low] = c[i + j - low] + a.with_precision(prec) * b.with_precision(prec);
    }
  }
  return LaurentSeries(low, std::move(c), order, prec);
}

LaurentSeries LaurentSeries::invert() const {
  int v = valuation();
  if (v > order_) throw Error(Errc::NonUnitLeading, "series is zero to its known order");
  PadicGauss lead = coeff(v);
  if (!lead.is_unit()) throw Error(Errc::NonUnitLeading, "leading coefficient " + lead.to_string() + " is divisible by 3");
  // x = t^v (lead + ...), so 1/x = t^-v * (1/y) with y known through order-v.
  int n = order_ - v;
  PadicGauss inv0 = lead.inverse();
  std::vector<PadicGauss> r(n + 1, PadicGauss(0, 0, precision_));
  r[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    PadicGauss acc(0, 0, precision_);
    for (int j = 1; j <= k; ++j) acc = acc + coeff(v + j) * r[k - j];
    r[k] = PadicGauss(0, 0, precision_) - inv0 * acc;
  }
  return LaurentSeries(-v, std::move(r), n - v, precision_);
}

LaurentSeries LaurentSeries::truncate(int order, int precision) const {
  return LaurentSeries(low_, c_, std::min(order, order_), std::min(precision, precision_));
}

std::string LaurentSeries::to_string(const std::string& var, bool inverted) const {
  std::string s;
  for (int k = low_; k <= order_; ++k) {
    PadicGauss c = coeff(k);
    if (c.is_zero()) continue;
    Integer re = c.symmetric_re(), im = c.symmetric_im();
    int e = inverted ? -k : k;
    std::string coef;
    if (im == 0) {
      coef = re.get_str();
    } else {
      coef = "(" + re.get_str() + (im > 0 ? " + " : " - ") + Integer(abs(im)).get_str() + "*i)";
    }
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    bool neg = im == 0 && re < 0;
    if (neg) coef = coef.substr(1);
    if (!s.empty()) {
      s += neg ? " - " : " + ";
    } else if (neg) {
      s += "-";
    }
    if (mono.empty()) {
      s += coef;
    } else if (coef == "1") {
      s += mono;
    } else {
      s += coef + "*" + mono;
    }
  }
  if (s.empty()) s = "0";
  int next = inverted ? -(order_ + 1) : order_ + 1;
  s += " + O(" + var + "^" + std::to_string(next) + ", 3^" + std::to_string(precision_) + ")";
  return s;
}

}  // namespace pops
