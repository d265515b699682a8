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

#include <doctest.h>

#include <random>

#include "pops/curve.hpp"
#include "pops/isogeny.hpp"
#include "pops/series.hpp"
#include "support.hpp"

using namespace pops;
using pops::testing::golden;
using pops::testing::series_fraction;

namespace {

using QS = TruncSeries<Rational>;

MultiPoly A() { return MultiPoly::var(Var::a); }
MultiPoly B() { return MultiPoly::var(Var::b); }

// v_n read off from v = u^3 + b u^2 v - a u v - a b v^2, one coefficient at a
// time.
std::vector<MultiPoly> v_by_coefficients(int order) {
  std::vector<MultiPoly> v(order + 1);
  for (int n = 3; n <= order; ++n) {
    MultiPoly x = n == 3 ? MultiPoly(1) : MultiPoly();
    if (n - 2 >= 0) x += B() * v[n - 2];
    x -= A() * v[n - 1];
    for (int i = 3; i + 3 <= n; ++i) x -= A() * B() * v[i] * v[n - i];
    v[n] = x;
  }
  return v;
}

bool same_laurent(const LaurentSeries& x, const LaurentSeries& y, int through) {
  for (int k = std::min(x.low(), y.low()); k <= through; ++k)
    if (!(x.coeff(k) == y.coeff(k))) return false;
  return true;
}

QS random_series(std::mt19937& rng, int order, bool constant) {
  std::uniform_int_distribution<int> d(-6, 6);
  std::vector<Rational> c(order + 1);
  for (int k = constant ? 0 : 1; k <= order; ++k) {
    c[k] = Rational(d(rng), 1 + (k % 3));
    c[k].canonicalize();
  }
  return QS(c, order);
}

}  // namespace

TEST_CASE("v-series through u^12") {
  auto v = v_series_symbolic(12);
  CHECK(v.order() == 12);
  CHECK(series_fraction(v, Var::u, 0, 12) == golden("appB.v_series"));
}

TEST_CASE("v-series through u^3 is u^3") {
  auto v = v_series_symbolic(3);
  CHECK(v.coeff(3) == MultiPoly(1));
  CHECK(v.coeff(0).is_zero());
  CHECK(v.coeff(1).is_zero());
  CHECK(v.coeff(2).is_zero());
}

TEST_CASE("v-series through u^13 against the coefficient recursion") {
  auto v = v_series_symbolic(13);
  auto oracle = v_by_coefficients(13);
  for (int k = 0; k <= 13; ++k) CHECK(v.coeff(k) == oracle[k]);
  // The residual of the curve equation starts beyond u^13.
  MultiPoly V;
  for (int k = 0; k <= 13; ++k) V += v.coeff(k) * MultiPoly::var(Var::u, k);
  MultiPoly r = WeierstrassCurve::uv_equation().subs(Var::v, V);
  for (int k = 0; k <= 13; ++k) CHECK(r.coeff(Var::u, k).is_zero());
  CHECK_FALSE(r.coeff(Var::u, 14).is_zero());
}

TEST_CASE("solve_by_recursion reports a missing contraction") {
  std::function<QS(const QS&)> phi = [](const QS& v) { return QS::constant(Rational(1), 5) + v; };
  CHECK_THROWS_AS(solve_by_recursion<Rational>(phi, 5), Error);
}

TEST_CASE("composition with the identity and the inversion involution") {
  std::mt19937 rng(5);
  QS g = random_series(rng, 9, false);
  CHECK(compose(QS::variable(9), g).agrees_with(g, 9));

  auto iota = inversion_series(12);
  CHECK(iota.coeff(1) == MultiPoly(-1));
  CHECK(iota.coeff(0).is_zero());
  auto twice = compose(iota, iota);
  CHECK(twice.order() >= 12);
  for (int k = 0; k <= 12; ++k) CHECK(twice.coeff(k) == (k == 1 ? MultiPoly(1) : MultiPoly()));
}

TEST_CASE("composition rejects a nonzero constant term") {
  std::mt19937 rng(6);
  CHECK_THROWS_AS(compose(random_series(rng, 5, true), QS({Rational(1), Rational(1)}, 5)), Error);
}

TEST_CASE("v-series composed with u' matches direct substitution") {
  const IsogenyData& data = isogeny_data();
  ChartField c(ChartScalar::c()), one(ChartScalar(1));
  auto v = v_series<ChartField>(c, one, 6);
  ChartSeries g = data.u_prime_c.truncate(6);
  ChartSeries composed = compose(v, g);
  // Oracle: sum_k v_k g^k, powers by repeated multiplication.
  ChartSeries acc = ChartSeries::constant(ChartField(), 6), pw = ChartSeries::constant(one, 6);
  for (int k = 0; k <= 6; ++k) {
    acc = acc + ChartSeries::constant(v.coeff(k), 6) * pw;
    pw = (pw * g).truncate(6);
  }
  CHECK(composed.order() == 6);
  CHECK(composed.agrees_with(acc, 6));
}

TEST_CASE("composition is associative on random series") {
  std::mt19937 rng(77);
  for (int n = 0; n < 25; ++n) {
    QS f = random_series(rng, 8, true), g = random_series(rng, 8, false), h = random_series(rng, 8, false);
    QS left = compose(compose(f, g), h), right = compose(f, compose(g, h));
    int common = std::min(left.order(), right.order());
    CHECK(common >= 8);
    CHECK(left.agrees_with(right, common));
  }
}

TEST_CASE("truncated products carry conservative orders") {
  QS x({Rational(1), Rational(2)}, 5), y({Rational(0), Rational(1), Rational(3)}, 5);
  CHECK((x * x).order() == 5);
  CHECK((x * y).order() == 5);
  CHECK((y * y).order() == 6);
  CHECK((x + QS::variable()).order() == 5);
  CHECK_THROWS_AS((x * x).coeff(6), Error);
  QS inv = x.inverse();
  CHECK((inv * x).agrees_with(QS::constant(Rational(1)), 5));
}

TEST_CASE("Laurent inversion of h - 9") {
  const int M = 12, N = 20;
  LaurentSeries hm9(-1, {PadicGauss(1, 0, N), PadicGauss(-9, 0, N)}, M, N);
  LaurentSeries inv = hm9.invert();
  CHECK(inv.low() >= 1);
  PadicGauss pw(1, 0, N);
  for (int k = 1; k <= M; ++k) {
    CHECK(inv.coeff(k) == pw);
    pw = pw * PadicGauss(9, 0, N);
  }
  LaurentSeries one = hm9 * inv;
  CHECK(one.coeff(0) == PadicGauss(1, 0, N));
  for (int k = 1; k <= one.order(); ++k) CHECK(one.coeff(k).is_zero());
}

TEST_CASE("Laurent monomials and non-unit leading coefficients") {
  LaurentSeries t = LaurentSeries::monomial(PadicGauss(1, 0, 8), 1, 10, 8);
  LaurentSeries h = LaurentSeries::monomial(PadicGauss(1, 0, 8), -1, 10, 8);
  LaurentSeries p = t * h;
  CHECK(p.coeff(0) == PadicGauss(1, 0, 8));
  CHECK(p.coeff(1).is_zero());
  LaurentSeries bad(0, {PadicGauss(3, 0, 8), PadicGauss(1, 0, 8)}, 6, 8);
  CHECK_THROWS_AS(bad.invert(), Error);
}

TEST_CASE("Laurent precision is monotone and coherent") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int n = 0; n < 20; ++n) {
    std::vector<PadicGauss> c;
    c.emplace_back(1 + 3 * d(rng), d(rng), 14);
    for (int k = 1; k < 8; ++k) c.emplace_back(d(rng), d(rng), 14);
    LaurentSeries x(-2, c, 6, 14);
    LaurentSeries y(-2, c, 6, 14);
    LaurentSeries low = LaurentSeries(-2, c, 6, 14).truncate(6, 5);
    CHECK((x * low).precision() == 5);
    CHECK(same_laurent(x.invert().truncate(4, 5), low.invert().truncate(4, 5), 4));
    CHECK(same_laurent((x * y).truncate(4, 5), (low * low).truncate(4, 5), 4));
  }
}
