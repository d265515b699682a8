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
#include "pops/polyring.hpp"
#include "support.hpp"

using namespace pops;
using pops::testing::golden;

namespace {

MultiPoly A() { return MultiPoly::var(Var::a); }
MultiPoly B() { return MultiPoly::var(Var::b); }
MultiPoly U(int k = 1) { return MultiPoly::var(Var::u, k); }
MultiPoly H() { return A() * A() + B(); }

const TorsionData& torsion() {
  static const TorsionData t = compute_torsion_data();
  return t;
}

}  // namespace

TEST_CASE("multivariate products") {
  CHECK((A() + B()) * (A() - B()) == A().pow(2) - B().pow(2));
  CHECK(H() * H() == A().pow(4) + MultiPoly(2) * A().pow(2) * B() + B().pow(2));
  CHECK(torsion().f * MultiPoly(1) == torsion().f);
  CHECK(parse_expression("(a + b) (a - b)") == Fraction(A().pow(2) - B().pow(2)));
}

TEST_CASE("divrem of psi3-tilde(d, v) by B reproduces Q1 and R1") {
  const TorsionData& t = torsion();
  auto [q, r] = divrem(t.A, t.B, Var::v);
  CHECK(Fraction(q) == golden("appA.Q1"));
  CHECK(Fraction(r) == golden("appA.R1"));
  CHECK(t.A == q * t.B + r);
  CHECK(r.degree_in(Var::v) < t.B.degree_in(Var::v));
  // The divisor as printed.
  MultiPoly d = MultiPoly::var(Var::d), v = MultiPoly::var(Var::v);
  CHECK(t.B == A() * B() * v.pow(2) + (-B() * d.pow(2) + A() * d + 1) * v - d.pow(3));
}

TEST_CASE("second Euclidean step gives Q2 and R2") {
  const TorsionData& t = torsion();
  CHECK(t.Q2 == golden("appA.Q2"));
  CHECK(t.R2 == golden("appA.R2"));
  CHECK(Fraction(t.B) == t.Q2 * Fraction(t.R1) + t.R2);
}

TEST_CASE("divrem of a polynomial by itself") {
  auto [q, r] = divrem(torsion().f, torsion().f, Var::u);
  CHECK(q == MultiPoly(1));
  CHECK(r.is_zero());
}

TEST_CASE("divrem rejects non-unit leading coefficients") {
  CHECK_THROWS_AS(divrem(U(3), (A() + 1) * U(), Var::u), Error);
  UniPoly<Rational> p({Rational(1), Rational(2)}), z;
  CHECK_THROWS_AS(divrem(p, z), Error);
}

TEST_CASE("Bezout pair for f and K matches M and N") {
  const TorsionData& t = torsion();
  CHECK(Fraction(t.M) == golden("appA.M"));
  CHECK(Fraction(t.N) == golden("appA.N"));
  CHECK(t.M * LPoly(t.f) + t.N * LPoly(t.K) == LPoly(1));
  CHECK((t.N * LPoly(t.K)).reduce_mod(t.f, Var::u) == LPoly(1));
}

TEST_CASE("gcd_bezout over the rationals") {
  using P = UniPoly<Rational>;
  P f({Rational(-1), Rational(0), Rational(1)}), g({Rational(-1), Rational(1)});
  auto r = gcd_bezout(f, g);
  CHECK(r.gcd == g);
  CHECK(r.m * f + r.n * g == r.gcd);

  P h({Rational(3), Rational(0), Rational(2), Rational(4)});
  auto s = gcd_bezout(h, h);
  CHECK(s.gcd == Rational(1, 4) * h);
  CHECK(s.m * h + s.n * h == s.gcd);

  P coprime({Rational(1), Rational(1)});
  auto c = gcd_bezout(f * P(Rational(1)), P({Rational(2), Rational(1)}) * coprime * coprime);
  CHECK(c.gcd.degree() <= 1);
  CHECK(c.m * f + c.n * (P({Rational(2), Rational(1)}) * coprime * coprime) == c.gcd);
}

TEST_CASE("random divrem re-expands exactly") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> deg(1, 4), bexp(0, 3);
  for (int n = 0; n < 60; ++n) {
    MultiPoly p = pops::testing::random_poly(rng, {Var::a, Var::b, Var::u}, 5, 6);
    int dd = deg(rng);
    MultiPoly d = pops::testing::random_poly(rng, {Var::a, Var::b}, 2, 3) * U(dd - 1) +
                  MultiPoly(Rational(3, 2)) * B().pow(bexp(rng)) * U(dd);
    auto [q, r] = divrem(p, d, Var::u);
    CHECK(p == q * d + r);
    CHECK((r.is_zero() || r.degree_in(Var::u) < dd));
  }
}

TEST_CASE("graded degrees add under products") {
  std::mt19937 rng(17);
  auto homogeneous = [&](int weight) {
    // a has weight 1, b weight 2 in the graded base ring.
    MultiPoly p;
    std::uniform_int_distribution<int> co(-4, 4);
    for (int j = 0; 2 * j <= weight; ++j) p += MultiPoly(co(rng)) * A().pow(weight - 2 * j) * B().pow(j);
    return p;
  };
  int wa = var_weight(Var::a), wb = var_weight(Var::b);
  REQUIRE(wb == 2 * wa);
  for (int n = 0; n < 40; ++n) {
    MultiPoly p = homogeneous(3), q = homogeneous(4);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK((p * q).graded_degree() == std::optional<int>(*p.graded_degree() + *q.graded_degree()));
  }
  CHECK_FALSE((A() + B()).graded_degree().has_value());
}

TEST_CASE("Eisenstein criterion at (3, H)") {
  CHECK(eisenstein_check(torsion().f, Var::u));
  CHECK(eisenstein_check(U(2) - H(), Var::u));
  CHECK_FALSE(eisenstein_check(U(2) - 9, Var::u));
  CHECK_FALSE(eisenstein_check(U(2) + U() - 3, Var::u));
}

TEST_CASE("reduction modulo 3 and (3, H)") {
  Fraction expected = golden("prop4.f_mod3");
  REQUIRE(expected.den() == MultiPoly(1));
  CHECK(reduce_mod3_and_ideal(torsion().f) == reduce_mod3_and_ideal(expected.num()));
  CHECK(reduce_mod3_and_ideal(H(), true).is_zero());
  CHECK(in_ideal_3H(MultiPoly(3) * A() + H() * B()));
  CHECK_FALSE(in_ideal_3H_squared(H()));
  CHECK(in_ideal_3H_squared(H() * H() + 9 + MultiPoly(3) * H()));
  MultiPoly x = MultiPoly::var(Var::x), y = MultiPoly::var(Var::y);
  CHECK(reduce_mod3_and_ideal((x + y).pow(3)) == x.pow(3) + y.pow(3));
}

TEST_CASE("quotient rings invert through Bezout") {
  auto mod = std::make_shared<const Modulus<Rational>>(Modulus<Rational>{{Rational(-2), Rational(0), Rational(1)}, "x"});
  PolyMod<Rational> x = PolyMod<Rational>::generator(mod);
  PolyMod<Rational> y = x + PolyMod<Rational>(mod, {Rational(3)});
  CHECK(y * y.inverse() == PolyMod<Rational>(mod, {Rational(1)}));
  CHECK(x * x == PolyMod<Rational>(mod, {Rational(2)}));
}

TEST_CASE("solve_linear") {
  std::vector<std::vector<RatFun>> cols = {{RatFun(Rational(1)), RatFun(Rational(1))},
                                           {RatFun(Rational(1)), RatFun(Rational(-1))}};
  auto x = solve_linear(cols, {RatFun(Rational(3)), RatFun(Rational(1))});
  REQUIRE(x.size() == 2);
  CHECK(x[0] == RatFun(Rational(2)));
  CHECK(x[1] == RatFun(Rational(1)));
  CHECK_THROWS_AS(solve_linear({{RatFun(Rational(1)), RatFun(Rational(1))}}, {RatFun(Rational(1)), RatFun(Rational(2))}),
                  Error);
}
