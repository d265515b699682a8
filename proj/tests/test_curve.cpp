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

#include "pops/curve.hpp"
#include "pops/powerops.hpp"
#include "support.hpp"

using namespace pops;
using pops::testing::golden;

namespace {

MultiPoly A() { return MultiPoly::var(Var::a); }
MultiPoly B() { return MultiPoly::var(Var::b); }
MultiPoly U(int k = 1) { return MultiPoly::var(Var::u, k); }
MultiPoly V(int k = 1) { return MultiPoly::var(Var::v, k); }

const TorsionData& torsion() {
  static const TorsionData t = compute_torsion_data();
  return t;
}

// #C(F_3) for y^2 + a xy + ab y = x^3 + b x^2 by listing affine points.
int brute_count_f3(int a, int b) {
  int n = 1;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (((y * y + a * x * y + a * b * y - x * x * x - b * x * x) % 3 + 3) % 3 == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("division polynomial psi_3") {
  MultiPoly x = MultiPoly::var(Var::x);
  MultiPoly printed = MultiPoly(3) * x.pow(4) + (A().pow(2) + MultiPoly(4) * B()) * x.pow(3) +
                      MultiPoly(3) * A().pow(2) * B() * x.pow(2) + MultiPoly(3) * A().pow(2) * B().pow(2) * x +
                      A().pow(2) * B().pow(3);
  CHECK(division_polynomial_3() == printed);
  // Mod 3 only the cubic coefficient H and the constant a^2 b^3 survive.
  CHECK(mod3(division_polynomial_3()) == mod3((A().pow(2) + B()) * x.pow(3) + A().pow(2) * B().pow(3)));
  CHECK(Fraction(division_polynomial_3_tilde()) ==
        parse_expression("3 u^4 + (a^2 + 4 b) u^3 v + 3 a^2 b u^2 v^2 + 3 a^2 b^2 u v^3 + a^2 b^3 v^4"));
}

TEST_CASE("discriminant against the b2, b4, b6, b8 formulas") {
  WeierstrassCurve C = WeierstrassCurve::universal();
  MultiPoly b2 = C.a1 * C.a1 + MultiPoly(4) * C.a2;
  MultiPoly b4 = MultiPoly(2) * C.a4 + C.a1 * C.a3;
  MultiPoly b6 = C.a3 * C.a3 + MultiPoly(4) * C.a6;
  MultiPoly b8 = C.a1 * C.a1 * C.a6 + MultiPoly(4) * C.a2 * C.a6 - C.a1 * C.a3 * C.a4 + C.a2 * C.a3 * C.a3 - C.a4 * C.a4;
  MultiPoly delta = -b2 * b2 * b8 - MultiPoly(8) * b4.pow(3) - MultiPoly(27) * b6 * b6 + MultiPoly(9) * b2 * b4 * b6;
  CHECK(C.discriminant() == delta);
  Rational ratio = discriminant_unit_ratio();
  CHECK(delta == ratio * (A().pow(2) * B().pow(4) * disc_poly()));
  CHECK(ratio == 1);
}

TEST_CASE("the two charts describe the same curve") {
  // v^3 * F(u/v, 1/v) = uv-equation, up to sign.
  MultiPoly xy = WeierstrassCurve::universal().xy_equation();
  MultiPoly x = MultiPoly::var(Var::x), y = MultiPoly::var(Var::y);
  MultiPoly expected = y.pow(2) + A() * x * y + A() * B() * y - x.pow(3) - B() * x.pow(2);
  CHECK(xy == expected);
  Fraction sub = Fraction(xy.subs(Var::x, U() * V().pow(-1)).subs(Var::y, V().pow(-1))) * Fraction(V(3));
  CHECK(sub == Fraction(WeierstrassCurve::uv_equation()));
}

TEST_CASE("torsion data: f, g and the conjugate product") {
  const TorsionData& t = torsion();
  CHECK(Fraction(t.f) == golden("prop4.f"));
  CHECK(Fraction(t.g) == golden("prop4.g"));
  CHECK(Fraction(t.f_tilde) == golden("appA.f_tilde"));
  CHECK(Fraction(t.f_tilde) == Fraction(-U(4) * t.f) / Fraction(A().pow(2) * B()));
  CHECK(t.f.degree_in(Var::u) == 8);
  CHECK(t.g.num().degree_in(Var::u) == 7);
  CHECK(t.eisenstein);
}

TEST_CASE("g has constant term 18 / (a (a^2 - 16b))") {
  Fraction g0(torsion().g.coeff(Var::u, 0));
  CHECK(g0 == Fraction(MultiPoly(18)) / Fraction(A() * disc_poly()));
}

TEST_CASE("(d, g(d)) is a point of exact order 3 on the scheme f(d) = 0") {
  const TorsionData& t = torsion();
  LPoly v = t.g, u(U());
  LPoly on_curve = v + LPoly(A()) * u * v + LPoly(A() * B()) * v * v - u * u * u - LPoly(B()) * u * u * v;
  CHECK(on_curve.reduce_mod(t.f, Var::u).is_zero());
  // psi3-tilde(u, v) vanishes too.
  LPoly psi = LPoly(MultiPoly(3)) * u * u * u * u + LPoly(A().pow(2) + MultiPoly(4) * B()) * u * u * u * v +
              LPoly(MultiPoly(3) * A().pow(2) * B()) * u * u * v * v +
              LPoly(MultiPoly(3) * A().pow(2) * B().pow(2)) * u * v * v * v + LPoly(A().pow(2) * B().pow(3)) * v * v * v * v;
  CHECK(psi.reduce_mod(t.f, Var::u).is_zero());
}

TEST_CASE("N K = 1 mod f and the remaining intermediates") {
  const TorsionData& t = torsion();
  CHECK((t.N * LPoly(t.K)).reduce_mod(t.f, Var::u) == LPoly(1));
  CHECK(Fraction(t.K) == golden("appA.K"));
  CHECK(Fraction(t.L) == golden("appA.L"));
}

TEST_CASE("chart images of f and g") {
  ChartTorsion ct = chart_torsion(torsion());
  REQUIRE(ct.f.size() == 9);
  CHECK(ct.f.back() == ChartScalar(1));
  CHECK(ct.f[0] == ChartScalar(-3));
}

TEST_CASE("negation of the generic series point is the inversion series") {
  auto iota = inversion_series(12);
  CHECK(iota.coeff(1) == MultiPoly(-1));
  CHECK(iota.coeff(2) == A());
  using TS = TruncSeries<MultiPoly>;
  auto v = v_series_symbolic(15);
  UVPoint<TS> p{TS::variable(15), v};
  UVPoint<TS> q = uv_negate(p, TS::constant(B()));
  for (int k = 0; k <= std::min(12, q.u.order()); ++k) CHECK(q.u.coeff(k) == iota.coeff(k));
  CHECK(q.u.order() >= 12);
  // -P lies on the curve to the known order.
  TS eq = q.v + TS::constant(A()) * q.u * q.v + TS::constant(A() * B()) * q.v * q.v - q.u * q.u * q.u -
          TS::constant(B()) * q.u * q.u * q.v;
  for (int k = 0; k <= eq.order(); ++k) CHECK(eq.coeff(k).is_zero());
}

TEST_CASE("chord law rejects equal u-coordinates") {
  UVPoint<MultiPoly> p{A(), B()};
  CHECK_THROWS_AS(uv_chord(p, p, A(), B()), Error);
}

TEST_CASE("formal group law axioms through order 8") {
  FglReport r = check_formal_group_law(8);
  CHECK(r.order >= 8);
  CHECK(r.unit);
  CHECK(r.symmetric);
  CHECK(r.inverse);
  CHECK(r.associative);
  auto F = formal_group_law(4);
  MultiPoly u1 = MultiPoly::var(Var::u1), u2 = MultiPoly::var(Var::u2);
  CHECK(F.coeff(0).is_zero());
  CHECK(F.coeff(1) == u1 + u2);
  auto m3 = multiplication_series(-3, 4);
  CHECK(m3.coeff(1) == MultiPoly(-3));
  CHECK(multiplication_series(2, 4).coeff(1) == MultiPoly(2));
}

TEST_CASE("(0, 0) has exact order 4") {
  Fraction a(A()), b(B()), zero(0);
  XYCurve<Fraction> C{a, b, a * b, zero, zero};
  XYPoint<Fraction> p{zero, zero, false};
  REQUIRE(C.contains(p));
  XYPoint<Fraction> p2 = C.scalar_mul(2, p);
  CHECK_FALSE(p2.infinity);
  CHECK(C.contains(p2));
  CHECK(p2.x == Fraction(-B()));
  XYPoint<Fraction> p3 = C.add(p2, p);
  CHECK(C.contains(p3));
  CHECK(C.scalar_mul(4, p).infinity);
  XYPoint<Fraction> p1 = C.scalar_mul(1, p);
  CHECK((p1.x == p.x && p1.y == p.y && !p1.infinity));
  CHECK(C.add(p2, p2).infinity);
}

TEST_CASE("point counts over F_3 and F_9") {
  CHECK(count_points(PadicGauss(1, 0, 1), PadicGauss(-1, 0, 1), 3) == 4);
  CHECK(brute_count_f3(1, -1) == 4);
  for (int a = 1; a < 3; ++a)
    for (int b = 1; b < 3; ++b) {
      bool singular = (a * a - 16 * b) % 3 == 0;
      if (singular) {
        CHECK_THROWS_AS(count_points(PadicGauss(a, 0, 1), PadicGauss(b, 0, 1), 3), Error);
      } else {
        CHECK(count_points(PadicGauss(a, 0, 1), PadicGauss(b, 0, 1), 3) == brute_count_f3(a, b));
      }
    }
  CHECK_THROWS_AS(count_points(PadicGauss(0, 0, 1), PadicGauss(1, 0, 1), 3), Error);
}

TEST_CASE("C_0 has a 2-torsion point fixed by negation") {
  PadicGauss one(1, 0, 1), zero(0, 0, 1);
  XYCurve<PadicGauss> C0{one, -one, -one, zero, zero};
  XYPoint<PadicGauss> p{one, zero, false};
  REQUIRE(C0.contains(p));
  XYPoint<PadicGauss> n = C0.negate(p);
  CHECK((n.x == p.x && n.y == p.y));
  CHECK(C0.add(p, p).infinity);
}

TEST_CASE("supersingular locus is H = 0") {
  SupersingularReport r = supersingular_check();
  CHECK(r.c0_points_f3 == 4);
  CHECK(r.c0_trace_f3 == 0);
  CHECK(r.locus_matches_H);
  CHECK(r.a1_b1_over_f3_singular);
  CHECK(r.pairs_checked > r.supersingular_pairs);
  CHECK(r.supersingular_pairs > 0);
}
