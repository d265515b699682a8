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

#include "pops/curve.hpp"

#include <array>

namespace pops {

namespace {

MultiPoly A_() { return MultiPoly::var(Var::a); }
MultiPoly B_() { return MultiPoly::var(Var::b); }
MultiPoly V(Var v, int p = 1) { return MultiPoly::var(v, p); }

// psi~_3(u, v) coefficients of v^j, j = 0..4, with u replaced by `u`.
std::array<MultiPoly, 5> psi3_tilde_coeffs(const MultiPoly& u) {
  MultiPoly a = A_(), b = B_();
  MultiPoly u2 = u * u, u3 = u2 * u, u4 = u3 * u;
  return {Rational(3) * u4, (a * a + Rational(4) * b) * u3, Rational(3) * a * a * b * u2,
          Rational(3) * a * a * b * b * u, a * a * b * b * b};
}

}  // namespace

WeierstrassCurve WeierstrassCurve::universal() {
  return {A_(), B_(), A_() * B_(), MultiPoly(), MultiPoly()};
}

MultiPoly WeierstrassCurve::xy_equation() const {
  MultiPoly x = V(Var::x), y = V(Var::y);
  return y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6;
}

MultiPoly WeierstrassCurve::uv_equation() {
  MultiPoly a = A_(), b = B_(), u = V(Var::u), v = V(Var::v);
  return v + a * u * v + a * b * v * v - u * u * u - b * u * u * v;
}

MultiPoly WeierstrassCurve::discriminant() const {
  MultiPoly b2 = a1 * a1 + Rational(4) * a2;
  MultiPoly b4 = Rational(2) * a4 + a1 * a3;
  MultiPoly b6 = a3 * a3 + Rational(4) * a6;
  MultiPoly b8 = a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -(b2 * b2 * b8) - Rational(8) * b4 * b4 * b4 - Rational(27) * b6 * b6 + Rational(9) * b2 * b4 * b6;
}

Rational discriminant_unit_ratio() {
  MultiPoly printed = A_().pow(2) * B_().pow(4) * disc_poly();
  MultiPoly standard = WeierstrassCurve::universal().discriminant();
  auto [q, r] = divrem(standard, printed, Var::b);
  if (!r.is_zero() || !q.is_constant())
    throw Error(Errc::CoefficientMismatch, "discriminants differ by a nonconstant factor");
  return q.constant_term();
}

MultiPoly division_polynomial_3() {
  MultiPoly a = A_(), b = B_(), x = V(Var::x);
  return Rational(3) * x.pow(4) + (a * a + Rational(4) * b) * x.pow(3) + Rational(3) * a * a * b * x.pow(2) +
         Rational(3) * a * a * b * b * x + a * a * b * b * b;
}

MultiPoly division_polynomial_3_tilde() {
  auto c = psi3_tilde_coeffs(V(Var::u));
  MultiPoly r;
  for (int j = 0; j < 5; ++j) r += c[j] * V(Var::v, j);
  return r;
}

TorsionData compute_torsion_data() {
  TorsionData t;
  MultiPoly a = A_(), b = B_(), u = V(Var::u), v = V(Var::v), d = V(Var::d);
  t.psi3 = division_polynomial_3();
  t.psi3_tilde = division_polynomial_3_tilde();

  // f~ = psi~(u, v) psi~(u, vbar) through the elementary symmetric functions
  // of the two v-roots of the curve equation at fixed u.
  MultiPoly ab_inv = (a * b).inverse();
  MultiPoly e1 = (b * u * u - a * u - MultiPoly(1)) * ab_inv;
  MultiPoly e2 = -(u.pow(3) * ab_inv);
  auto c = psi3_tilde_coeffs(u);
  std::array<MultiPoly, 5> p;  // power sums v^n + vbar^n
  p[0] = MultiPoly(2);
  p[1] = e1;
  for (int n = 2; n < 5; ++n) p[n] = e1 * p[n - 1] - e2 * p[n - 2];
  std::array<MultiPoly, 5> e2pow;
  e2pow[0] = MultiPoly(1);
  for (int n = 1; n < 5; ++n) e2pow[n] = e2pow[n - 1] * e2;
  MultiPoly ft;
  for (int j = 0; j < 5; ++j) {
    ft += c[j] * c[j] * e2pow[j];
    for (int k = j + 1; k < 5; ++k) ft += c[j] * c[k] * e2pow[j] * p[k - j];
  }
  t.f_tilde = ft;

  MultiPoly f = -(a * a * b * ft).shift(Var::u, -4);
  if (f.low_degree_in(Var::u) < 0 || f.low_degree_in(Var::a) < 0 || f.low_degree_in(Var::b) < 0)
    throw Error(Errc::FactorizationMismatch, "-a^2 b f~ / u^4 is not a polynomial");
  t.f = f;

  // A(v) = psi~(d, v), B(v) = curve equation at u = d.
  auto cd = psi3_tilde_coeffs(d);
  for (int j = 0; j < 5; ++j) t.A += cd[j] * V(Var::v, j);
  MultiPoly beta = MultiPoly(1) + a * d - b * d * d;
  t.B = a * b * v * v + beta * v - d.pow(3);
  std::tie(t.Q1, t.R1) = divrem(t.A, t.B, Var::v);
  MultiPoly Kd = t.R1.coeff(Var::v, 1), Ld = t.R1.coeff(Var::v, 0);

  // Second step: B = Q2 R1 + R2 over the fraction field.
  MultiPoly q2num = a * b * Kd * v + beta * Kd - a * b * Ld;
  MultiPoly r2num = -(d.pow(3) * Kd * Kd) - Ld * (beta * Kd - a * b * Ld);
  if (!(t.B * Kd * Kd == q2num * t.R1 + r2num))
    throw Error(Errc::CoefficientMismatch, "second Euclidean step does not reproduce B");
  t.Q2 = Fraction(q2num, Kd * Kd);
  t.R2 = Fraction(r2num, Kd * Kd);

  t.K = Kd.subs(Var::d, u);
  t.L = Ld.subs(Var::d, u);

  // Bezout coefficients in the chart, then back to the graded ring.
  auto to_ratfun = [](const std::vector<ChartScalar>& cs) {
    std::vector<RatFun> r;
    for (const auto& x : cs) r.push_back(x.to_ratfun());
    return UniPoly<RatFun>(r);
  };
  auto from_ratfun = [](const UniPoly<RatFun>& poly) {
    std::vector<ChartScalar> r;
    for (const auto& x : poly.coeffs()) r.push_back(ChartScalar::from_ratfun(x));
    return r;
  };
  UniPoly<RatFun> fc = to_ratfun(chart_coeffs(LPoly(f), Var::u));
  UniPoly<RatFun> kc = to_ratfun(chart_coeffs(LPoly(t.K), Var::u));
  auto bz = gcd_bezout(fc, kc);
  if (bz.gcd.degree() != 0 || !(bz.gcd.coeff(0) == RatFun(1)))
    throw Error(Errc::FactorizationMismatch, "K is not invertible modulo f");
  t.M = rehomogenize_poly(from_ratfun(bz.m), Var::u, 0);
  t.N = rehomogenize_poly(from_ratfun(bz.n), Var::u, 1);
  if (!((t.N * LPoly(t.K)).reduce_mod(f, Var::u) == LPoly(1)))
    throw Error(Errc::CoefficientMismatch, "N K is not 1 modulo f");

  t.g = (-(t.N * LPoly(t.L))).reduce_mod(f, Var::u);
  t.eisenstein = eisenstein_check(f, Var::u);
  return t;
}

ChartTorsion chart_torsion(const TorsionData& t) {
  return {chart_coeffs(LPoly(t.f), Var::u), chart_coeffs(t.g, Var::u)};
}

TruncSeries<MultiPoly> v_series_symbolic(int order) { return v_series<MultiPoly>(A_(), B_(), order); }

// ---------------------------------------------------------------------------

PadicGauss f9(long re, long im) { return PadicGauss(re, im, 1); }

std::vector<PadicGauss> f9_elements() {
  std::vector<PadicGauss> r;
  for (long im = 0; im < 3; ++im)
    for (long re = 0; re < 3; ++re) r.push_back(f9(re, im));
  return r;
}

int count_points(const PadicGauss& a, const PadicGauss& b, int q) {
  if (q != 3 && q != 9) throw Error(Errc::InvalidCurve, "only F_3 and F_9 are supported");
  PadicGauss sixteen(16, 0, 1);
  if ((a * a * b * b * b * b * (a * a - sixteen * b)).is_zero())
    throw Error(Errc::InvalidCurve, "discriminant vanishes");
  std::vector<PadicGauss> field;
  for (const auto& x : f9_elements())
    if (q == 9 || x.im() == 0) field.push_back(x);
  int n = 1;
  for (const auto& x : field)
    for (const auto& y : field)
      if (y * y + a * x * y + a * b * y == x * x * x + b * x * x) ++n;
  return n;
}

SupersingularReport supersingular_check() {
  SupersingularReport r;
  r.c0_points_f3 = count_points(f9(1, 0), f9(-1, 0), 3);
  r.c0_trace_f3 = 3 + 1 - r.c0_points_f3;
  try {
    count_points(f9(1, 0), f9(1, 0), 3);
  } catch (const Error& e) {
    r.a1_b1_over_f3_singular = e.code() == Errc::InvalidCurve;
  }
  r.locus_matches_H = true;
  for (const auto& a : f9_elements()) {
    for (const auto& b : f9_elements()) {
      int n;
      try {
        n = count_points(a, b, 9);
      } catch (const Error&) {
        continue;
      }
      ++r.pairs_checked;
      bool ss = (9 + 1 - n) % 3 == 0;
      if (ss) ++r.supersingular_pairs;
      if (ss != (a * a + b).is_zero()) r.locus_matches_H = false;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

using Series = TruncSeries<MultiPoly>;

// Complete homogeneous symmetric polynomial h_n(u1, u2).
MultiPoly h_sym(int n) {
  MultiPoly r;
  if (n < 0) return r;
  for (int i = 0; i <= n; ++i) r += V(Var::u1, i) * V(Var::u2, n - i);
  return r;
}

// iota(u) = -v / (u (u + b v)) on the series point (u, v(u)).
Series iota_from(const Series& vs) {
  Series u = Series::variable();
  Series den = u * (u + B_() * vs);
  return -divide(vs, den);
}

}  // namespace

TruncSeries<MultiPoly> inversion_series(int order) { return iota_from(v_series_symbolic(order + 2)).truncate(order); }

TruncSeries<MultiPoly> formal_group_law(int order) {
  Series vs = v_series_symbolic(order + 2);
  // With u_i = T x_i the chord slope and intercept are series in T.
  std::vector<MultiPoly> kc(order + 1), mc(order + 1);
  for (int n = 1; n <= order + 1; ++n) {
    MultiPoly vn = vs.coeff(n);
    if (vn.is_zero()) continue;
    kc[n - 1] = vn * h_sym(n - 1);
    if (n <= order && n >= 2) mc[n] = -(vn * V(Var::u1) * V(Var::u2) * h_sym(n - 2));
  }
  Series k(kc, order), m(mc, order);
  Series sum_u({MultiPoly(), V(Var::u1) + V(Var::u2)}, Series::kExact);
  Series one = Series::constant(MultiPoly(1));
  Series bk = B_() * k;
  Series u3 = A_() * k - (B_() * m) * (one + bk).inverse(order) - sum_u;
  u3 = u3.truncate(order);
  Series iota = iota_from(vs);
  return compose(iota, u3).truncate(order);
}

TruncSeries<MultiPoly> evaluate_homogeneous(const Series& fam, const Series& A, const Series& B) {
  int n = std::min({fam.order(), A.order(), B.order()});
  std::vector<Series> ap{Series::constant(MultiPoly(1))}, bp{Series::constant(MultiPoly(1))};
  for (int k = 1; k <= n; ++k) {
    ap.push_back((ap.back() * A).truncate(n));
    bp.push_back((bp.back() * B).truncate(n));
  }
  Series r(std::vector<MultiPoly>{}, n);
  for (int deg = 1; deg <= n; ++deg) {
    MultiPoly fd = fam.coeff(deg);
    if (fd.is_zero()) continue;
    for (int i = 0; i <= deg; ++i) {
      MultiPoly cij = fd.coeff(Var::u1, i).coeff(Var::u2, deg - i);
      if (cij.is_zero()) continue;
      r += cij * (ap[i] * bp[deg - i]).truncate(n);
    }
  }
  return r.truncate(n);
}

TruncSeries<MultiPoly> multiplication_series(int m, int order) {
  Series F = formal_group_law(order);
  Series u = Series::variable(order);
  Series two = evaluate_homogeneous(F, u, u);
  if (m == 2) return two;
  Series three = evaluate_homogeneous(F, two, u);
  if (m == 3) return three;
  if (m == -3) return compose(inversion_series(order), three).truncate(order);
  throw Error(Errc::UnsolvableSystem, "multiplication series implemented for 2, 3, -3");
}

FglReport check_formal_group_law(int order) {
  FglReport r;
  r.order = order;
  Series F = formal_group_law(order);
  auto map_vars = [](const Series& s, const std::function<MultiPoly(const MultiPoly&)>& fn) { return s.map(fn); };

  Series u1 = Series({MultiPoly(), V(Var::u1)}, order);
  Series unit = map_vars(F, [](const MultiPoly& p) { return p.subs(Var::u2, MultiPoly()); });
  r.unit = unit.agrees_with(u1, order);

  Series swapped = map_vars(F, [](const MultiPoly& p) {
    return p.subs(Var::u1, V(Var::u3)).subs(Var::u2, V(Var::u1)).subs(Var::u3, V(Var::u2));
  });
  r.symmetric = swapped.agrees_with(F, order);

  Series u = Series::variable(order);
  Series inv = evaluate_homogeneous(F, u, inversion_series(order));
  r.inverse = inv.agrees_with(Series(std::vector<MultiPoly>{}, order), order);

  // F(F(x1, x2), x3) against F(x1, F(x2, x3)), both as series in T.
  Series tx3({MultiPoly(), V(Var::u3)}, order);
  Series lhs = evaluate_homogeneous(F, F, tx3);
  Series F23 = map_vars(F, [](const MultiPoly& p) { return p.subs(Var::u2, V(Var::u3)).subs(Var::u1, V(Var::u2)); });
  Series rhs = evaluate_homogeneous(F, u1, F23);
  r.associative = lhs.agrees_with(rhs, order);
  return r;
}

}  // namespace pops
