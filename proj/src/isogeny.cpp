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

#include "pops/isogeny.hpp"

#include <mutex>

namespace pops {

namespace {

MultiPoly V(Var v, int p = 1) { return MultiPoly::var(v, p); }

std::vector<RatFun> to_ratfuns(const std::vector<ChartScalar>& xs) {
  std::vector<RatFun> r;
  for (const auto& x : xs) r.push_back(x.to_ratfun());
  return r;
}

std::vector<ChartScalar> to_chart_scalars(const std::vector<RatFun>& xs) {
  std::vector<ChartScalar> r;
  for (const auto& x : xs) r.push_back(ChartScalar::from_ratfun(x));
  return r;
}

LPoly lift(const ChartField& x, Var main, int weight) { return rehomogenize_poly(x.coords(), main, weight); }

// sum_j coeffs[j] * x^j for LPoly x.
LPoly evaluate_in(const LPoly& poly_in_main, Var main, const LPoly& x) {
  int top = poly_in_main.num().degree_in(main);
  LPoly r;
  for (int j = top; j >= 0; --j) r = r * x + poly_in_main.coeff(main, j);
  return r;
}

}  // namespace

IsogenyData build_isogeny(const IsogenyOptions& opt) {
  IsogenyData out;
  const TorsionData torsion = compute_torsion_data();
  ChartTorsion ct = chart_torsion(torsion);

  auto mod = std::make_shared<Modulus<ChartScalar>>();
  mod->coeffs = ct.f;
  mod->var = "d";
  if (!(mod->coeffs.back() == ChartScalar(1))) throw Error(Errc::NonUnitLeadingCoefficient, "chart torsion polynomial is not monic");
  out.torsion_modulus = mod;
  out.d = ChartField::generator(mod);
  out.e = ChartField(mod, ct.g);

  const int n = opt.v_order;
  ChartField a_c(ChartScalar::c()), b_c(ChartScalar(1));
  ChartSeries A = ChartSeries::constant(a_c), B = ChartSeries::constant(b_c);
  ChartSeries u = ChartSeries::variable(n);
  // v(u) has coefficients in Q[c]; solve there and embed.
  ChartSeries v = v_series<ChartScalar>(ChartScalar::c(), ChartScalar(1), n).map([](const ChartScalar& x) {
    return ChartField(x);
  });

  UVPoint<ChartSeries> P{u, v};
  UVPoint<ChartSeries> Q{ChartSeries::constant(out.d), ChartSeries::constant(out.e)};
  // P - Q = -(-P + Q) and P + Q = -(-P + -Q) are both single chords.
  UVPoint<ChartSeries> minus_P = uv_negate(P, B);
  UVPoint<ChartField> mq = uv_negate(UVPoint<ChartField>{out.d, out.e}, b_c);
  UVPoint<ChartSeries> minus_Q{ChartSeries::constant(mq.u), ChartSeries::constant(mq.v)};
  UVPoint<ChartSeries> P_minus_Q = uv_chord(minus_P, Q, A, B);
  UVPoint<ChartSeries> P_plus_Q = uv_chord(minus_P, minus_Q, A, B);

  ChartSeries up = u * P_minus_Q.u * P_plus_Q.u;
  ChartSeries vp = v * P_minus_Q.v * P_plus_Q.v;
  if (up.order() < opt.residual_order || vp.order() < opt.residual_order || up.order() < opt.u_prime_terms ||
      vp.order() < opt.v_prime_terms)
    throw Error(Errc::TruncationInsufficient, "image series known only to orders " + std::to_string(up.order()) +
                                                  ", " + std::to_string(vp.order()));
  out.u_prime_c = up;
  out.v_prime_c = vp;
  out.kappa_c = up.coeff(1);
  out.lambda_c = vp.coeff(3);

  // Minimal polynomial of kappa over Q(c).
  std::vector<ChartField> pw{ChartField(mod, {ChartScalar(1)})};
  for (int j = 1; j <= 4; ++j) pw.push_back(pw.back() * out.kappa_c);
  std::vector<std::vector<RatFun>> cols;
  for (int j = 0; j < 4; ++j) cols.push_back(to_ratfuns(pw[j].coords()));
  std::vector<RatFun> x = solve_linear(cols, to_ratfuns(pw[4].coords()));
  out.W_c.clear();
  for (int j = 0; j < 4; ++j) out.W_c.push_back(-x[j]);
  out.W_c.push_back(RatFun(1));

  // Fit v + a'uv + a'b'v^2 = u^3 + b'u^2 v to U = u', V = (kappa^3/lambda) v'.
  // The image coefficients lie in Q(c)(kappa), where the arithmetic is cheaper.
  const int r = opt.residual_order;
  auto kmod = std::make_shared<Modulus<RatFun>>();
  kmod->coeffs = out.W_c;
  kmod->var = "kappa";
  using KF = PolyMod<RatFun>;
  auto to_k = [&](const ChartField& z) { return KF(kmod, solve_linear(cols, to_ratfuns(ChartField(mod, z.coords()).coords()))); };
  std::vector<KF> uc, vc;
  for (int k = 0; k <= r; ++k) {
    uc.push_back(to_k(up.coeff(k)));
    vc.push_back(to_k(vp.coeff(k)));
  }
  KF kappa = KF::generator(kmod);
  KF k3 = kappa * kappa * kappa, k4 = k3 * kappa;
  TruncSeries<KF> U(uc, r);
  TruncSeries<KF> Vs = (k3 * vc[3].inverse()) * TruncSeries<KF>(vc, r);
  TruncSeries<KF> U3 = U * U * U, UV = U * Vs, U2V = U * UV, V2 = Vs * Vs;
  KF ap = (U3.coeff(4) - Vs.coeff(4)) * k4.inverse();
  KF bp = (Vs.coeff(5) + ap * UV.coeff(5) - U3.coeff(5)) * (k4 * kappa).inverse();
  TruncSeries<KF> residual = Vs + ap * UV + (ap * bp) * V2 - U3 - bp * U2V;
  out.residual_valuation = residual.valuation();
  if (out.residual_valuation <= r)
    throw Error(Errc::FitFailed, "curve equation residual is nonzero at u^" + std::to_string(out.residual_valuation));
  out.a_prime_c = ap.coords();
  std::vector<RatFun> bx = bp.coords();
  for (int j = 1; j < 4; ++j)
    if (!bx[j].is_zero()) throw Error(Errc::FitFailed, "b' is not a scalar");
  out.b_prime_c = bx[0];

  // Back to the graded ring.
  out.kappa = lift(out.kappa_c, Var::d, -2);
  out.lambda = lift(out.lambda_c, Var::d, -6);
  out.u_prime.assign(opt.u_prime_terms + 1, LPoly());
  for (int k = 1; k <= opt.u_prime_terms; ++k) out.u_prime[k] = lift(up.coeff(k), Var::d, k - 3);
  out.v_prime.assign(opt.v_prime_terms + 1, LPoly());
  for (int k = 3; k <= opt.v_prime_terms; ++k) out.v_prime[k] = lift(vp.coeff(k), Var::d, k - 9);
  out.W = rehomogenize_poly(to_chart_scalars(out.W_c), Var::kappa, -8);
  out.a_prime = rehomogenize_poly(to_chart_scalars(out.a_prime_c), Var::kappa, 3);
  out.b_prime = rehomogenize(ChartScalar::from_ratfun(out.b_prime_c), 6);
  return out;
}

const IsogenyData& isogeny_data() {
  static std::once_flag once;
  static std::unique_ptr<IsogenyData> data;
  std::call_once(once, [] { data = std::make_unique<IsogenyData>(build_isogeny()); });
  return *data;
}

std::vector<RatFun> kappa_coordinates(const IsogenyData& data, const ChartField& x) {
  std::vector<ChartField> pw{ChartField(data.torsion_modulus, {ChartScalar(1)})};
  for (int j = 1; j < 4; ++j) pw.push_back(pw.back() * data.kappa_c);
  std::vector<std::vector<RatFun>> cols;
  for (const auto& p : pw) cols.push_back(to_ratfuns(p.coords()));
  return solve_linear(cols, to_ratfuns(ChartField(data.torsion_modulus, x.coords()).coords()));
}

LPoly kappa_min_poly(const IsogenyData& data) {
  MultiPoly f_d = compute_torsion_data().f.subs(Var::u, V(Var::d));
  LPoly res = evaluate_in(data.W, Var::kappa, data.kappa).reduce_mod(f_d, Var::d);
  if (!res.is_zero()) throw Error(Errc::ResidueNonzero, "W(kappa) mod f = " + res.to_string());
  return data.W;
}

LPoly kappa_identity_residue(const IsogenyData& data) {
  TorsionData t = compute_torsion_data();
  MultiPoly f_d = t.f.subs(Var::u, V(Var::d));
  LPoly rhs = LPoly(V(Var::a)) * t.g.subs(Var::u, V(Var::d)) - LPoly(V(Var::d, 2));
  return (data.kappa - rhs).reduce_mod(f_d, Var::d);
}

bool norm_identity_holds(const IsogenyData& data) {
  // u(-Q) = -e / (d (d + b e)) with b = 1 in the chart.
  ChartField u_minus_q = -(data.e * (data.d * (data.d + data.e)).inverse());
  return u_minus_q * data.d == data.kappa_c;
}

FrobeniusReport frobenius_reduction_check(const IsogenyData& data) {
  FrobeniusReport r;
  // p = q mod (3, d), and additionally mod H when at_H.
  auto congruent = [](const LPoly& p, const LPoly& q, bool at_H) {
    LPoly diff = p - q;
    MultiPoly n = diff.num().subs(Var::d, MultiPoly());
    return reduce_mod3_and_ideal(n, at_H).is_zero();
  };
  r.u_prime_is_cube = true;
  for (std::size_t k = 1; k < data.u_prime.size(); ++k)
    if (!congruent(data.u_prime[k], LPoly(k == 3 ? 1 : 0), true)) r.u_prime_is_cube = false;
  r.kappa_zero_mod_3d = congruent(data.kappa, LPoly(), false);

  MultiPoly a = V(Var::a), b = V(Var::b);
  LPoly kd = data.kappa;
  LPoly kappa_prime = -(kd * kd * kd) + LPoly(Rational(6) * b.pow(-2)) * kd - LPoly((a * a - Rational(8) * b) * b.pow(-4));
  r.minus_kappa_prime_is_H = congruent(-kappa_prime, LPoly((a * a + b) * b.pow(-4)), false);

  MultiPoly u = V(Var::u), H = a * a + b;
  MultiPoly expected = u * u * (b.pow(4) * u.pow(6) + a * b * H * u.pow(3) - H);
  r.f_mod3_matches = reduce_mod3_and_ideal(compute_torsion_data().f - expected, false).is_zero();
  return r;
}

DualRelations dual_relations(const IsogenyData& data) {
  DualRelations r;
  MultiPoly a = V(Var::a), b = V(Var::b);
  const LPoly& W = data.W;
  if (W.disc() != 0) throw Error(Errc::ResidueNonzero, "W has discriminant denominators");
  LPoly kappa(V(Var::kappa));
  LPoly w0 = W.coeff(Var::kappa, 0);
  // kappa^-1 = -(W - W(0)) / (kappa W(0))
  LPoly tail;
  for (int j = 1; j <= W.num().degree_in(Var::kappa); ++j)
    tail = tail + W.coeff(Var::kappa, j) * LPoly(V(Var::kappa, j - 1));
  LPoly kappa_inv = -(tail * LPoly(w0.num().inverse()));
  r.kappa_prime = (LPoly(Rational(-3) * b.pow(-4)) * kappa_inv).reduce_mod(W.num(), Var::kappa);
  r.relation1_residue =
      (LPoly(b.pow(4)) * kappa * r.kappa_prime + LPoly(3)).reduce_mod(W.num(), Var::kappa);
  LPoly printed = -(kappa * kappa * kappa) + LPoly(Rational(6) * b.pow(-2)) * kappa -
                  LPoly((a * a - Rational(8) * b) * b.pow(-4));
  r.relation2 = (r.kappa_prime - printed).reduce_mod(W.num(), Var::kappa).is_zero();
  if (!r.relation1_residue.is_zero()) throw Error(Errc::ResidueNonzero, r.relation1_residue.to_string());
  if (!r.relation2) throw Error(Errc::ResidueNonzero, "kappa' differs from the printed cubic");
  r.root_product = Fraction(w0);  // (-1)^4 times the constant term

  TruncSeries<MultiPoly> three = multiplication_series(3, 2);
  r.three_star_chart = to_chart(LPoly(three.coeff(1))).to_ratfun().num().coeff(0);
  Rational product_chart = to_chart(w0).to_ratfun().num().coeff(0);
  r.s = r.three_star_chart / product_chart;
  return r;
}

ComposeReport compose_check(const IsogenyData& data, int order) {
  ComposeReport rep;
  rep.order = order;
  if (order > data.u_prime_c.order()) throw Error(Errc::TruncationInsufficient, "u' is not known to the requested order");
  auto kmod = std::make_shared<Modulus<RatFun>>();
  kmod->coeffs = data.W_c;
  kmod->var = "kappa";
  using K = PolyMod<RatFun>;
  auto constant = [&](const RatFun& x) { return K(kmod, {x}); };
  K kappa = K::generator(kmod);
  auto from_coords = [&](const std::vector<RatFun>& xs, const K& at_kappa, const std::function<K(const RatFun&)>& coef) {
    K r = constant(RatFun());
    K p = constant(RatFun(1));
    for (const auto& x : xs) {
      r += coef(x) * p;
      p *= at_kappa;
    }
    return r;
  };
  auto as_constant = [&](const RatFun& x) { return constant(x); };

  K c_prime = from_coords(data.a_prime_c, kappa, as_constant);
  K kappa_prime = constant(RatFun(-3)) * kappa.inverse();
  auto eval_at_c_prime = [&](const RatFun& x) {
    auto horner = [&](const QPoly& p) {
      K acc = constant(RatFun());
      for (int j = p.degree(); j >= 0; --j) acc = acc * c_prime + constant(RatFun(p.coeff(j)));
      return acc;
    };
    return horner(x.num()) * horner(x.den()).inverse();
  };

  rep.kappa_prime_is_root = from_coords(data.W_c, kappa_prime, eval_at_c_prime).is_zero();
  rep.c_double_prime = from_coords(data.a_prime_c, kappa_prime, eval_at_c_prime) == constant(RatFun(QPoly::x()));

  std::vector<K> psi{constant(RatFun())}, psi_dual{constant(RatFun())};
  for (int k = 1; k <= order; ++k) {
    std::vector<RatFun> xs = kappa_coordinates(data, data.u_prime_c.coeff(k));
    psi.push_back(from_coords(xs, kappa, as_constant));
    psi_dual.push_back(from_coords(xs, kappa_prime, eval_at_c_prime));
  }
  TruncSeries<K> composite = compose(TruncSeries<K>(psi_dual, order), TruncSeries<K>(psi, order));

  TruncSeries<MultiPoly> m3 = multiplication_series(-3, order);
  for (int k = 1; k <= order; ++k) {
    RatFun target = to_chart(LPoly(m3.coeff(k))).to_ratfun();
    rep.minus_three.push_back(target);
    if (!(composite.coeff(k) == constant(target)))
      throw Error(Errc::MismatchAtOrder, "psi' o psi and [-3] differ at u^" + std::to_string(k));
  }
  return rep;
}

}  // namespace pops
