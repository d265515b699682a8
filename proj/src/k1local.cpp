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

#include "pops/k1local.hpp"

#include <algorithm>

#include "pops/error.hpp"
#include "pops/powerops.hpp"

namespace pops {

namespace {

PadicGauss padic_of(const Rational& q, int prec) {
  PadicGauss num(q.get_num(), Integer(0), prec);
  PadicGauss den(q.get_den(), Integer(0), prec);
  if (!den.is_unit()) throw Error(Errc::NotLocal, "denominator of " + to_string(q) + " is divisible by 3");
  return num * den.inverse();
}

LaurentSeries zero_series(int order, int prec) { return LaurentSeries(order + 1, {}, order, prec); }

LaurentSeries constant_series(const PadicGauss& c, int order, int prec) {
  return LaurentSeries::monomial(c, 0, order, prec);
}

// A Laurent polynomial in `main` (and i) as a series in t = main^-1.
LaurentSeries series_of(const MultiPoly& p, Var main, int order, int prec) {
  LaurentSeries acc = zero_series(order, prec);
  for (const auto& [m, q] : p.terms()) {
    for (int k = 0; k < kNumVars; ++k) {
      auto v = static_cast<Var>(k);
      if (m[k] != 0 && v != main && v != Var::i)
        throw Error(Errc::ParseError, "unexpected variable " + std::string(var_name(v)) + " in K(1)-local input");
    }
    PadicGauss c = padic_of(q, prec);
    int ie = ((m[static_cast<int>(Var::i)] % 4) + 4) % 4;
    for (int j = 0; j < ie; ++j) c = c * PadicGauss::i(prec);
    int e = -m[static_cast<int>(main)];
    if (e > order) continue;
    acc = acc + LaurentSeries::monomial(c, e, order, prec);
  }
  return acc;
}

// sum_{n >= 1} r^(n-1) t^(step n) through t^order.
LaurentSeries geometric(long r, int step, int order, int prec) {
  std::vector<PadicGauss> c;
  PadicGauss pw(1, 0, prec);
  for (int k = step; k <= order; ++k) {
    if (k % step == 0) {
      c.push_back(pw);
      pw = pw * PadicGauss(r, 0, prec);
    } else {
      c.push_back(PadicGauss(0, 0, prec));
    }
  }
  return LaurentSeries(step, std::move(c), order, prec);
}

bool same_to(const LaurentSeries& x, const LaurentSeries& y, int order) {
  for (int k = std::min(x.low(), y.low()); k <= order; ++k)
    if (!(x.coeff(k) == y.coeff(k))) return false;
  return true;
}

AlphaSolution iterate(K1Variable v, int M, int N, const LaurentSeries& g) {
  if (M < 1 || N < 2) throw Error(Errc::BoundExceeded, "K(1)-local solve needs M >= 1 and N >= 2");
  LaurentSeries three = constant_series(PadicGauss(3, 0, N), M, N);
  LaurentSeries six = constant_series(PadicGauss(6, 0, N), M, N);
  LaurentSeries alpha = zero_series(M, N);
  // Each pass fixes at least one more t-adic or 3-adic digit; M + N passes
  // bound the contraction.
  int limit = M + N + 2;
  for (int pass = 1; pass <= limit; ++pass) {
    LaurentSeries a2 = alpha * alpha;
    LaurentSeries next = ((three + six * a2 - a2 * a2) * g).truncate(M, N);
    if (same_to(next, alpha, M)) {
      AlphaSolution sol;
      sol.variable = v;
      sol.alpha = next;
      sol.h_order = M;
      sol.padic_precision = N;
      sol.passes = pass;
      return sol;
    }
    alpha = next;
  }
  throw Error(Errc::NoConvergence, "alpha iteration did not stabilize in " + std::to_string(limit) + " passes");
}

Var main_var(K1Variable v) { return v == K1Variable::h ? Var::h : Var::c; }

LaurentSeries evaluate(const QuotientElement& e, const AlphaSolution& sol, int order) {
  int N = sol.padic_precision;
  Var main = main_var(sol.variable);
  LaurentSeries acc = zero_series(order, N);
  LaurentSeries apow = constant_series(PadicGauss(1, 0, N), order + 8, N);
  for (int k = 0; k < 4; ++k) {
    // A coefficient of main-degree d times alpha^k is known through
    // t^(h_order - d + (k-1) val alpha); a generous series order suffices.
    LaurentSeries coeff = series_of(e.coords[k], main, order + 8, N);
    acc = acc + coeff * apow;
    apow = apow * sol.alpha;
  }
  return acc.truncate(order, N);
}

}  // namespace

AlphaSolution solve_alpha(int M, int N) { return iterate(K1Variable::h, M, N, geometric(9, 1, M, N)); }

AlphaSolution solve_alpha_c(int M, int N) { return iterate(K1Variable::c, M, N, geometric(8, 2, M, N)); }

LaurentSeries w_residual(const AlphaSolution& sol) {
  int N = sol.padic_precision, M = sol.h_order;
  Var main = main_var(sol.variable);
  MultiPoly t = sol.variable == K1Variable::h ? MultiPoly::var(Var::h) - MultiPoly(9)
                                              : MultiPoly::var(Var::c, 2) - MultiPoly(8);
  const LaurentSeries& a = sol.alpha;
  LaurentSeries a2 = a * a;
  LaurentSeries lin = series_of(t, main, M + 4, N);
  LaurentSeries r = a2 * a2 - constant_series(PadicGauss(6, 0, N), M, N) * a2 + lin * a -
                    constant_series(PadicGauss(3, 0, N), M, N);
  int order = sol.variable == K1Variable::h ? M - 1 : M - 2;
  return r.truncate(order, N);
}

LaurentSeries psiF_h(const AlphaSolution& sol) {
  if (sol.variable != K1Variable::h) throw Error(Errc::ReductionMismatch, "psiF_h needs the h-expansion of alpha");
  return evaluate(psi_formulas().psi_h, sol, sol.h_order - 2);
}

LaurentSeries psiF_c(const AlphaSolution& sol) {
  if (sol.variable != K1Variable::c) throw Error(Errc::ReductionMismatch, "psiF_c needs the c-expansion of alpha");
  return evaluate(psi_formulas().psi_c, sol, sol.h_order - 1);
}

Integer K1Expansion::coeff(int exponent) const {
  auto it = coefficients.find(exponent);
  return it == coefficients.end() ? Integer(0) : it->second;
}

std::string K1Expansion::to_string() const {
  std::string var = variable == K1Variable::h ? "h" : "c";
  std::string s;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    const auto& [e, c] = *it;
    if (c == 0) continue;
    Integer a = abs(c);
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    std::string body = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
    if (s.empty()) {
      s = (c < 0 ? "-" : "") + body;
    } else {
      s += (c < 0 ? " - " : " + ") + body;
    }
  }
  if (s.empty()) s = "0";
  return s + " + O(" + var + "^" + std::to_string(lowest_exponent - 1) + ")";
}

namespace {

std::map<int, Integer> integer_lift(const LaurentSeries& s, int lowest_exponent) {
  std::map<int, Integer> out;
  for (int k = s.low(); k <= -lowest_exponent; ++k) {
    PadicGauss c = s.coeff(k);
    if (c.symmetric_im() != 0)
      throw Error(Errc::PrecisionInsufficient,
                  "coefficient of exponent " + std::to_string(-k) + " has imaginary part " + c.to_string());
    Integer re = c.symmetric_re();
    if (re != 0) out[-k] = re;
  }
  return out;
}

LaurentSeries expansion_series(K1Variable v, int terms, int N) {
  if (v == K1Variable::h) return psiF_h(solve_alpha(terms + 2, N));
  return psiF_c(solve_alpha_c(terms + 1, N));
}

}  // namespace

K1Expansion k1_expansion(K1Variable v, int terms, int N) {
  if (terms < 0) throw Error(Errc::BoundExceeded, "terms must be nonnegative");
  auto first = integer_lift(expansion_series(v, terms, N), -terms);
  auto second = integer_lift(expansion_series(v, terms, N + 8), -terms);
  if (first != second)
    throw Error(Errc::PrecisionInsufficient,
                "integer lifts at 3^" + std::to_string(N) + " and 3^" + std::to_string(N + 8) + " disagree");
  K1Expansion out;
  out.variable = v;
  out.coefficients = std::move(first);
  out.lowest_exponent = -terms;
  out.precision = N;
  return out;
}

UniqueRootReport unique_root_check() {
  UniqueRootReport r;
  MultiPoly alpha = MultiPoly::var(Var::alpha);
  r.w_mod3 = mod3(AlphaQuotient::in_h().w());
  MultiPoly target = mod3(alpha * (alpha.pow(3) + MultiPoly::var(Var::h)));
  r.factors = r.w_mod3 == target;
  r.zero_is_root = r.w_mod3.subs(Var::alpha, MultiPoly(0)).is_zero();
  // A root of alpha^3 + h in the h^-1-adic valuation needs 3 v = v(h) = -1.
  bool any = false;
  for (int v = -4; v <= 4; ++v) any = any || 3 * v == -1;
  r.cube_root_obstructed = !any;
  return r;
}

bool alpha_zero_mod_3(const AlphaSolution& sol) {
  for (int k = sol.alpha.low(); k <= sol.h_order; ++k)
    if (sol.alpha.coeff(k).valuation() < 1) return false;
  return true;
}

bool h_c_agreement(int terms, int N) {
  LaurentSeries ph = psiF_h(solve_alpha(terms + 2, N));  // in h^-1 through h^-terms
  LaurentSeries pc = psiF_c(solve_alpha_c(2 * terms + 4, N));
  // In s = c^-1: h = s^-2 + 1, h^-1 = s^2 / (1 + s^2).
  int order = 2 * terms;
  LaurentSeries h = LaurentSeries(-2, {PadicGauss(1, 0, N), PadicGauss(0, 0, N), PadicGauss(1, 0, N)}, order + 10, N);
  LaurentSeries t = h.invert().truncate(order + 10, N);
  LaurentSeries lhs = zero_series(order, N);
  for (int k = ph.low(); k <= ph.order(); ++k) {
    PadicGauss c = ph.coeff(k);
    if (c.is_zero()) continue;
    LaurentSeries base = k < 0 ? h : t;
    LaurentSeries pw = constant_series(PadicGauss(1, 0, N), order + 10, N);
    for (int j = 0; j < std::abs(k); ++j) pw = pw * base;
    lhs = lhs + constant_series(c, order + 10, N) * pw;
  }
  LaurentSeries rhs = pc * pc + constant_series(PadicGauss(1, 0, N), order + 10, N);
  // h-coefficients below h^-terms are unknown, which in s starts at s^(2 terms + 2).
  int common = std::min({lhs.order(), rhs.order(), 2 * terms + 1});
  return same_to(lhs, rhs, common);
}

}  // namespace pops
