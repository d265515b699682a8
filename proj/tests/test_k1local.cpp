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

#include <vector>

#include "pops/error.hpp"
#include "pops/k1local.hpp"
#include "pops/powerops.hpp"
#include "support.hpp"

using namespace pops;
using pops::testing::golden;

namespace {

// Truncated power series in t with coefficients mod m, t^0..t^(n-1).
using Series = std::vector<Integer>;

Integer mod(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

Series mul(const Series& x, const Series& y, const Integer& m) {
  Series r(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; i + j < x.size(); ++j) r[i + j] += x[i] * y[j];
  for (auto& c : r) c = mod(c, m);
  return r;
}

// Multiplication by t.
Series shift(const Series& x) {
  Series r(x.size(), 0);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) r[i + 1] = x[i];
  return r;
}

Series combine(const std::vector<std::pair<long, Series>>& parts, const Integer& m) {
  Series r(parts.front().second.size(), 0);
  for (const auto& [k, s] : parts)
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += k * s[i];
  for (auto& c : r) c = mod(c, m);
  return r;
}

// 1 / x for x with constant term 1.
Series invert_unit(const Series& x, const Integer& m) {
  Series r(x.size(), 0);
  r[0] = 1;
  for (std::size_t n = 1; n < x.size(); ++n) {
    Integer acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc -= x[k] * r[n - k];
    r[n] = mod(acc, m);
  }
  return r;
}

// Root of t w(alpha) = t alpha^4 - 6 t alpha^2 + (1 - 9 t) alpha - 3 t by
// Newton's method, with derivative 4 t alpha^3 - 12 t alpha + 1 - 9 t.
Series newton_alpha(int n, const Integer& m) {
  Series one(n, 0), alpha(n, 0);
  one[0] = 1;
  for (int pass = 0; pass < 2 * n + 8; ++pass) {
    Series a2 = mul(alpha, alpha, m), a3 = mul(a2, alpha, m), a4 = mul(a2, a2, m);
    Series tw = combine({{1, shift(a4)}, {-6, shift(a2)}, {1, alpha}, {-9, shift(alpha)}, {-3, shift(one)}}, m);
    Series dtw = combine({{4, shift(a3)}, {-12, shift(alpha)}, {1, one}, {-9, shift(one)}}, m);
    Series step = mul(tw, invert_unit(dtw, m), m);
    alpha = combine({{1, alpha}, {-1, step}}, m);
  }
  return alpha;
}

Fraction fraction_of(const K1Expansion& e, Var v) {
  int shift = -e.lowest_exponent;
  MultiPoly num;
  for (const auto& [k, c] : e.coefficients) num += Rational(c) * MultiPoly::var(v, k + shift);
  return Fraction(num, MultiPoly::var(v, shift));
}

}  // namespace

TEST_CASE("alpha starts 3 t and vanishes mod 3") {
  AlphaSolution sol = solve_alpha(8, 10);
  CHECK(sol.alpha.coeff(0).is_zero());
  CHECK(sol.alpha.coeff(1).with_precision(2) == PadicGauss(3, 0, 2));
  CHECK(alpha_zero_mod_3(sol));
  CHECK(alpha_zero_mod_3(solve_alpha_c(10, 10)));
}

TEST_CASE("alpha and psi_F(h) agree with an integer Newton iteration mod 3^6") {
  const int N = 6, M = 8;
  Integer m = PadicGauss::modulus(N);
  Series alpha = newton_alpha(M + 1, m);
  AlphaSolution sol = solve_alpha(M, N);
  for (int k = 0; k <= M; ++k) {
    CAPTURE(k);
    CHECK(sol.alpha.coeff(k) == PadicGauss(alpha[k], 0, N));
  }
  // psi^3(h) = h^3 + A h^2 + B h + C with A, B, C polynomials in alpha.
  Series a2 = mul(alpha, alpha, m), a3 = mul(a2, alpha, m), one(alpha.size(), 0);
  one[0] = 1;
  Series A = combine({{1, a3}, {-6, alpha}, {-27, one}}, m);
  Series B = combine({{-18, a3}, {3, a2}, {108, alpha}, {201, one}}, m);
  Series C = combine({{57, a3}, {-27, a2}, {-334, alpha}, {-342, one}}, m);
  LaurentSeries psi = psiF_h(sol);
  for (int k = 0; k <= psi.order(); ++k) {
    CAPTURE(k);
    Integer expected = mod(A[k + 2] + B[k + 1] + C[k], m);
    CHECK(psi.coeff(k) == PadicGauss(expected, 0, N));
  }
}

TEST_CASE("integer expansions of psi_F(h) and psi_F(c)") {
  K1Expansion h = k1_expansion(K1Variable::h, 2, 12);
  std::vector<long> hc = {1, -27, 183, -180, 186, 1674};
  for (int e = 3; e >= -2; --e) CHECK(h.coeff(e) == hc[3 - e]);
  CHECK(fraction_of(h, Var::h) == golden("sec4.psiF_h"));
  CHECK(h.to_string() == "h^3 - 27*h^2 + 183*h - 180 + 186*h^-1 + 1674*h^-2 + O(h^-3)");

  K1Expansion c = k1_expansion(K1Variable::c, 7, 12);
  std::vector<long> cc = {1, -12, -6, -84, -933, -10956};
  for (int j = 0; j < 6; ++j) CHECK(c.coeff(3 - 2 * j) == cc[j]);
  for (int e = -7; e <= 3; e += 2) CHECK(c.coeff(e - 1) == 0);
  CHECK(fraction_of(c, Var::c) == golden("sec4.psiF_c"));
}

TEST_CASE("larger truncations extend smaller ones") {
  for (K1Variable v : {K1Variable::h, K1Variable::c}) {
    LaurentSeries small = solve_alpha(6, 12).alpha, big = solve_alpha(10, 24).alpha;
    if (v == K1Variable::c) {
      small = solve_alpha_c(6, 12).alpha;
      big = solve_alpha_c(10, 24).alpha;
    }
    for (int k = 0; k <= 6; ++k) CHECK(big.coeff(k).with_precision(12) == small.coeff(k));
  }
  K1Expansion a = k1_expansion(K1Variable::h, 2, 12), b = k1_expansion(K1Variable::h, 6, 24);
  for (int e = 3; e >= -2; --e) CHECK(a.coeff(e) == b.coeff(e));
}

TEST_CASE("the solution is a root of w") {
  for (const AlphaSolution& sol : {solve_alpha(10, 12), solve_alpha_c(10, 12)}) {
    LaurentSeries r = w_residual(sol);
    for (int k = r.low(); k <= r.order(); ++k) CHECK(r.coeff(k).is_zero());
  }
}

TEST_CASE("h and c expansions agree and the root is unique") {
  CHECK(h_c_agreement(6, 20));
  UniqueRootReport r = unique_root_check();
  CHECK(r.all());
  CHECK(Fraction(r.w_mod3) == Fraction(pops::mod3(golden("sec4.w_mod3").num())));
}

TEST_CASE("bounds are enforced") {
  CHECK_THROWS_AS(solve_alpha(0, 5), Error);
  try {
    solve_alpha(0, 5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BoundExceeded);
  }
  try {
    k1_expansion(K1Variable::h, 10, 24);
    FAIL("expected PrecisionInsufficient");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PrecisionInsufficient);
  }
}
