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

#include "pops/isogeny.hpp"
#include "pops/powerops.hpp"
#include "support.hpp"

using namespace pops;
using pops::testing::golden;
using pops::testing::power_sum;

namespace {

MultiPoly A() { return MultiPoly::var(Var::a); }
MultiPoly B() { return MultiPoly::var(Var::b); }

const IsogenyData& data() { return isogeny_data(); }

}  // namespace

TEST_CASE("kappa and lambda") {
  CHECK(Fraction(data().kappa) == golden("appB.kappa"));
  CHECK(Fraction(data().lambda) == golden("appB.lambda"));
  CHECK(data().u_prime[1] == data().kappa);
  CHECK(data().v_prime[3] == data().lambda);
  CHECK(data().kappa.graded_degree() == std::optional<int>(-2));
  CHECK(data().lambda.graded_degree() == std::optional<int>(-6));
}

TEST_CASE("u' through u^6 and v' through u^9") {
  REQUIRE(data().u_prime.size() >= 7);
  REQUIRE(data().v_prime.size() >= 10);
  CHECK(power_sum(data().u_prime, Var::u, 1, 6) == golden("appB.u_prime"));
  CHECK(power_sum(data().v_prime, Var::u, 3, 9) == golden("appB.v_prime"));
  CHECK(data().u_prime[0].is_zero());
  for (int k = 0; k < 3; ++k) CHECK(data().v_prime[k].is_zero());
}

TEST_CASE("coefficients of u' and v' are homogeneous") {
  for (int k = 1; k <= 6; ++k) CHECK(data().u_prime[k].graded_degree() == std::optional<int>(k - 3));
  for (int k = 3; k <= 9; ++k) CHECK(data().v_prime[k].graded_degree() == std::optional<int>(k - 9));
}

TEST_CASE("W(kappa) = 0 mod f") {
  LPoly W = kappa_min_poly(data());
  CHECK(Fraction(W) == golden("prop6.W"));
  // Vieta: the product of the four roots is the constant term.
  CHECK(Fraction(W.coeff(Var::kappa, 0)) == Fraction(MultiPoly(-3)) / Fraction(B().pow(4)));
  CHECK(dual_relations(data()).root_product == Fraction(MultiPoly(-3)) / Fraction(B().pow(4)));
}

TEST_CASE("W on the chart is w(alpha)") {
  const auto& w = data().W_c;
  REQUIRE(w.size() == 5);
  CHECK(w[0] == RatFun(-3));
  CHECK(w[1] == RatFun(QPoly({Rational(-8), Rational(0), Rational(1)})));
  CHECK(w[2] == RatFun(-6));
  CHECK(w[3].is_zero());
  CHECK(w[4] == RatFun(1));
  // The same polynomial as the quotient relation used by the power operations.
  CHECK(Fraction(AlphaQuotient::in_c().w()) ==
        parse_expression("alpha^4 - 6 alpha^2 + (c^2 - 8) alpha - 3"));
}

TEST_CASE("target curve") {
  CHECK(Fraction(data().b_prime) == Fraction(B().pow(3)));
  CHECK(Fraction(data().b_prime) == golden("prop6.b_prime"));
  CHECK(Fraction(data().a_prime) == golden("prop6.a_prime"));
  CHECK(data().residual_valuation > 9);
}

TEST_CASE("kappa = a e - d^2 and the norm identity") {
  CHECK(kappa_identity_residue(data()).is_zero());
  CHECK(norm_identity_holds(data()));
}

TEST_CASE("reduction to Frobenius") {
  FrobeniusReport r = frobenius_reduction_check(data());
  CHECK(r.u_prime_is_cube);
  CHECK(r.kappa_zero_mod_3d);
  CHECK(r.minus_kappa_prime_is_H);
  CHECK(r.f_mod3_matches);
}

TEST_CASE("dual relations") {
  DualRelations r = dual_relations(data());
  CHECK(r.relation1_residue.is_zero());
  CHECK(r.relation2);
  CHECK(Fraction(r.kappa_prime) == golden("cor9.kappa_prime"));
  CHECK(Fraction(r.kappa_prime) ==
        parse_expression("-kappa^3 + (6/b^2) kappa - (a^2 - 8 b)/b^4"));
  CHECK(r.three_star_chart == 3);
  CHECK(r.s == -1);
}

TEST_CASE("psi' o psi = [-3] through u^5") {
  ComposeReport r = compose_check(data(), 5);
  CHECK(r.order == 5);
  CHECK(r.kappa_prime_is_root);
  CHECK(r.c_double_prime);
  REQUIRE(r.minus_three.size() == 5);
  CHECK(r.minus_three[0] == RatFun(-3));
}

TEST_CASE("longer truncations extend the defaults") {
  IsogenyOptions opt;
  opt.u_prime_terms = 7;
  opt.v_prime_terms = 10;
  opt.v_order = 14;
  opt.residual_order = 10;
  IsogenyData big = build_isogeny(opt);
  for (int k = 1; k <= 6; ++k) CHECK(big.u_prime[k] == data().u_prime[k]);
  for (int k = 3; k <= 9; ++k) CHECK(big.v_prime[k] == data().v_prime[k]);
  CHECK(big.u_prime[7].graded_degree() == std::optional<int>(4));
}
