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

#include "pops/golden.hpp"
#include "pops/powerops.hpp"
#include "support.hpp"

using namespace pops;
using pops::testing::golden;
using pops::testing::quotient_fraction;

namespace {

MultiPoly H() { return MultiPoly::var(Var::h); }
MultiPoly C() { return MultiPoly::var(Var::c); }
MultiPoly I() { return MultiPoly::var(Var::i); }

QuotientElement normalized(const QuotientElement& e) {
  QuotientElement out;
  for (int k = 0; k < 4; ++k) out.coords[k] = normalize_i(e.coords[k]);
  return out;
}

const MultiPoly& relation(const std::vector<Relation>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r.rhs;
  FAIL("missing relation " << name);
  static MultiPoly none;
  return none;
}

MultiPoly swap_xy(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [m, q] : p.terms()) {
    Monomial s = m;
    for (int k = 0; k < 4; ++k) std::swap(s[static_cast<int>(q_of_x(k))], s[static_cast<int>(q_of_y(k))]);
    out += MultiPoly::term(s, q);
  }
  return out;
}

}  // namespace

TEST_CASE("psi^3 on h, c and i") {
  const PsiFormulaSet& s = psi_formulas();
  CHECK(s.psi_h == printed_psi_h());
  CHECK(s.psi_c == printed_psi_c());
  CHECK(quotient_fraction(s.psi_h) == golden("cor7.psi_h"));
  CHECK(quotient_fraction(s.psi_c) == golden("cor7.psi_c"));
  CHECK(quotient_fraction(s.psi_i) == golden("cor7.psi_i"));
  CHECK(quotient_fraction(s.psi_alpha) == golden("sec3.psi_alpha"));
  CHECK(s.alpha_zero_mod_3);
}

TEST_CASE("psi^3(c) has a single inverse power of c") {
  for (const auto& x : psi_formulas().psi_c.coords) CHECK((x * C()).low_degree_in(Var::c) >= 0);
  AlphaQuotient q = AlphaQuotient::in_c();
  QuotientElement cpsi = q.scale(C(), psi_formulas().psi_c);
  CHECK(quotient_fraction(cpsi) ==
        parse_expression("c^4 + (alpha^3 - 6 alpha - 12) c^2 - 4 (alpha + 1)^2 (alpha - 3)"));
}

TEST_CASE("psi^3(i) squares to -1 and is i^3 mod 3") {
  AlphaQuotient q = AlphaQuotient::in_c();
  const QuotientElement& pi = psi_formulas().psi_i;
  CHECK(normalized(q.mul(pi, pi)) == q.constant(MultiPoly(-1)));
  CHECK(mod3(pi.coords[0]) == mod3(normalize_i(I().pow(3))));
}

TEST_CASE("psi^3(h) = psi^3(c)^2 + 1") {
  AlphaQuotient q = AlphaQuotient::in_c();
  QuotientElement sq = q.add(q.mul(psi_formulas().psi_c, psi_formulas().psi_c), q.constant(MultiPoly(1)));
  QuotientElement from_h;
  for (int k = 0; k < 4; ++k) from_h.coords[k] = h_to_c(printed_psi_h().coords[k]);
  CHECK(sq == from_h);
  CHECK(apply_psi(H()) == apply_psi(C() * C() + MultiPoly(1)));
}

TEST_CASE("extracting Q-coordinates") {
  auto q = extract_Q(psi_formulas().psi_h);
  CHECK(q[0] == parse_expression("h^3 - 27 h^2 + 201 h - 342").num());
  CHECK(q[3] == parse_expression("h^2 - 18 h + 57").num());
  auto one = extract_Q(apply_psi(MultiPoly(1)));
  CHECK(one[0] == MultiPoly(1));
  for (int k = 1; k < 4; ++k) CHECK(one[k].is_zero());
  auto qi = extract_Q(psi_formulas().psi_i);
  CHECK(qi[0] == -I());
  for (int k = 1; k < 4; ++k) CHECK(qi[k].is_zero());
  for (const auto& x : extract_Q(apply_psi(MultiPoly(0)))) CHECK(x.is_zero());
}

TEST_CASE("psi^3 is a ring homomorphism on random pairs") {
  std::mt19937 rng(1003);
  AlphaQuotient q = AlphaQuotient::in_c();
  for (int n = 0; n < 100; ++n) {
    MultiPoly x = pops::testing::random_poly(rng, {Var::h, Var::c, Var::i}, 2, 3, 4);
    MultiPoly y = pops::testing::random_poly(rng, {Var::h, Var::c, Var::i}, 2, 3, 4);
    QuotientElement px = apply_psi(x), py = apply_psi(y);
    CHECK(normalized(apply_psi(x + y)) == normalized(q.add(px, py)));
    CHECK(normalized(apply_psi(x * y)) == normalized(q.mul(px, py)));
  }
}

TEST_CASE("commutation relations") {
  auto rs = derive_commutation();
  CHECK(rs.size() == 12);
  CHECK(Fraction(relation(rs, "Q2(hx)")) ==
        parse_expression("(3 h - 27) Q0(x) + 8 Q1(x) + 9 Q2(x) - 24 Q3(x)"));
  CHECK(Fraction(relation(rs, "Q3(cx)")) ==
        parse_expression("(c - 4 c^-1) Q0(x) + 4 c^-1 Q1(x) - 4 c^-1 Q2(x) + 4 c^-1 Q3(x)"));
  for (int k = 0; k < 4; ++k) CHECK(relation(rs, "Q" + std::to_string(k) + "(ix)") == -I() * MultiPoly::var(q_of_x(k)));
}

TEST_CASE("Adem relations") {
  auto rs = derive_adem();
  REQUIRE(rs.size() == 3);
  CHECK(Fraction(relation(rs, "Q2Q0(x)")) ==
        parse_expression("3 Q3Q1(x) - 3 Q0Q2(x) + (3 h - 27) Q0Q3(x) + 9 Q1Q3(x)"));
  // Both sides vanish at x = 1: Q_k(1) = 0 for k > 0, so QjQk(1) = 0 unless j = k = 0.
  for (const auto& r : rs) {
    MultiPoly at_one = r.rhs;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) at_one = at_one.subs(qq_of_x(j, k), MultiPoly(j == 0 && k == 0 ? 1 : 0));
    CHECK(at_one.is_zero());
  }
  // Every coefficient is a polynomial in h with integer coefficients.
  for (const auto& r : rs)
    for (const auto& [m, c] : r.rhs.terms()) CHECK(c.get_den() == 1);
}

TEST_CASE("Cartan formulas") {
  auto rs = derive_cartan();
  REQUIRE(rs.size() == 4);
  CHECK(Fraction(relation(rs, "Q0(xy)")) == golden("prop10.cartan.q0"));
  for (int k = 0; k < 4; ++k) {
    const MultiPoly& rhs = relation(rs, "Q" + std::to_string(k) + "(xy)");
    MultiPoly y_is_one = rhs;
    for (int j = 0; j < 4; ++j) y_is_one = y_is_one.subs(q_of_y(j), MultiPoly(j == 0 ? 1 : 0));
    CHECK(y_is_one == MultiPoly::var(q_of_x(k)));
    CHECK(swap_xy(rhs) == rhs);
  }
}

TEST_CASE("every power-operation golden record") {
  for (const auto& rec : load_golden(default_golden_dir())) {
    if (golden_module(rec.id) != "powerops") continue;
    VerifyResult r = verify_record(rec);
    CHECK_MESSAGE(r.ok, rec.id << ": " << r.note << "\n" << r.diff);
  }
}

TEST_CASE("Frobenius congruence") {
  FrobeniusCongruence f = frobenius_congruence_check();
  CHECK(f.q0_h);
  CHECK(f.q0_c);
  CHECK(f.q0_i);
  CHECK(f.cartan_row);
  CHECK(mod3(extract_Q(psi_formulas().psi_h)[0]) == H().pow(3));
  CHECK(mod3(extract_Q(psi_formulas().psi_c)[0]) == mod3(C().pow(3)));
}

TEST_CASE("the canonical action on Z_9[[h]][u]/(u^2)") { CHECK(example_action_check()); }

TEST_CASE("quotient arithmetic reduces alpha^4") {
  AlphaQuotient q = AlphaQuotient::in_h();
  QuotientElement a4 = q.pow(q.alpha(), 4);
  CHECK(a4.coords[0] == MultiPoly(3));
  CHECK(a4.coords[1] == MultiPoly(9) - H());
  CHECK(a4.coords[2] == MultiPoly(6));
  CHECK(a4.coords[3].is_zero());
}
