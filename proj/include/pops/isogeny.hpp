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

// The universal degree-3 isogeny with kernel generated by the generic point
// of exact order 3, its target curve, and the dual-side relations.
//
// Series arithmetic with the generic point runs in the chart torsion field
// Q(c)[d]/(f_c); every printed object is then rehomogenized from its chart
// image using its known weight.

#ifndef POPS_ISOGENY_HPP
#define POPS_ISOGENY_HPP

#include <memory>
#include <vector>

#include "pops/curve.hpp"
#include "pops/polyring.hpp"
#include "pops/series.hpp"

namespace pops {

using ChartField = PolyMod<ChartScalar>;
using ChartSeries = TruncSeries<ChartField>;

struct IsogenyOptions {
  int v_order = 13;   // internal truncation of v(u)
  int u_prime_terms = 6;
  int v_prime_terms = 9;
  int residual_order = 9;
};

struct IsogenyData {
  // graded ring, reduced mod f(d)
  LPoly kappa, lambda;
  std::vector<LPoly> u_prime;  // index k: coefficient of u^k, k <= u_prime_terms
  std::vector<LPoly> v_prime;  // index k: coefficient of u^k, k <= v_prime_terms
  LPoly W;                     // in kappa
  LPoly a_prime;               // in kappa
  LPoly b_prime;

  // chart a = c, b = 1
  std::shared_ptr<const Modulus<ChartScalar>> torsion_modulus;  // f_c in d
  ChartField d, e, kappa_c, lambda_c;
  ChartSeries u_prime_c, v_prime_c;
  std::vector<RatFun> W_c;        // monic, ascending in kappa
  std::vector<RatFun> a_prime_c;  // ascending in kappa
  RatFun b_prime_c;
  int residual_valuation = 0;     // first u-power where the fit residual may be nonzero
};

IsogenyData build_isogeny(const IsogenyOptions& options = {});
/// Shared instance built with default options.
const IsogenyData& isogeny_data();

/// Coordinates of x in the basis 1, kappa, kappa^2, kappa^3 of Q(c)(kappa)
/// inside the torsion field. Throws UnsolvableSystem if x is outside.
std::vector<RatFun> kappa_coordinates(const IsogenyData& data, const ChartField& x);

/// Verifies W(kappa) = 0 mod f(d) in the graded ring (ResidueNonzero).
LPoly kappa_min_poly(const IsogenyData& data);
/// kappa - (a g(d) - d^2) mod f(d); zero when the identity holds.
LPoly kappa_identity_residue(const IsogenyData& data);
/// u(-Q) u(Q) - kappa in the chart torsion field.
bool norm_identity_holds(const IsogenyData& data);

struct FrobeniusReport {
  bool u_prime_is_cube = false;       // u' = u^3 mod (3, H, d) through the known terms
  bool kappa_zero_mod_3d = false;     // kappa = 0 mod (3, d)
  bool minus_kappa_prime_is_H = false;  // -kappa' = H/b^4 mod (3, d)
  bool f_mod3_matches = false;        // f = u^2 (b^4 u^6 + abH u^3 - H) mod 3
};
FrobeniusReport frobenius_reduction_check(const IsogenyData& data);

struct DualRelations {
  LPoly kappa_prime;        // -3/(b^4 kappa) reduced mod W, in kappa
  LPoly relation1_residue;  // b^4 kappa kappa' + 3 mod W
  bool relation2 = false;   // kappa' = -kappa^3 + (6/b^2) kappa - (a^2 - 8b)/b^4
  Fraction root_product;    // kappa_1 kappa_2 kappa_3 kappa_4 from W
  Rational three_star_chart;  // linear coefficient of [3](u) in the chart
  Rational s;               // [3]* du = s kappa_1...kappa_4 du, on the chart
};
DualRelations dual_relations(const IsogenyData& data);

struct ComposeReport {
  int order = 0;
  bool kappa_prime_is_root = false;  // W_{c'}(kappa') = 0
  bool c_double_prime = false;       // a'(c', kappa') = c
  std::vector<RatFun> minus_three;   // chart [-3](u), index k - 1: coefficient of u^k
};
/// Compares psi' o psi with [-3] through u^order in Q(c)[kappa]/(W_c).
/// Throws MismatchAtOrder naming the first disagreeing coefficient.
ComposeReport compose_check(const IsogenyData& data, int order = 5);

}  // namespace pops

#endif  // POPS_ISOGENY_HPP
