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

// The total power operation psi^3 on E^0 = Z_9[[h]] with values in
// E^0[alpha]/(w(alpha)), the individual operations Q_0..Q_3 read off from
// alpha-coordinates, and the relations they satisfy.
//
// Coefficients are MultiPoly over h, c (Laurent in c), i and the formal
// Q-symbols; i^2 = -1 is applied by normalize_i.

#ifndef POPS_POWEROPS_HPP
#define POPS_POWEROPS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pops/multipoly.hpp"
#include "pops/qpoly.hpp"

namespace pops {

/// c0 + c1 alpha + c2 alpha^2 + c3 alpha^3.
struct QuotientElement {
  std::array<MultiPoly, 4> coords;

  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;
  std::string to_string() const;
};

/// R[alpha]/(w) with w = alpha^4 - 6 alpha^2 + t alpha - 3, where t is h - 9
/// or, in the c-chart, c^2 - 8.
class AlphaQuotient {
 public:
  static AlphaQuotient in_h();
  static AlphaQuotient in_c();

  const MultiPoly& linear_coefficient() const { return t_; }

  QuotientElement constant(const MultiPoly& r) const;
  QuotientElement alpha() const;
  /// Reduces sum p[k] alpha^k for any length.
  QuotientElement reduce(std::vector<MultiPoly> p) const;
  QuotientElement add(const QuotientElement& x, const QuotientElement& y) const;
  QuotientElement sub(const QuotientElement& x, const QuotientElement& y) const;
  QuotientElement mul(const QuotientElement& x, const QuotientElement& y) const;
  QuotientElement scale(const MultiPoly& r, const QuotientElement& x) const;
  QuotientElement pow(const QuotientElement& x, int n) const;
  /// w(alpha) as a polynomial in Var::alpha.
  MultiPoly w() const;

 private:
  explicit AlphaQuotient(MultiPoly t) : t_(std::move(t)) {}
  MultiPoly t_;
};

/// Rewrites i^2 -> -1.
MultiPoly normalize_i(const MultiPoly& p);
/// Rewrites h -> c^2 + 1.
MultiPoly h_to_c(const MultiPoly& p);
/// Inverse of h_to_c on polynomials even in c with nonnegative c-powers;
/// throws ReductionMismatch otherwise.
MultiPoly c_to_h(const MultiPoly& p);
/// Laurent polynomial in c from a rational function with monomial
/// denominator (NotLocal otherwise).
MultiPoly laurent_in_c(const RatFun& r);
/// Coefficient-wise reduction to {0, 1, 2} modulo 3.
MultiPoly mod3(const MultiPoly& p);

struct PsiFormulaSet {
  QuotientElement psi_h;      // in h-context
  QuotientElement psi_c;      // Laurent in c, c-context
  QuotientElement psi_i;
  QuotientElement psi_alpha;  // -alpha^3 + 6 alpha - h + 9
  QuotientElement c_prime;    // a' on the chart, before comparison
  bool alpha_zero_mod_3 = false;
};

/// Specializes the isogeny target to the chart and derives psi^3(c),
/// psi^3(h) = psi^3(c)^2 + 1 and psi^3(i) = -i. Throws ReductionMismatch when
/// the derived psi^3(c) or psi^3(h) differs from the printed closed forms.
PsiFormulaSet specialize_chart();
/// Shared instance.
const PsiFormulaSet& psi_formulas();

/// The printed closed forms of psi^3(h) and psi^3(c), used as oracles.
QuotientElement printed_psi_h();
QuotientElement printed_psi_c();

/// psi^3(x) = sum Q_k(x) alpha^k.
std::array<MultiPoly, 4> extract_Q(const QuotientElement& formula);

/// psi^3 of a polynomial in h, c, i (nonnegative powers), in c-context with h
/// rewritten as c^2 + 1.
QuotientElement apply_psi(const MultiPoly& x);

/// A relation "lhs = rhs" where rhs is linear in formal Q-symbols.
struct Relation {
  std::string name;  // e.g. "Q2(hx)", "Q1Q0(x)", "Q0(xy)"
  MultiPoly rhs;
  std::string to_string() const;
};

/// Q_k(hx), Q_k(cx) for k = 0..3 and the i-rule as Q_k(ix) for each k.
std::vector<Relation> derive_commutation();
/// Q_1Q_0, Q_2Q_0, Q_3Q_0 solved from the vanishing of Psi_1, Psi_2, Psi_3.
std::vector<Relation> derive_adem();
/// Q_k(xy), k = 0..3.
std::vector<Relation> derive_cartan();
/// The rows Psi_0..Psi_3 of psi^3(psi^3(x)) in the QjQk(x) symbols.
std::array<MultiPoly, 4> composite_rows();

struct FrobeniusCongruence {
  bool q0_h = false;
  bool q0_c = false;
  bool q0_i = false;
  bool cartan_row = false;  // Q_0(xy) = Q_0(x) Q_0(y) mod 3
  bool all() const { return q0_h && q0_c && q0_i && cartan_row; }
};
FrobeniusCongruence frobenius_congruence_check();

/// psi^3(u) = u alpha on Z_9[[h]][u]/(u^2): evaluates the commutation and
/// Cartan rows at Q(u) = (0, u, 0, 0) and compares with direct products.
bool example_action_check();

}  // namespace pops

#endif  // POPS_POWEROPS_HPP
