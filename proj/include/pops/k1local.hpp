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

// The root of w(alpha) = 0 in Z_9((h))^_3 lifting alpha = 0, and the
// K(1)-local operations psi_F^3(h), psi_F^3(c) obtained by substituting it
// into psi^3. Series are kept in t = 1/h (or t = 1/c) over Z[i]/3^N.

#ifndef POPS_K1LOCAL_HPP
#define POPS_K1LOCAL_HPP

#include <map>
#include <string>

#include "pops/multipoly.hpp"
#include "pops/series.hpp"

namespace pops {

enum class K1Variable { h, c };

struct AlphaSolution {
  K1Variable variable = K1Variable::h;
  LaurentSeries alpha{0, {}, -1, 1};  // in t = 1/h or 1/c, known through t^h_order
  int h_order = 0;
  int padic_precision = 0;
  int passes = 0;
};

/// Fixed point of alpha = (3 + 6 alpha^2 - alpha^4) sum_{n>=1} 9^(n-1) h^-n
/// through h^-M modulo 3^N. Throws NoConvergence if a pass fails to
/// improve the approximation.
AlphaSolution solve_alpha(int M, int N);
/// The same root with h = c^2 + 1, through c^-M:
/// alpha = (3 + 6 alpha^2 - alpha^4) sum_{n>=1} 8^(n-1) c^-2n.
AlphaSolution solve_alpha_c(int M, int N);

/// w(alpha) evaluated at the solution, known through t^(M-1).
LaurentSeries w_residual(const AlphaSolution& sol);

/// psi^3(h) at the solution, known through h^-(M-2).
LaurentSeries psiF_h(const AlphaSolution& sol);
/// psi^3(c) at the solution, known through c^-(M-1).
LaurentSeries psiF_c(const AlphaSolution& sol);

/// Integer coefficients by exponent of h (or c), highest first in printing.
struct K1Expansion {
  K1Variable variable = K1Variable::h;
  std::map<int, Integer> coefficients;  // exponent -> coefficient
  int lowest_exponent = 0;              // proven through this exponent
  int precision = 0;                    // 3-adic digits of the first solve

  Integer coeff(int exponent) const;
  /// "h^3 - 27*h^2 + ..." through lowest_exponent.
  std::string to_string() const;
};

/// psi_F^3(h) or psi_F^3(c) through exponent -terms, solved at precision N
/// and N + 8; throws PrecisionInsufficient if an imaginary part survives or
/// the two integer lifts disagree.
K1Expansion k1_expansion(K1Variable v, int terms, int N);

struct UniqueRootReport {
  MultiPoly w_mod3;
  bool factors = false;           // w = alpha (alpha^3 + h) mod 3
  bool zero_is_root = false;
  bool cube_root_obstructed = false;  // 3 val(alpha) = val(h) = -1 is impossible
  bool all() const { return factors && zero_is_root && cube_root_obstructed; }
};
UniqueRootReport unique_root_check();

/// True when every coefficient of alpha is divisible by 3.
bool alpha_zero_mod_3(const AlphaSolution& sol);

/// psi_F(c)^2 + 1 agrees with psi_F(h) at h = c^2 + 1 through the common
/// order.
bool h_c_agreement(int terms, int N);

}  // namespace pops

#endif  // POPS_K1LOCAL_HPP
