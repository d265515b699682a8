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

// The curve y^2 + axy + aby = x^3 + bx^2, its uv-chart u = x/y, v = 1/y,
// exact 3-torsion data, and group laws in both coordinate systems.

#ifndef POPS_CURVE_HPP
#define POPS_CURVE_HPP

#include <string>
#include <vector>

#include "pops/multipoly.hpp"
#include "pops/polyring.hpp"
#include "pops/series.hpp"

namespace pops {

struct WeierstrassCurve {
  MultiPoly a1, a2, a3, a4, a6;

  /// a1 = a, a2 = b, a3 = ab, a4 = a6 = 0.
  static WeierstrassCurve universal();
  /// y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6.
  MultiPoly xy_equation() const;
  /// v + auv + abv^2 - u^3 - bu^2v for the universal curve.
  static MultiPoly uv_equation();
  /// Standard discriminant from b2, b4, b6, b8.
  MultiPoly discriminant() const;
};

/// Delta_standard / (a^2 b^4 (a^2 - 16b)); throws unless it is a constant.
Rational discriminant_unit_ratio();

/// psi_3(x).
MultiPoly division_polynomial_3();
/// v^4 psi_3(u/v).
MultiPoly division_polynomial_3_tilde();

struct TorsionData {
  MultiPoly psi3, psi3_tilde;
  MultiPoly f_tilde;  // in u
  MultiPoly f;        // in u, degree 8
  MultiPoly A, B;     // in v over S[d]
  MultiPoly Q1, R1;
  Fraction Q2, R2;
  MultiPoly K, L;  // in u
  LPoly M, N;      // in u, M f + N K = 1
  LPoly g;         // in u, e = g(d)
  bool eisenstein = false;
};

/// Runs the full torsion derivation. Throws FactorizationMismatch if the
/// conjugate product does not factor as -u^4 f / (a^2 b).
TorsionData compute_torsion_data();

/// Chart images (a = c, b = 1) of f and g as polynomials in d.
struct ChartTorsion {
  std::vector<ChartScalar> f;  // monic, degree 8
  std::vector<ChartScalar> g;
};
ChartTorsion chart_torsion(const TorsionData& t);

// ---------------------------------------------------------------------------
// uv group law (chord form), generic over the coordinate ring

template <class T>
struct UVPoint {
  T u;
  T v;
};

namespace detail {
template <class S>
TruncSeries<S> quotient(const TruncSeries<S>& x, const TruncSeries<S>& y) {
  return divide(x, y);
}
template <class T>
T quotient(const T& x, const T& y) {
  return x * ring::inv(y);
}
template <class S>
TruncSeries<S> one_like(const TruncSeries<S>&) {
  return TruncSeries<S>::constant(S(1));
}
template <class T>
T one_like(const T&) {
  return T(1);
}
}  // namespace detail

/// -P = (-v/(u(u+bv)), -v^2/(u^2(u+bv))).
template <class T>
UVPoint<T> uv_negate(const UVPoint<T>& p, const T& b) {
  T den = p.u * (p.u + b * p.v);
  if (ring::zero(den)) throw Error(Errc::NonInvertibleDenominator, "u(u + bv) vanishes");
  return {-detail::quotient(p.v, den), -detail::quotient(p.v * p.v, p.u * den)};
}

/// -(P1 + P2) by the chord construction.
template <class T>
UVPoint<T> uv_chord(const UVPoint<T>& p1, const UVPoint<T>& p2, const T& a, const T& b) {
  T du = p1.u - p2.u;
  if (ring::zero(du)) throw Error(Errc::EqualUCoordinates, "chord formula needs distinct u-coordinates");
  T k = detail::quotient(p1.v - p2.v, du);
  T m = detail::quotient(p1.u * p2.v - p2.u * p1.v, du);
  T u3 = a * k - detail::quotient(b * m, detail::one_like(k) + b * k) - p1.u - p2.u;
  return {u3, k * u3 + m};
}

template <class T>
UVPoint<T> uv_add(const UVPoint<T>& p1, const UVPoint<T>& p2, const T& a, const T& b) {
  return uv_negate(uv_chord(p1, p2, a, b), b);
}

/// v(u) on the uv-chart through u^order, with a, b in the coefficient ring.
template <class S>
TruncSeries<S> v_series(const S& a, const S& b, int order) {
  using TS = TruncSeries<S>;
  TS u = TS::variable(order);
  TS u3 = u * u * u;
  std::function<TS(const TS&)> phi = [&](const TS& v) {
    // v = u^3 + b u^2 v - a u v - a b v^2
    return u3 + b * (u * u * v) - a * (u * v) - (a * b) * (v * v);
  };
  return solve_by_recursion<S>(phi, order);
}

/// v-series over S (a, b symbolic).
TruncSeries<MultiPoly> v_series_symbolic(int order);

// ---------------------------------------------------------------------------
// xy group law over a field F (F supplies + - * / and ==)

template <class F>
struct XYPoint {
  F x;
  F y;
  bool infinity = false;
};

/// Small integer constants in a field; PadicGauss needs its precision.
template <class F>
F field_const(long n, const F&) {
  return F(n);
}
inline PadicGauss field_const(long n, const PadicGauss& like) { return PadicGauss(n, 0, like.precision()); }

template <class F>
struct XYCurve {
  F a1, a2, a3, a4, a6;

  F k(long n) const { return field_const(n, a1); }

  bool contains(const XYPoint<F>& p) const {
    if (p.infinity) return true;
    return p.y * p.y + a1 * p.x * p.y + a3 * p.y == p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
  }

  XYPoint<F> negate(const XYPoint<F>& p) const {
    if (p.infinity) return p;
    return {p.x, k(0) - p.y - a1 * p.x - a3, false};
  }

  XYPoint<F> add(const XYPoint<F>& p, const XYPoint<F>& q) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    F lambda, nu;
    if (p.x == q.x) {
      F s = p.y + q.y + a1 * q.x + a3;
      if (s == k(0)) return {k(0), k(0), true};
      F den = k(2) * p.y + a1 * p.x + a3;
      lambda = (k(3) * p.x * p.x + k(2) * a2 * p.x + a4 - a1 * p.y) / den;
      nu = (k(0) - p.x * p.x * p.x + a4 * p.x + k(2) * a6 - a3 * p.y) / den;
    } else {
      lambda = (q.y - p.y) / (q.x - p.x);
      nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
    }
    F x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
    F y3 = k(0) - (lambda + a1) * x3 - nu - a3;
    return {x3, y3, false};
  }

  XYPoint<F> scalar_mul(long m, const XYPoint<F>& p) const {
    if (m < 0) return scalar_mul(-m, negate(p));
    XYPoint<F> acc{k(0), k(0), true}, base = p;
    while (m > 0) {
      if (m & 1) acc = add(acc, base);
      m >>= 1;
      if (m > 0) base = add(base, base);
    }
    return acc;
  }
};

/// Field with nine elements, Z[i]/3.
PadicGauss f9(long re, long im);
std::vector<PadicGauss> f9_elements();

/// #C(F_q) for q in {3, 9}, counting the point at infinity. Throws
/// InvalidCurve when the discriminant vanishes.
int count_points(const PadicGauss& a, const PadicGauss& b, int q);

struct SupersingularReport {
  int c0_points_f3 = 0;  // a = 1, b = -1
  int c0_trace_f3 = 0;
  int pairs_checked = 0;      // nonsingular (a, b) over F_9
  int supersingular_pairs = 0;
  bool locus_matches_H = false;  // supersingular exactly when a^2 + b = 0
  bool a1_b1_over_f3_singular = false;
};
SupersingularReport supersingular_check();

// ---------------------------------------------------------------------------
// Formal group law

/// F(u1, u2) as sum_n F_n T^n with F_n homogeneous of degree n in u1, u2
/// (coefficients over S), obtained from the chord law with u_i = T x_i.
TruncSeries<MultiPoly> formal_group_law(int order);
/// The inversion series iota(u) over S.
TruncSeries<MultiPoly> inversion_series(int order);
/// sum_n F_n(A(T), B(T)) T^n for a homogeneous family F_n in u1, u2.
TruncSeries<MultiPoly> evaluate_homogeneous(const TruncSeries<MultiPoly>& fam, const TruncSeries<MultiPoly>& A,
                                            const TruncSeries<MultiPoly>& B);
/// [m](u) over S for m in {2, 3, -3}.
TruncSeries<MultiPoly> multiplication_series(int m, int order);

struct FglReport {
  int order = 0;
  bool unit = false;
  bool symmetric = false;
  bool inverse = false;
  bool associative = false;
};
FglReport check_formal_group_law(int order);

}  // namespace pops

#endif  // POPS_CURVE_HPP
