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

#include "pops/polyring.hpp"

namespace pops {

std::vector<RatFun> solve_linear(const std::vector<std::vector<RatFun>>& cols, const std::vector<RatFun>& target) {
  std::size_t n = cols.size();
  std::size_t rows = target.size();
  // augmented matrix, row-major
  std::vector<std::vector<RatFun>> m(rows, std::vector<RatFun>(n + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < n; ++j) m[r][j] = cols[j].at(r);
    m[r][n] = target[r];
  }
  std::vector<std::size_t> pivot_row(n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = row;
    while (p < rows && m[p][j].is_zero()) ++p;
    if (p == rows) throw Error(Errc::UnsolvableSystem, "linear system is underdetermined");
    std::swap(m[p], m[row]);
    RatFun inv = m[row][j].inverse();
    for (std::size_t k = j; k <= n; ++k) m[row][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][j].is_zero()) continue;
      RatFun f = m[r][j];
      for (std::size_t k = j; k <= n; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_row[j] = row++;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (!m[r][n].is_zero()) throw Error(Errc::UnsolvableSystem, "linear system is inconsistent");
  std::vector<RatFun> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = m[pivot_row[j]][n];
  return x;
}

MultiPoly reduce_mod3_and_ideal(const MultiPoly& p, bool at_H) {
  MultiPoly q = at_H ? p.subs(Var::b, -MultiPoly::var(Var::a, 2)) : p;
  return q.map_coefficients([](const Rational& c) { return Rational(residue_mod3(c)); });
}

namespace {

MultiPoly derivative_b(const MultiPoly& p) {
  MultiPoly r;
  int k = static_cast<int>(Var::b);
  for (const auto& [m, c] : p.terms()) {
    if (m[k] == 0) continue;
    Monomial mm = m;
    mm[k] = static_cast<std::int16_t>(mm[k] - 1);
    r += MultiPoly::term(mm, c * m[k]);
  }
  return r;
}

bool all_divisible_by(const MultiPoly& p, long n) {
  for (const auto& [m, c] : p.terms()) {
    Rational q = c / n;
    if (q != 0 && valuation3(q) < 0) return false;
  }
  return true;
}

}  // namespace

bool in_ideal_3H(const MultiPoly& p) { return reduce_mod3_and_ideal(p, true).is_zero(); }

bool in_ideal_3H_squared(const MultiPoly& p) {
  MultiPoly at = p.subs(Var::b, -MultiPoly::var(Var::a, 2));
  if (!all_divisible_by(at, 9)) return false;
  MultiPoly db = derivative_b(p).subs(Var::b, -MultiPoly::var(Var::a, 2));
  return all_divisible_by(db, 3);
}

bool eisenstein_check(const MultiPoly& f, Var main) {
  UniPolyView view = UniPolyView::of(f, main);
  if (view.low != 0 || view.coefficients.size() < 2) return false;
  const auto& c = view.coefficients;
  if (in_ideal_3H(c.back())) return false;
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    if (!in_ideal_3H(c[k])) return false;
  return !in_ideal_3H_squared(c[0]);
}

}  // namespace pops
