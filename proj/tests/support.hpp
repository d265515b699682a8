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

// Helpers shared by the unit suites and the acceptance binary.

#ifndef POPS_TESTS_SUPPORT_HPP
#define POPS_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "pops/golden.hpp"
#include "pops/multipoly.hpp"
#include "pops/powerops.hpp"
#include "pops/series.hpp"

namespace pops::testing {

/// The transcription of a golden record, parsed.
inline Fraction golden(const std::string& id) {
  return parse_expression(read_golden(default_golden_dir() / (id + ".txt")).expected);
}

/// sum_{k = from}^{to} coeffs[k] v^k.
template <class T>
Fraction power_sum(const std::vector<T>& coeffs, Var v, int from, int to) {
  Fraction acc;
  for (int k = from; k <= to && k < static_cast<int>(coeffs.size()); ++k)
    acc = acc + Fraction(coeffs[k]) * Fraction(MultiPoly::var(v, k));
  return acc;
}

inline Fraction series_fraction(const TruncSeries<MultiPoly>& s, Var v, int from, int to) {
  std::vector<MultiPoly> c;
  for (int k = 0; k <= to; ++k) c.push_back(s.coeff(k));
  return power_sum(c, v, from, to);
}

inline Fraction quotient_fraction(const QuotientElement& e) {
  return power_sum(std::vector<MultiPoly>(e.coords.begin(), e.coords.end()), Var::alpha, 0, 3);
}

/// Random polynomial in the given variables with coefficients in [-bound, bound].
inline MultiPoly random_poly(std::mt19937& rng, const std::vector<Var>& vars, int max_exp, int terms, int bound = 5) {
  std::uniform_int_distribution<int> ex(0, max_exp), co(-bound, bound);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    MultiPoly m(co(rng));
    for (Var v : vars) m *= MultiPoly::var(v, ex(rng));
    p += m;
  }
  return p;
}

/// Sum of 1-3 terms, each an integer times up to four letters q_k, with h,
/// i or h + 1 interleaved.
inline std::string random_gamma_expression(std::mt19937& rng) {
  std::uniform_int_distribution<int> summands(1, 3), letters(0, 4), q(0, 3), scalar(0, 5), lit(-3, 3);
  std::string s;
  int n = summands(rng);
  for (int t = 0; t < n; ++t) {
    if (t > 0) s += " + ";
    std::string term = std::to_string(lit(rng));
    int m = letters(rng);
    for (int j = 0; j < m; ++j) {
      term += " * q" + std::to_string(q(rng));
      int sc = scalar(rng);
      if (sc == 0) term += " * h";
      if (sc == 1) term += " * i";
      if (sc == 2) term += " * (h + 1)";
    }
    s += "(" + term + ")";
  }
  return s;
}

}  // namespace pops::testing

#endif  // POPS_TESTS_SUPPORT_HPP
