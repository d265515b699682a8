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

// The algebra gamma generated over Z_9[[h]] by q0, q1, q2, q3, presented as a
// rewriting system: scalars move left through the commutation relations and
// q_k q_0 (k > 0) is replaced by its Adem relation. Normal forms are left
// Z[i][h]-combinations of admissible words q0^m q_k1 ... q_kn, k_i > 0.

#ifndef POPS_DYERLASHOF_HPP
#define POPS_DYERLASHOF_HPP

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pops/multipoly.hpp"

namespace pops {

using Word = std::vector<int>;

/// Shorter words first, then lexicographic.
struct WordOrder {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

bool is_admissible(const Word& w);

/// Sum of coefficient * word with every scalar on the left. Coefficients are
/// polynomials in h and i with i^2 = -1 applied.
class GammaElement {
 public:
  using Terms = std::map<Word, MultiPoly, WordOrder>;

  GammaElement() = default;
  static GammaElement scalar(const MultiPoly& r);
  static GammaElement word(const Word& w, const MultiPoly& coeff = MultiPoly(1));
  static GammaElement q(int k) { return word({k}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Length of the longest word.
  int degree() const;
  bool is_admissible() const;
  /// Coefficient of a word (zero if absent).
  MultiPoly coeff(const Word& w) const;

  friend GammaElement operator+(const GammaElement& x, const GammaElement& y);
  friend GammaElement operator-(const GammaElement& x, const GammaElement& y);
  /// Algebra product; scalars of y are commuted left past the words of x.
  /// The result is not Adem-normalized.
  friend GammaElement operator*(const GammaElement& x, const GammaElement& y);
  friend GammaElement operator*(const MultiPoly& r, const GammaElement& x);
  GammaElement operator-() const;
  friend bool operator==(const GammaElement& x, const GammaElement& y) = default;

  void add(const Word& w, const MultiPoly& coeff);
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Structure constants: q_k h = sum_j comm_h[k][j] q_j, and for k = 1, 2, 3
/// q_k q_0 = sum adem[k] (word, coefficient).
struct GammaRules {
  std::array<std::array<MultiPoly, 4>, 4> comm_h;
  std::array<std::vector<std::pair<Word, MultiPoly>>, 4> adem;  // index 0 unused
};
/// The defining relations as printed.
const GammaRules& gamma_rules();

/// q_w * s with s a scalar, as a left-scalar combination of words.
GammaElement commute_scalar(const Word& w, const MultiPoly& s);

/// Admissible normal form. Throws BoundExceeded if rewriting exceeds
/// `max_steps` rounds.
GammaElement normalize(const GammaElement& e, int max_steps = 10000);

/// Number of admissible words of length d; BoundExceeded above `bound`.
long rank_in_degree(int d, int bound = 6);
/// All admissible words of length d.
std::vector<Word> admissible_words(int d);

/// Coefficient of the action on the omega generator u: q_1 u = u, q_k u = 0
/// for k != 1. The input is normalized first.
MultiPoly omega_action(const GammaElement& e);

/// (lhs, rhs) for every defining relation: q_k h, q_k i and the three Adem
/// relations, lhs as an unreduced product.
std::vector<std::pair<std::string, std::pair<GammaElement, GammaElement>>> defining_relations();

/// Grammar: sums and products of h, i, q0..q3, integer literals and
/// parenthesized subexpressions, with unary minus and nonnegative integer
/// powers. Throws ParseError.
GammaElement parse_gamma(std::string_view text);

}  // namespace pops

#endif  // POPS_DYERLASHOF_HPP
