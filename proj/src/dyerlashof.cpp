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

#include "pops/dyerlashof.hpp"

#include <cctype>
#include <deque>
#include <mutex>

#include "pops/powerops.hpp"

namespace pops {

namespace {

int idx(Var v) { return static_cast<int>(v); }

MultiPoly parse_coefficient(const std::string& text) {
  Fraction f = parse_expression(text);
  if (!(f.den() == MultiPoly(1))) throw Error(Errc::ParseError, "structure constant is not a polynomial: " + text);
  return f.num();
}

class GammaParser {
 public:
  explicit GammaParser(std::string_view s) : s_(s) {}

  GammaElement parse() {
    GammaElement e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(Errc::ParseError, msg + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  GammaElement sum() {
    GammaElement acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    GammaElement t = product();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) {
        acc = acc + product();
      } else if (eat('-')) {
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char ch = s_[pos_];
    return ch == '(' || ch == 'h' || ch == 'i' || ch == 'q' || std::isdigit(static_cast<unsigned char>(ch));
  }
  GammaElement product() {
    GammaElement acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }
  GammaElement power() {
    GammaElement base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    int n = std::stoi(std::string(s_.substr(start, pos_ - start)));
    GammaElement acc = GammaElement::scalar(MultiPoly(1));
    for (int k = 0; k < n; ++k) acc = acc * base;
    return acc;
  }
  GammaElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      GammaElement e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return GammaElement::scalar(MultiPoly(Rational(Integer(std::string(s_.substr(start, pos_ - start))))));
    }
    if (ch == 'h' || ch == 'i') {
      ++pos_;
      return GammaElement::scalar(MultiPoly::var(ch == 'h' ? Var::h : Var::i));
    }
    if (ch == 'q') {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '3') fail("expected q0, q1, q2 or q3");
      return GammaElement::q(s_[pos_++] - '0');
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string word_name(const Word& w) {
  std::string s;
  for (int k : w) s += "q" + std::to_string(k);
  return s;
}

}  // namespace

bool is_admissible(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k] != 0 && w[k + 1] == 0) return false;
  return true;
}

GammaElement GammaElement::scalar(const MultiPoly& r) { return word({}, r); }

GammaElement GammaElement::word(const Word& w, const MultiPoly& coeff) {
  GammaElement e;
  e.add(w, coeff);
  return e;
}

void GammaElement::add(const Word& w, const MultiPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, normalize_i(coeff));
    return;
  }
  it->second = normalize_i(it->second + coeff);
  if (it->second.is_zero()) terms_.erase(it);
}

int GammaElement::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

bool GammaElement::is_admissible() const {
  for (const auto& [w, c] : terms_)
    if (!pops::is_admissible(w)) return false;
  return true;
}

MultiPoly GammaElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? MultiPoly() : it->second;
}

GammaElement operator+(const GammaElement& x, const GammaElement& y) {
  GammaElement r = x;
  for (const auto& [w, c] : y.terms_) r.add(w, c);
  return r;
}

GammaElement operator-(const GammaElement& x, const GammaElement& y) { return x + (-y); }

GammaElement GammaElement::operator-() const {
  GammaElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

GammaElement operator*(const MultiPoly& r, const GammaElement& x) {
  GammaElement out;
  for (const auto& [w, c] : x.terms()) out.add(w, r * c);
  return out;
}

namespace {

// Coefficients in Z[i][h] held densely during rewriting:
// sum_k (re[k] + im[k] i) h^k. Rational inputs are cleared of denominators
// first; every rule is integral and the rewriting is linear.
struct Dense {
  std::vector<Integer> re, im;

  bool is_zero() const { return re.empty() && im.empty(); }
  void trim() {
    while (!re.empty() && re.back() == 0) re.pop_back();
    while (!im.empty() && im.back() == 0) im.pop_back();
  }
  static std::vector<Integer> negated(std::vector<Integer> v) {
    for (auto& x : v) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    return v;
  }
};

void add_to(std::vector<Integer>& acc, const std::vector<Integer>& x, const Integer& scale = 1) {
  if (acc.size() < x.size()) acc.resize(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0) mpz_addmul(acc[k].get_mpz_t(), scale.get_mpz_t(), x[k].get_mpz_t());
}

void mul_into(std::vector<Integer>& acc, const std::vector<Integer>& x, const std::vector<Integer>& y, int sign) {
  if (x.empty() || y.empty()) return;
  if (acc.size() < x.size() + y.size() - 1) acc.resize(x.size() + y.size() - 1);
  auto op = sign > 0 ? mpz_addmul : mpz_submul;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) op(acc[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
  }
}

Dense operator*(const Dense& x, const Dense& y) {
  Dense r;
  mul_into(r.re, x.re, y.re, 1);
  mul_into(r.re, x.im, y.im, -1);
  mul_into(r.im, x.re, y.im, 1);
  mul_into(r.im, x.im, y.re, 1);
  r.trim();
  return r;
}

void accumulate(Dense& acc, const Dense& x) {
  add_to(acc.re, x.re);
  add_to(acc.im, x.im);
  acc.trim();
}

// Least common denominator of the coefficients of p.
Integer denominator_of(const MultiPoly& p) {
  Integer d = 1;
  for (const auto& [m, q] : p.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  return d;
}

// scale * p, which must be integral.
Dense dense_of(const MultiPoly& p, const Integer& scale = 1) {
  Dense d;
  for (const auto& [m, q] : p.terms()) {
    for (int v = 0; v < kNumVars; ++v)
      if (m[v] != 0 && v != idx(Var::h) && v != idx(Var::i))
        throw Error(Errc::CoefficientMismatch, "gamma coefficients are polynomials in h and i");
    int eh = m[idx(Var::h)], ei = m[idx(Var::i)];
    if (eh < 0 || ei < 0) throw Error(Errc::CoefficientMismatch, "negative powers in a gamma coefficient");
    Rational scaled = q * scale;
    if (scaled.get_den() != 1) throw Error(Errc::CoefficientMismatch, "denominator not cleared");
    int r = ei % 4;
    auto& part = r % 2 == 0 ? d.re : d.im;
    if (static_cast<int>(part.size()) <= eh) part.resize(eh + 1);
    if (r >= 2) {
      part[eh] -= scaled.get_num();
    } else {
      part[eh] += scaled.get_num();
    }
  }
  d.trim();
  return d;
}

// p / scale.
MultiPoly poly_of(const Dense& d, const Integer& scale = 1) {
  MultiPoly p;
  auto coeff = [&](const Integer& n) {
    Rational q(n, scale);
    q.canonicalize();
    return q;
  };
  for (std::size_t k = 0; k < d.re.size(); ++k)
    if (d.re[k] != 0) p += coeff(d.re[k]) * MultiPoly::var(Var::h, static_cast<int>(k));
  for (std::size_t k = 0; k < d.im.size(); ++k)
    if (d.im[k] != 0) p += coeff(d.im[k]) * (MultiPoly::var(Var::h, static_cast<int>(k)) * MultiPoly::var(Var::i));
  return p;
}

using DenseTerms = std::map<Word, Dense, WordOrder>;

void add_term(DenseTerms& t, const Word& w, const Dense& c) {
  if (c.is_zero()) return;
  auto it = t.find(w);
  if (it == t.end()) {
    t.emplace(w, c);
    return;
  }
  accumulate(it->second, c);
  if (it->second.is_zero()) t.erase(it);
}

using RealPoly = std::vector<Integer>;
using DenseMatrix = std::array<std::array<RealPoly, 4>, 4>;

// P^e, where q_k h^e = sum_j P^e[k][j] q_j. The structure constants are real.
const DenseMatrix& comm_power(int e) {
  static std::mutex mu;
  static std::deque<DenseMatrix> powers;  // stable references
  std::lock_guard<std::mutex> lock(mu);
  if (powers.empty()) {
    DenseMatrix id;
    for (int k = 0; k < 4; ++k) id[k][k] = {Integer(1)};
    powers.push_back(id);
  }
  while (static_cast<int>(powers.size()) <= e) {
    const DenseMatrix& last = powers.back();
    DenseMatrix next;
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) {
        Dense c = dense_of(gamma_rules().comm_h[k][l]);
        for (int j = 0; j < 4; ++j) mul_into(next[k][j], c.re, last[l][j], 1);
      }
    for (auto& row : next)
      for (auto& x : row)
        while (!x.empty() && x.back() == 0) x.pop_back();
    powers.push_back(std::move(next));
  }
  return powers[e];
}

// q_k a(h) = sum_j out[j](h) q_j for real a.
std::array<RealPoly, 4> commute_letter(int k, const RealPoly& a) {
  std::array<RealPoly, 4> out;
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (a[e] == 0) continue;
    const DenseMatrix& p = comm_power(static_cast<int>(e));
    for (int j = 0; j < 4; ++j) add_to(out[j], p[k][j], a[e]);
  }
  return out;
}

// q_w s, for s in Z[i][h]: the scalar moves left one letter at a time, with
// q_k i = -i q_k.
DenseTerms commute_dense(const Word& w, const Dense& s) {
  DenseTerms state;
  add_term(state, Word{}, s);
  for (auto letter = w.rbegin(); letter != w.rend(); ++letter) {
    DenseTerms next;
    for (const auto& [suffix, c] : state) {
      std::array<RealPoly, 4> re = commute_letter(*letter, c.re);
      std::array<RealPoly, 4> im = commute_letter(*letter, c.im);
      for (int j = 0; j < 4; ++j) {
        Dense d{std::move(re[j]), Dense::negated(std::move(im[j]))};
        d.trim();
        Word nw{j};
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        add_term(next, nw, d);
      }
    }
    state = std::move(next);
  }
  return state;
}

GammaElement to_gamma(const DenseTerms& t, const Integer& scale) {
  GammaElement e;
  for (const auto& [w, c] : t) e.add(w, poly_of(c, scale));
  return e;
}

}  // namespace

GammaElement commute_scalar(const Word& w, const MultiPoly& s) {
  if (w.empty() || s.is_zero()) return GammaElement::scalar(s);
  Integer scale = denominator_of(s);
  return to_gamma(commute_dense(w, dense_of(s, scale)), scale);
}

GammaElement operator*(const GammaElement& x, const GammaElement& y) {
  GammaElement out;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      GammaElement moved = commute_scalar(wx, cy);
      for (const auto& [w, c] : moved.terms()) {
        Word nw = w;
        nw.insert(nw.end(), wy.begin(), wy.end());
        out.add(nw, cx * c);
      }
    }
  }
  return out;
}

std::string GammaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    std::string coef = c.to_string();
    bool neg = !coef.empty() && coef[0] == '-';
    bool single = c.size() == 1;
    if (single && neg) coef = coef.substr(1);
    if (!s.empty()) s += single && neg ? " - " : " + ";
    else if (single && neg) s += "-";
    if (w.empty()) {
      s += single ? coef : "(" + coef + ")";
      continue;
    }
    if (coef != "1") s += single ? coef + "*" : "(" + coef + ")*";
    s += word_name(w);
  }
  return s;
}

const GammaRules& gamma_rules() {
  static std::once_flag once;
  static GammaRules rules;
  std::call_once(once, [] {
    const char* comm[4][4] = {
        {"h^3 - 27 h^2 + 201 h - 342", "3 h^2 - 54 h + 171", "9 h - 81", "24"},
        {"-6 h^2 + 108 h - 334", "-18 h + 171", "-72", "h - 9"},
        {"3 h - 27", "8", "9", "-24"},
        {"h^2 - 18 h + 57", "3 h - 27", "8", "9"},
    };
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) rules.comm_h[k][j] = parse_coefficient(comm[k][j]);
    using Entry = std::pair<Word, const char*>;
    const std::vector<Entry> adem[4] = {
        {},
        {{{0, 1}, "-6"}, {{2, 1}, "3"}, {{0, 2}, "6 h - 54"}, {{1, 2}, "18"}, {{3, 2}, "-9"},
         {{0, 3}, "-6 h^2 + 108 h - 369"}, {{1, 3}, "-18 h + 162"}, {{2, 3}, "-54"}},
        {{{3, 1}, "3"}, {{0, 2}, "-3"}, {{0, 3}, "3 h - 27"}, {{1, 3}, "9"}},
        {{{0, 1}, "1"}, {{0, 2}, "-h + 9"}, {{1, 2}, "-3"}, {{0, 3}, "h^2 - 18 h + 63"}, {{1, 3}, "3 h - 27"},
         {{2, 3}, "9"}},
    };
    for (int k = 1; k < 4; ++k)
      for (const auto& [w, text] : adem[k]) rules.adem[k].emplace_back(w, parse_coefficient(text));
  });
  return rules;
}

GammaElement normalize(const GammaElement& e, int max_steps) {
  const GammaRules& rules = gamma_rules();
  std::array<std::vector<std::pair<Word, Dense>>, 4> adem;
  for (int k = 1; k < 4; ++k)
    for (const auto& [ab, r] : rules.adem[k]) adem[k].emplace_back(ab, dense_of(r));
  DenseTerms done, pending;
  Integer scale = 1;
  for (const auto& [w, c] : e.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), denominator_of(c).get_mpz_t());
  for (const auto& [w, c] : e.terms()) add_term(pending, w, dense_of(c, scale));
  for (int step = 0; !pending.empty(); ++step) {
    if (step >= max_steps)
      throw Error(Errc::BoundExceeded, "rewriting did not terminate within " + std::to_string(max_steps) + " rounds");
    DenseTerms next;
    for (const auto& [w, c] : pending) {
      std::size_t at = w.size();
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] != 0 && w[k + 1] == 0) {
          at = k;
          break;
        }
      if (at == w.size()) {
        add_term(done, w, c);
        continue;
      }
      // c q_P (q_k q_0) q_S -> c sum (q_P r) q_a q_b q_S
      Word prefix(w.begin(), w.begin() + static_cast<long>(at));
      Word suffix(w.begin() + static_cast<long>(at) + 2, w.end());
      for (const auto& [ab, r] : adem[w[at]]) {
        for (const auto& [pw, pc] : commute_dense(prefix, r)) {
          Word nw = pw;
          nw.insert(nw.end(), ab.begin(), ab.end());
          nw.insert(nw.end(), suffix.begin(), suffix.end());
          add_term(next, nw, c * pc);
        }
      }
    }
    pending = std::move(next);
  }
  return to_gamma(done, scale);
}

std::vector<Word> admissible_words(int d) {
  std::vector<Word> out;
  // q0^m followed by n = d - m letters from {1, 2, 3}
  for (int m = d; m >= 0; --m) {
    int n = d - m;
    long count = 1;
    for (int k = 0; k < n; ++k) count *= 3;
    for (long code = 0; code < count; ++code) {
      Word w(m, 0);
      long rest = code;
      Word tail(n);
      for (int k = n - 1; k >= 0; --k) {
        tail[k] = 1 + static_cast<int>(rest % 3);
        rest /= 3;
      }
      w.insert(w.end(), tail.begin(), tail.end());
      out.push_back(std::move(w));
    }
  }
  return out;
}

long rank_in_degree(int d, int bound) {
  if (d < 0 || d > bound)
    throw Error(Errc::BoundExceeded, "degree " + std::to_string(d) + " outside [0, " + std::to_string(bound) + "]");
  // Enumerate all words over {q0..q3} and keep the admissible ones.
  long total = 1;
  for (int k = 0; k < d; ++k) total *= 4;
  long count = 0;
  Word w(d);
  for (long code = 0; code < total; ++code) {
    long rest = code;
    for (int k = 0; k < d; ++k) {
      w[k] = static_cast<int>(rest % 4);
      rest /= 4;
    }
    if (is_admissible(w)) ++count;
  }
  return count;
}

MultiPoly omega_action(const GammaElement& e) {
  MultiPoly acc;
  GammaElement n = normalize(e);
  for (const auto& [w, c] : n.terms()) {
    bool ones = true;
    for (int k : w) ones = ones && k == 1;
    if (ones) acc += c;
  }
  return normalize_i(acc);
}

std::vector<std::pair<std::string, std::pair<GammaElement, GammaElement>>> defining_relations() {
  const GammaRules& rules = gamma_rules();
  std::vector<std::pair<std::string, std::pair<GammaElement, GammaElement>>> out;
  MultiPoly h = MultiPoly::var(Var::h), i = MultiPoly::var(Var::i);
  for (int k = 0; k < 4; ++k) {
    GammaElement rhs;
    for (int j = 0; j < 4; ++j) rhs.add({j}, rules.comm_h[k][j]);
    out.push_back({"q" + std::to_string(k) + "h", {GammaElement::q(k) * GammaElement::scalar(h), rhs}});
  }
  for (int k = 0; k < 4; ++k)
    out.push_back({"q" + std::to_string(k) + "i",
                   {GammaElement::q(k) * GammaElement::scalar(i), GammaElement::word({k}, -i)}});
  for (int k = 1; k < 4; ++k) {
    GammaElement rhs;
    for (const auto& [w, c] : rules.adem[k]) rhs.add(w, c);
    out.push_back({"q" + std::to_string(k) + "q0", {GammaElement::word({k, 0}), rhs}});
  }
  return out;
}

GammaElement parse_gamma(std::string_view text) { return GammaParser(text).parse(); }

}  // namespace pops
