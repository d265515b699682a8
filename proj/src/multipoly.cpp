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

#include "pops/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace pops {

namespace {

constexpr std::array<std::string_view, kNumVars> kNames = {
    "a", "b", "c", "d", "e", "u", "v", "x", "y", "α", "κ", "λ", "h", "i", "u1", "u2", "u3",
    "Q0(x)", "Q1(x)", "Q2(x)", "Q3(x)",
    "Q0(y)", "Q1(y)", "Q2(y)", "Q3(y)",
    "Q0Q0(x)", "Q0Q1(x)", "Q0Q2(x)", "Q0Q3(x)", "Q1Q0(x)", "Q1Q1(x)", "Q1Q2(x)", "Q1Q3(x)",
    "Q2Q0(x)", "Q2Q1(x)", "Q2Q2(x)", "Q2Q3(x)", "Q3Q0(x)", "Q3Q1(x)", "Q3Q2(x)", "Q3Q3(x)"};

constexpr std::array<int, kNumVars> kWeights = {1, 2, 0, -1, -3, -1, -3, 2, 3, 0, -2, -6, 0, 0, -1, -1, -1};

Monomial zero_monomial() {
  Monomial m{};
  return m;
}

int total_degree(const Monomial& m) {
  int s = 0;
  for (auto e : m) s += e;
  return s;
}

bool is_zero_monomial(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](std::int16_t e) { return e == 0; });
}

// "a^2*b" style; empty for the unit monomial.
std::string monomial_text(const Monomial& m) {
  std::string s;
  for (int k = 0; k < kNumVars; ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += kNames[k];
    if (m[k] != 1) s += "^" + std::to_string(m[k]);
  }
  return s;
}

void append_term(std::string& s, const Rational& coeff, const std::string& mono) {
  Rational a = abs(coeff);
  if (s.empty()) {
    if (coeff < 0) s += "-";
  } else {
    s += coeff < 0 ? " - " : " + ";
  }
  if (mono.empty()) {
    s += to_string(a);
  } else if (a == 1) {
    s += mono;
  } else {
    s += to_string(a) + "*" + mono;
  }
}

}  // namespace

std::string_view var_name(Var v) { return kNames[static_cast<int>(v)]; }

int var_weight(Var v) {
  int k = static_cast<int>(v);
  return k < static_cast<int>(kWeights.size()) ? kWeights[k] : 0;
}

bool is_q_symbol(Var v) { return static_cast<int>(v) >= static_cast<int>(Var::Q0x); }

std::optional<Var> var_from_name(std::string_view name) {
  if (name == "alpha") return Var::alpha;
  if (name == "kappa") return Var::kappa;
  if (name == "lambda") return Var::lambda;
  for (int k = 0; k < kNumVars; ++k)
    if (kNames[k] == name) return static_cast<Var>(k);
  return std::nullopt;
}

bool MonomialOrder::operator()(const Monomial& x, const Monomial& y) const {
  int dx = total_degree(x), dy = total_degree(y);
  if (dx != dy) return dx > dy;
  for (int k = 0; k < kNumVars; ++k)
    if (x[k] != y[k]) return x[k] > y[k];
  return false;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(const Rational& q) {
  if (q != 0) terms_.emplace(zero_monomial(), q);
}

MultiPoly MultiPoly::var(Var v, int power) {
  Monomial m = zero_monomial();
  m[static_cast<int>(v)] = static_cast<std::int16_t>(power);
  return term(m, 1);
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& coeff) {
  MultiPoly p;
  if (coeff != 0) p.terms_.emplace(m, coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_zero_monomial(terms_.begin()->first));
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(zero_monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly r = p;
  r += q;
  return r;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly r = p;
  r -= q;
  return r;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly r;
  Rational t;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      Monomial m;
      for (int k = 0; k < kNumVars; ++k) m[k] = static_cast<std::int16_t>(mp[k] + mq[k]);
      mpq_mul(t.get_mpq_t(), cp.get_mpq_t(), cq.get_mpq_t());
      r.add_term(m, t);
    }
  }
  return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
  if (s == 0) return MultiPoly();
  MultiPoly r = p;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  MultiPoly result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

bool MultiPoly::uses(Var v) const {
  int k = static_cast<int>(v);
  return std::any_of(terms_.begin(), terms_.end(), [k](const auto& t) { return t.first[k] != 0; });
}

int MultiPoly::degree_in(Var v) const {
  int k = static_cast<int>(v);
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m[k] > d) d = m[k];
    first = false;
  }
  return d;
}

int MultiPoly::low_degree_in(Var v) const {
  int k = static_cast<int>(v);
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m[k] < d) d = m[k];
    first = false;
  }
  return d;
}

MultiPoly MultiPoly::coeff(Var v, int e) const {
  int k = static_cast<int>(v);
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m[k] != e) continue;
    Monomial mm = m;
    mm[k] = 0;
    r.terms_.emplace(mm, c);
  }
  return r;
}

MultiPoly MultiPoly::shift(Var v, int e) const {
  int k = static_cast<int>(v);
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm[k] = static_cast<std::int16_t>(mm[k] + e);
    r.terms_.emplace(mm, c);
  }
  return r;
}

MultiPoly MultiPoly::subs(Var v, const MultiPoly& value) const {
  int k = static_cast<int>(v);
  std::map<int, MultiPoly> powers;
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    int e = m[k];
    Monomial mm = m;
    mm[k] = 0;
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
    r += term(mm, c) * it->second;
  }
  return r;
}

MultiPoly MultiPoly::map_coefficients(const std::function<Rational(const Rational&)>& fn) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
  return r;
}

std::optional<int> MultiPoly::graded_degree() const {
  std::optional<int> w;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int k = 0; k < kNumVars; ++k) s += m[k] * var_weight(static_cast<Var>(k));
    if (w && *w != s) return std::nullopt;
    w = s;
  }
  return w;
}

bool MultiPoly::is_unit() const { return terms_.size() == 1; }

MultiPoly MultiPoly::inverse() const {
  if (terms_.size() != 1) throw Error(Errc::DivisionByNonUnit, to_string() + " is not a unit monomial");
  const auto& [m, c] = *terms_.begin();
  Monomial mm;
  for (int k = 0; k < kNumVars; ++k) mm[k] = static_cast<std::int16_t>(-m[k]);
  return term(mm, 1 / c);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) append_term(s, c, monomial_text(m));
  return s;
}

// ---------------------------------------------------------------------------
// Univariate views and division

UniPolyView UniPolyView::of(const MultiPoly& p, Var main) {
  UniPolyView view;
  view.main = main;
  if (p.is_zero()) return view;
  int k = static_cast<int>(main);
  view.low = p.low_degree_in(main);
  view.coefficients.resize(p.degree_in(main) - view.low + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    mm[k] = 0;
    view.coefficients[m[k] - view.low] += MultiPoly::term(mm, c);
  }
  return view;
}

MultiPoly UniPolyView::to_poly() const {
  MultiPoly r;
  for (std::size_t j = 0; j < coefficients.size(); ++j)
    r += coefficients[j].shift(main, low + static_cast<int>(j));
  return r;
}

std::pair<MultiPoly, MultiPoly> divrem(const MultiPoly& p, const MultiPoly& d, Var v) {
  if (d.is_zero()) throw Error(Errc::DivisionByNonUnit, "division by the zero polynomial");
  if (p.low_degree_in(v) < 0 || d.low_degree_in(v) < 0)
    throw Error(Errc::DivisionByNonUnit, "Euclidean division needs polynomials in " + std::string(var_name(v)));
  int dd = d.degree_in(v);
  MultiPoly lc = d.coeff(v, dd);
  if (!lc.is_unit())
    throw Error(Errc::NonUnitLeadingCoefficient, "leading coefficient " + lc.to_string() + " is not a unit");
  MultiPoly lc_inv = lc.inverse();
  MultiPoly q, r = p;
  while (!r.is_zero() && r.degree_in(v) >= dd) {
    int k = r.degree_in(v);
    MultiPoly t = (r.coeff(v, k) * lc_inv).shift(v, k - dd);
    q += t;
    r -= t * d;
  }
  return {q, r};
}

std::pair<UniPolyView, UniPolyView> divrem(const UniPolyView& p, const UniPolyView& d) {
  auto [q, r] = divrem(p.to_poly(), d.to_poly(), p.main);
  return {UniPolyView::of(q, p.main), UniPolyView::of(r, p.main)};
}

MultiPoly disc_poly() { return MultiPoly::var(Var::a, 2) - Rational(16) * MultiPoly::var(Var::b); }

bool exact_div_disc(const MultiPoly& p, MultiPoly& quotient) {
  if (p.is_zero()) {
    quotient = p;
    return true;
  }
  // p = (a^2 - 16b) q with b as the main variable: p_k = a^2 q_k - 16 q_{k-1}.
  UniPolyView view = UniPolyView::of(p, Var::b);
  int n = static_cast<int>(view.coefficients.size()) - 1;
  if (n < 1) return false;
  std::vector<MultiPoly> q(n);
  MultiPoly a2 = MultiPoly::var(Var::a, 2);
  Rational m16 = Rational(-1, 16);
  q[n - 1] = m16 * view.coefficients[n];
  for (int k = n - 1; k >= 1; --k) q[k - 1] = Rational(1, 16) * (a2 * q[k] - view.coefficients[k]);
  if (a2 * q[0] != view.coefficients[0]) return false;
  UniPolyView qv;
  qv.main = Var::b;
  qv.low = view.low;
  qv.coefficients = std::move(q);
  quotient = qv.to_poly();
  return true;
}

// ---------------------------------------------------------------------------
// Canonical text

namespace {

Var main_variable_for(const MultiPoly& p, bool& q_group, bool& found) {
  q_group = false;
  found = false;
  for (const auto& [m, c] : p.terms())
    for (int k = static_cast<int>(Var::Q0x); k < kNumVars; ++k)
      if (m[k] != 0) q_group = true;
  if (q_group) {
    found = true;
    return Var::Q0x;
  }
  for (Var v : {Var::u, Var::v, Var::d, Var::x, Var::y, Var::kappa, Var::h, Var::c, Var::alpha, Var::u1, Var::u2, Var::u3}) {
    if (p.uses(v)) {
      found = true;
      return v;
    }
  }
  return Var::a;
}

// Polynomial text grouped by the main variable (or by the Q-symbol part of
// each monomial).
std::string collected_text(const MultiPoly& p) {
  bool q_group = false, found = false;
  Var main = main_variable_for(p, q_group, found);
  if (!found) return p.to_string();

  auto split = [&](const Monomial& m, Monomial& key, Monomial& rest) {
    key = zero_monomial();
    rest = m;
    if (q_group) {
      for (int k = static_cast<int>(Var::Q0x); k < kNumVars; ++k) {
        key[k] = m[k];
        rest[k] = 0;
      }
    } else {
      int k = static_cast<int>(main);
      key[k] = m[k];
      rest[k] = 0;
    }
  };

  std::map<Monomial, MultiPoly, MonomialOrder> groups;
  for (const auto& [m, c] : p.terms()) {
    Monomial key, rest;
    split(m, key, rest);
    groups[key] += MultiPoly::term(rest, c);
  }

  std::string s;
  for (const auto& [key, coeff] : groups) {
    std::string mono = monomial_text(key);
    if (coeff.size() == 1) {
      const auto& [rm, rc] = *coeff.terms().begin();
      std::string rest = monomial_text(rm);
      std::string both = rest.empty() ? mono : (mono.empty() ? rest : rest + "*" + mono);
      append_term(s, rc, both);
      continue;
    }
    if (mono.empty()) {
      for (const auto& [rm, rc] : coeff.terms()) append_term(s, rc, monomial_text(rm));
      continue;
    }
    s += s.empty() ? "" : " + ";
    s += "(" + coeff.to_string() + ")*" + mono;
  }
  return s;
}

Integer gcd_int(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

Integer lcm_int(const Integer& x, const Integer& y) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return l;
}

std::string format_factored(const MultiPoly& p, int disc) {
  if (p.is_zero()) return "0";
  int ea = std::min(0, p.low_degree_in(Var::a));
  int eb = std::min(0, p.low_degree_in(Var::b));
  bool integral = true;
  Integer g = 0, l = 1;
  for (const auto& [m, c] : p.terms()) {
    if (c.get_den() != 1) integral = false;
    g = gcd_int(g, c.get_num());
    l = lcm_int(l, c.get_den());
  }
  if (integral && ea == 0 && eb == 0 && disc == 0) return collected_text(p);

  // sign taken from the first printed term of the primitive part
  MultiPoly unit_part = MultiPoly::var(Var::a, ea) * MultiPoly::var(Var::b, eb);
  Rational content(g, l);
  content.canonicalize();
  MultiPoly prim = (1 / content) * (p * unit_part.inverse());
  std::string body = collected_text(prim);
  if (body[0] == '-') {
    content = -content;
    prim = -prim;
    body = collected_text(prim);
  }

  std::string den;
  auto add = [&](const std::string& factor) {
    if (!den.empty()) den += "*";
    den += factor;
  };
  if (content.get_den() != 1) add(content.get_den().get_str());
  if (ea < 0) add(ea == -1 ? "a" : "a^" + std::to_string(-ea));
  if (eb < 0) add(eb == -1 ? "b" : "b^" + std::to_string(-eb));
  if (disc > 0) add(disc == 1 ? "(a^2 - 16*b)" : "(a^2 - 16*b)^" + std::to_string(disc));

  Integer num = abs(content.get_num());
  std::string sign = content < 0 ? "-" : "";
  std::string factor;
  if (den.empty()) {
    factor = num.get_str();
  } else {
    bool single = den.find('*') == std::string::npos && den.find('^') == std::string::npos;
    factor = num.get_str() + "/" + (single ? den : "(" + den + ")");
  }
  if (prim.size() == 1 && prim.is_constant()) return sign + factor;
  return sign + "(" + factor + ")*(" + body + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// LPoly

LPoly::LPoly(MultiPoly num, int disc) : num_(std::move(num)), disc_(disc) {
  if (disc_ < 0) {
    num_ = num_ * disc_poly().pow(-disc_);
    disc_ = 0;
  }
  canonicalize();
}

void LPoly::canonicalize() {
  if (num_.is_zero()) {
    disc_ = 0;
    return;
  }
  MultiPoly q;
  while (disc_ > 0 && exact_div_disc(num_, q)) {
    num_ = std::move(q);
    --disc_;
  }
}

LPoly operator+(const LPoly& x, const LPoly& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  int k = std::max(x.disc_, y.disc_);
  MultiPoly D = disc_poly();
  return LPoly(x.num_ * D.pow(k - x.disc_) + y.num_ * D.pow(k - y.disc_), k);
}

LPoly operator-(const LPoly& x, const LPoly& y) { return x + (-y); }

LPoly operator*(const LPoly& x, const LPoly& y) { return LPoly(x.num_ * y.num_, x.disc_ + y.disc_); }

LPoly LPoly::reduce_mod(const MultiPoly& m, Var v) const { return LPoly(divrem(num_, m, v).second, disc_); }

std::optional<int> LPoly::graded_degree() const {
  auto w = num_.graded_degree();
  if (!w) return w;
  return *w - 2 * disc_;
}

std::string LPoly::to_string() const { return format_factored(num_, disc_); }

// ---------------------------------------------------------------------------
// Fraction

Fraction::Fraction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

Fraction::Fraction(const LPoly& p) : num_(p.num()), den_(disc_poly().pow(p.disc())) { normalize(); }

void Fraction::normalize() {
  if (den_.is_zero()) throw Error(Errc::DivisionByNonUnit, "fraction with zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    num_ = num_ * den_.inverse();
    den_ = MultiPoly(1);
    return;
  }
  Rational lc = den_.terms().begin()->second;
  if (lc != 1) {
    num_ = (1 / lc) * num_;
    den_ = (1 / lc) * den_;
  }
}

Fraction operator+(const Fraction& x, const Fraction& y) {
  if (x.den_ == y.den_) return Fraction(x.num_ + y.num_, x.den_);
  return Fraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Fraction operator-(const Fraction& x, const Fraction& y) { return x + (-y); }

Fraction operator*(const Fraction& x, const Fraction& y) { return Fraction(x.num_ * y.num_, x.den_ * y.den_); }

Fraction operator/(const Fraction& x, const Fraction& y) {
  if (y.is_zero()) throw Error(Errc::DivisionByNonUnit, "division by zero");
  return Fraction(x.num_ * y.den_, x.den_ * y.num_);
}

Fraction Fraction::pow(int n) const {
  if (n < 0) return (Fraction(1) / *this).pow(-n);
  return Fraction(num_.pow(n), den_.pow(n));
}

bool operator==(const Fraction& x, const Fraction& y) { return x.num_ * y.den_ == y.num_ * x.den_; }

std::optional<LPoly> Fraction::to_lpoly() const {
  MultiPoly d = den_, q;
  int k = 0;
  while (!d.is_monomial() && exact_div_disc(d, q)) {
    d = std::move(q);
    ++k;
  }
  if (!d.is_monomial()) return std::nullopt;
  return LPoly(num_ * d.inverse(), k);
}

std::string Fraction::to_string() const {
  if (auto l = to_lpoly()) return l->to_string();
  return "(" + collected_text(num_) + ")/(" + collected_text(den_) + ")";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Fraction parse() {
    Fraction r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
  }

  // ASCII '-' or U+2212
  bool take_minus() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool take(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    unsigned char ch = static_cast<unsigned char>(s_[pos_]);
    return std::isalnum(ch) || ch == '(' || ch == 0xCE;
  }

  Fraction expr() {
    Fraction r;
    bool neg = take_minus();
    if (!neg) take('+');
    r = term();
    if (neg) r = -r;
    for (;;) {
      if (take('+')) {
        r = r + term();
      } else if (take_minus()) {
        r = r - term();
      } else {
        return r;
      }
    }
  }

  Fraction term() {
    Fraction r = factor();
    for (;;) {
      if (take('*')) {
        r = r * factor();
      } else if (take('/')) {
        r = r / factor();
      } else if (starts_atom()) {
        r = r * factor();
      } else {
        return r;
      }
    }
  }

  Fraction factor() {
    if (take_minus()) return -factor();
    Fraction base = atom();
    if (take('^')) base = base.pow(exponent());
    return base;
  }

  int exponent() {
    bool paren = take('(');
    bool neg = take_minus();
    if (!neg) take('+');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !take(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  Fraction atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (take('(')) {
      Fraction r = expr();
      if (!take(')')) fail("expected ')'");
      return r;
    }
    unsigned char ch = static_cast<unsigned char>(s_[pos_]);
    if (std::isdigit(ch)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Integer n(std::string(s_.substr(start, pos_ - start)));
      return Fraction(MultiPoly(Rational(n)));
    }
    if (ch == 0xCE && pos_ + 1 < s_.size()) {
      std::string_view g = s_.substr(pos_, 2);
      pos_ += 2;
      if (g == "α") return Fraction(MultiPoly::var(Var::alpha));
      if (g == "κ") return Fraction(MultiPoly::var(Var::kappa));
      if (g == "λ") return Fraction(MultiPoly::var(Var::lambda));
      fail("unknown symbol");
    }
    if (std::isalpha(ch) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name[0] == 'Q' && pos_ + 2 < s_.size() && s_[pos_] == '(' && (s_[pos_ + 1] == 'x' || s_[pos_ + 1] == 'y') &&
          s_[pos_ + 2] == ')') {
        name += s_.substr(pos_, 3);
        pos_ += 3;
      }
      auto v = var_from_name(name);
      if (!v) fail("unknown identifier '" + name + "'");
      return Fraction(MultiPoly::var(*v));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Fraction parse_expression(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Chart bridge

LPoly rehomogenize(const ChartScalar& x, int weight) {
  MultiPoly num;
  const auto& coeffs = x.num().coeffs();
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m] == 0) continue;
    int ea = static_cast<int>(m) - x.c_exp();
    int twice_b = weight - ea + 2 * x.disc_exp();
    if (twice_b % 2 != 0)
      throw Error(Errc::ReductionMismatch,
                  "chart value " + x.to_string() + " has no homogeneous lift of weight " + std::to_string(weight));
    Monomial mono{};
    mono[static_cast<int>(Var::a)] = static_cast<std::int16_t>(ea);
    mono[static_cast<int>(Var::b)] = static_cast<std::int16_t>(twice_b / 2);
    num += MultiPoly::term(mono, coeffs[m]);
  }
  return LPoly(num, x.disc_exp());
}

ChartScalar to_chart(const LPoly& p) {
  if (p.is_zero()) return ChartScalar();
  int low = std::min(0, p.num().low_degree_in(Var::a));
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : p.num().terms()) {
    for (int k = 0; k < kNumVars; ++k)
      if (k != static_cast<int>(Var::a) && k != static_cast<int>(Var::b) && m[k] != 0)
        throw Error(Errc::ReductionMismatch, "chart specialization of a non-scalar polynomial");
    std::size_t idx = m[static_cast<int>(Var::a)] - low;
    if (coeffs.size() <= idx) coeffs.resize(idx + 1);
    coeffs[idx] += c;
  }
  return ChartScalar(QPoly(std::move(coeffs)), -low, p.disc());
}

std::vector<ChartScalar> chart_coeffs(const LPoly& p, Var main) {
  if (p.is_zero()) return {};
  if (p.num().low_degree_in(main) < 0) throw Error(Errc::ReductionMismatch, "negative power of the main variable");
  std::vector<ChartScalar> out(p.num().degree_in(main) + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = to_chart(p.coeff(main, static_cast<int>(k)));
  return out;
}

LPoly rehomogenize_poly(const std::vector<ChartScalar>& coeffs, Var main, int weight) {
  LPoly r;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    int w = weight - static_cast<int>(k) * var_weight(main);
    r = r + rehomogenize(coeffs[k], w) * LPoly(MultiPoly::var(main, static_cast<int>(k)));
  }
  return r;
}

}  // namespace pops
