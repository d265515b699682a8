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

#include "pops/golden.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "pops/curve.hpp"
#include "pops/dyerlashof.hpp"
#include "pops/error.hpp"
#include "pops/isogeny.hpp"
#include "pops/k1local.hpp"
#include "pops/powerops.hpp"

#ifndef POPS_GOLDEN_DIR
#define POPS_GOLDEN_DIR "data/golden"
#endif

namespace pops {

namespace fs = std::filesystem;

GoldenRecord read_golden(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::NotFound, "cannot open " + file.string());
  std::string header;
  std::getline(in, header);
  if (header.rfind("# ", 0) != 0) throw Error(Errc::ParseError, file.string() + ": missing '# id | locator' header");
  auto bar = header.find(" | ");
  if (bar == std::string::npos) throw Error(Errc::ParseError, file.string() + ": header lacks ' | '");
  GoldenRecord r;
  r.id = header.substr(2, bar - 2);
  r.locator = header.substr(bar + 3);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!r.expected.empty()) r.expected += ' ';
    r.expected += line;
  }
  if (r.id.empty() || r.expected.empty()) throw Error(Errc::ParseError, file.string() + ": empty id or formula");
  return r;
}

std::vector<GoldenRecord> load_golden(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(Errc::NotFound, "golden directory " + dir.string() + " not found");
  std::vector<GoldenRecord> out;
  std::set<std::string> seen;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".txt") continue;
    GoldenRecord r = read_golden(entry.path());
    if (!seen.insert(r.id).second) throw Error(Errc::ParseError, "duplicate golden id " + r.id);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  return out;
}

fs::path default_golden_dir() { return fs::path(POPS_GOLDEN_DIR); }

namespace {

enum class Kind { exact, mod3, gamma, k1 };

struct Derived {
  Fraction value;
  GammaElement gamma;
  K1Expansion k1;
};

struct Entry {
  std::string module;
  Kind kind;
  std::function<Derived()> derive;
};

Derived of(const Fraction& f) { return Derived{f, {}, {}}; }
Derived of(const MultiPoly& p) { return of(Fraction(p)); }
Derived of(const LPoly& p) { return of(Fraction(p)); }

const TorsionData& torsion() {
  static const TorsionData t = compute_torsion_data();
  return t;
}

Fraction quotient_fraction(const QuotientElement& e) {
  MultiPoly acc;
  for (int k = 0; k < 4; ++k) acc += e.coords[k] * MultiPoly::var(Var::alpha, k);
  return Fraction(acc);
}

const std::vector<Relation>& relations() {
  static const std::vector<Relation> all = [] {
    std::vector<Relation> r = derive_commutation();
    for (auto& x : derive_adem()) r.push_back(x);
    for (auto& x : derive_cartan()) r.push_back(x);
    return r;
  }();
  return all;
}

const MultiPoly& relation(const std::string& name) {
  for (const auto& r : relations())
    if (r.name == name) return r.rhs;
  throw Error(Errc::NotFound, "no derived relation " + name);
}

template <class T>
Fraction series_sum(const std::vector<T>& coeffs, int from, int to) {
  Fraction acc;
  for (int k = from; k <= to && k < static_cast<int>(coeffs.size()); ++k)
    acc = acc + Fraction(coeffs[k]) * Fraction(MultiPoly::var(Var::u, k));
  return acc;
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> reg = [] {
    std::map<std::string, Entry> r;
    auto add = [&](const std::string& id, const std::string& module, Kind kind, std::function<Derived()> fn) {
      r.emplace(id, Entry{module, kind, std::move(fn)});
    };
    // Torsion data.
    add("prop4.f", "curve", Kind::exact, [] { return of(torsion().f); });
    add("prop4.g", "curve", Kind::exact, [] { return of(torsion().g); });
    add("prop4.f_mod3", "curve", Kind::mod3, [] { return of(torsion().f); });
    add("appA.f_tilde", "curve", Kind::exact, [] { return of(torsion().f_tilde); });
    add("appA.Q1", "curve", Kind::exact, [] { return of(torsion().Q1); });
    add("appA.R1", "curve", Kind::exact, [] { return of(torsion().R1); });
    add("appA.Q2", "curve", Kind::exact, [] { return of(torsion().Q2); });
    add("appA.R2", "curve", Kind::exact, [] { return of(torsion().R2); });
    add("appA.K", "curve", Kind::exact, [] { return of(torsion().K); });
    add("appA.L", "curve", Kind::exact, [] { return of(torsion().L); });
    add("appA.M", "curve", Kind::exact, [] { return of(torsion().M); });
    add("appA.N", "curve", Kind::exact, [] { return of(torsion().N); });
    // Series.
    add("appB.v_series", "series", Kind::exact, [] {
      auto v = v_series_symbolic(12);
      std::vector<MultiPoly> c;
      for (int k = 0; k <= 12; ++k) c.push_back(v.coeff(k));
      return of(series_sum(c, 0, 12));
    });
    // Isogeny.
    add("appB.kappa", "isogeny", Kind::exact, [] { return of(isogeny_data().kappa); });
    add("appB.lambda", "isogeny", Kind::exact, [] { return of(isogeny_data().lambda); });
    add("appB.u_prime", "isogeny", Kind::exact, [] { return of(series_sum(isogeny_data().u_prime, 1, 6)); });
    add("appB.v_prime", "isogeny", Kind::exact, [] { return of(series_sum(isogeny_data().v_prime, 3, 9)); });
    add("prop6.W", "isogeny", Kind::exact, [] { return of(isogeny_data().W); });
    add("prop6.a_prime", "isogeny", Kind::exact, [] { return of(isogeny_data().a_prime); });
    add("prop6.b_prime", "isogeny", Kind::exact, [] { return of(isogeny_data().b_prime); });
    add("prop6.kappa", "isogeny", Kind::exact, [] {
      const auto& d = isogeny_data();
      if (!kappa_identity_residue(d).is_zero())
        throw Error(Errc::ResidueNonzero, "kappa differs from a e - d^2 modulo f");
      return of(d.kappa);
    });
    add("cor9.kappa_prime", "isogeny", Kind::exact, [] { return of(dual_relations(isogeny_data()).kappa_prime); });
    add("rmk17.minus_kappa_prime_mod3", "isogeny", Kind::mod3, [] {
      // On the formal branch kappa = 0 mod 3.
      return of(-dual_relations(isogeny_data()).kappa_prime.subs(Var::kappa, MultiPoly(0)));
    });
    // Total power operation.
    add("cor7.psi_h", "powerops", Kind::exact, [] { return of(quotient_fraction(psi_formulas().psi_h)); });
    add("cor7.psi_c", "powerops", Kind::exact, [] { return of(quotient_fraction(psi_formulas().psi_c)); });
    add("cor7.psi_i", "powerops", Kind::exact, [] { return of(quotient_fraction(psi_formulas().psi_i)); });
    add("cor7.c_prime", "powerops", Kind::exact, [] { return of(quotient_fraction(psi_formulas().c_prime)); });
    add("cor7.w", "powerops", Kind::exact, [] { return of(AlphaQuotient::in_c().w()); });
    add("sec3.psi_alpha", "powerops", Kind::exact, [] { return of(quotient_fraction(psi_formulas().psi_alpha)); });
    for (int k = 0; k < 4; ++k) {
      std::string q = "q" + std::to_string(k), Q = "Q" + std::to_string(k);
      add("prop10.comm.h." + q, "powerops", Kind::exact, [Q] { return of(relation(Q + "(hx)")); });
      add("prop10.comm.c." + q, "powerops", Kind::exact, [Q] { return of(relation(Q + "(cx)")); });
      add("prop10.comm.i." + q, "powerops", Kind::exact, [Q] { return of(relation(Q + "(ix)")); });
      add("prop10.cartan." + q, "powerops", Kind::exact, [Q] { return of(relation(Q + "(xy)")); });
      // Dyer-Lashof relations read off the derived operations: Q_k(hx) gives
      // q_k h, Q_jQ_k(x) gives the word q_j q_k.
      add("def12.comm." + q, "dyerlashof", Kind::gamma, [Q] {
        const MultiPoly& rhs = relation(Q + "(hx)");
        GammaElement g;
        for (int j = 0; j < 4; ++j) g.add({j}, rhs.coeff(q_of_x(j), 1));
        return Derived{Fraction(), g, {}};
      });
    }
    for (int k = 1; k <= 3; ++k) {
      std::string name = "Q" + std::to_string(k) + "Q0(x)";
      add("prop10.adem.q" + std::to_string(k) + "q0", "powerops", Kind::exact, [name] { return of(relation(name)); });
      add("def12.adem.q" + std::to_string(k) + "q0", "dyerlashof", Kind::gamma, [name] {
        const MultiPoly& rhs = relation(name);
        GammaElement g;
        for (int j = 0; j < 4; ++j)
          for (int l = 0; l < 4; ++l) g.add({j, l}, rhs.coeff(qq_of_x(j, l), 1));
        return Derived{Fraction(), g, {}};
      });
    }
    // K(1)-local.
    add("sec4.w_mod3", "k1local", Kind::mod3, [] { return of(unique_root_check().w_mod3); });
    add("sec4.psiF_h", "k1local", Kind::k1, [] { return Derived{Fraction(), {}, k1_expansion(K1Variable::h, 2, 24)}; });
    add("sec4.psiF_c", "k1local", Kind::k1, [] { return Derived{Fraction(), {}, k1_expansion(K1Variable::c, 7, 24)}; });
    return r;
  }();
  return reg;
}

std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && i + 2 < s.size() && ch == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
      out.push_back(cur);
      cur = std::string(1, s[i + 1]) + " ";
      i += 2;
      continue;
    }
    cur += ch;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

MultiPoly mod3_num(const Fraction& x, const Fraction& y) { return mod3(x.num() * y.den()); }

MultiPoly k1_poly(const K1Expansion& e) {
  Var v = e.variable == K1Variable::h ? Var::h : Var::c;
  MultiPoly acc;
  for (const auto& [exp, c] : e.coefficients) acc += Rational(c) * MultiPoly::var(v, exp);
  return acc;
}

}  // namespace

std::string term_diff(const std::string& expected, const std::string& derived) {
  auto a = split_terms(expected), b = split_terms(derived);
  std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = m; j-- > 0;)
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
  std::ostringstream os;
  os << "--- expected\n+++ derived\n";
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      os << "  " << a[i] << "\n";
      ++i, ++j;
    } else if (j < m && (i == n || lcs[i][j + 1] >= lcs[i + 1][j])) {
      os << "+ " << b[j++] << "\n";
    } else {
      os << "- " << a[i++] << "\n";
    }
  }
  return os.str();
}

std::string golden_module(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end()) throw Error(Errc::NotFound, "unregistered golden id " + id);
  return it->second.module;
}

std::vector<std::string> golden_ids() {
  std::vector<std::string> out;
  for (const auto& [id, e] : registry()) out.push_back(id);
  return out;
}

VerifyResult verify_record(const GoldenRecord& record) {
  VerifyResult res;
  res.id = record.id;
  auto it = registry().find(record.id);
  if (it == registry().end()) {
    res.module = "unknown";
    res.note = "unregistered id";
    return res;
  }
  const Entry& entry = it->second;
  res.module = entry.module;
  try {
    Derived d = entry.derive();
    switch (entry.kind) {
      case Kind::exact: {
        Fraction e = parse_expression(record.expected);
        res.expected = e.to_string();
        res.derived = d.value.to_string();
        res.ok = e == d.value;
        break;
      }
      case Kind::mod3: {
        Fraction e = parse_expression(record.expected);
        MultiPoly lhs = mod3_num(e, d.value), rhs = mod3_num(d.value, e);
        res.expected = Fraction(mod3(e.num()), e.den()).to_string();
        res.derived = Fraction(mod3(d.value.num()), d.value.den()).to_string();
        res.ok = lhs == rhs;
        res.note = "mod 3";
        break;
      }
      case Kind::gamma: {
        GammaElement e = parse_gamma(record.expected);
        res.expected = e.to_string();
        res.derived = d.gamma.to_string();
        res.ok = e == d.gamma;
        break;
      }
      case Kind::k1: {
        Fraction e = parse_expression(record.expected);
        Fraction got(k1_poly(d.k1));
        res.expected = e.to_string();
        res.derived = got.to_string();
        res.ok = e == got;
        res.note = std::to_string(e.num().size()) + " coefficients";
        break;
      }
    }
  } catch (const Error& err) {
    res.ok = false;
    res.note = err.what();
    return res;
  }
  if (!res.ok) res.diff = term_diff(res.expected, res.derived);
  return res;
}

bool VerifyReport::ok() const {
  if (!missing.empty()) return false;
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok; });
}

std::string VerifyReport::to_string() const {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    os << (r.ok ? "PASS " : "FAIL ") << r.id << " [" << r.module << "]";
    if (!r.note.empty()) os << " (" << r.note << ")";
    os << "\n";
    if (r.ok) {
      ++passed;
    } else if (!r.diff.empty()) {
      os << r.diff;
    }
  }
  for (const auto& id : missing) os << "MISSING " << id << "\n";
  os << results.size() << " records, " << passed << " passed, " << results.size() - passed << " failed";
  if (!missing.empty()) os << ", " << missing.size() << " missing";
  os << "\n";
  return os.str();
}

VerifyReport verify(const std::string& scope, const fs::path& dir) {
  std::set<std::string> modules;
  for (const auto& [id, e] : registry()) modules.insert(e.module);
  if (scope != "all" && !modules.count(scope)) throw Error(Errc::NotFound, "unknown verify scope " + scope);
  VerifyReport report;
  std::set<std::string> present;
  for (const auto& rec : load_golden(dir)) {
    present.insert(rec.id);
    auto it = registry().find(rec.id);
    std::string module = it == registry().end() ? "unknown" : it->second.module;
    if (scope != "all" && module != scope) continue;
    report.results.push_back(verify_record(rec));
  }
  for (const auto& [id, e] : registry())
    if ((scope == "all" || e.module == scope) && !present.count(id)) report.missing.push_back(id);
  return report;
}

}  // namespace pops
