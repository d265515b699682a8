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

#include "pops/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "pops/curve.hpp"
#include "pops/dyerlashof.hpp"
#include "pops/error.hpp"
#include "pops/golden.hpp"
#include "pops/isogeny.hpp"
#include "pops/k1local.hpp"
#include "pops/powerops.hpp"

namespace pops {

namespace {

const std::vector<std::string> kTargets = {"torsion", "isogeny", "psi3", "relations", "gamma", "k1"};

Emission derive_torsion() {
  TorsionData t = compute_torsion_data();
  return {{"f(u)", t.f.to_string()},
          {"g(u)", t.g.to_string()},
          {"f_tilde(u)", t.f_tilde.to_string()},
          {"Q1(v)", t.Q1.to_string()},
          {"R1(v)", t.R1.to_string()},
          {"Q2(v)", t.Q2.to_string()},
          {"R2", t.R2.to_string()},
          {"K(u)", t.K.to_string()},
          {"L(u)", t.L.to_string()},
          {"M(u)", t.M.to_string()},
          {"N(u)", t.N.to_string()}};
}

Emission derive_isogeny(int order) {
  if (order < 0) order = 6;
  if (order < 1 || order > 10) throw Error(Errc::BoundExceeded, "isogeny --order must be in 1..10");
  IsogenyData owned;
  const IsogenyData* data = &isogeny_data();
  if (order > 6) {
    IsogenyOptions opt;
    opt.u_prime_terms = order;
    opt.v_prime_terms = order + 3;
    opt.v_order = order + 7;
    opt.residual_order = order + 3;
    owned = build_isogeny(opt);
    data = &owned;
  }
  Emission e = {{"kappa", data->kappa.to_string()},
                {"lambda", data->lambda.to_string()},
                {"W(kappa)", data->W.to_string()},
                {"a'", data->a_prime.to_string()},
                {"b'", data->b_prime.to_string()}};
  for (int k = 1; k <= order; ++k) e.emplace_back("u' [u^" + std::to_string(k) + "]", data->u_prime[k].to_string());
  for (int k = 3; k <= order + 3; ++k) e.emplace_back("v' [u^" + std::to_string(k) + "]", data->v_prime[k].to_string());
  e.emplace_back("kappa'", dual_relations(*data).kappa_prime.to_string());
  return e;
}

Emission derive_psi3() {
  const PsiFormulaSet& s = psi_formulas();
  return {{"psi3(h)", s.psi_h.to_string()},
          {"psi3(c)", s.psi_c.to_string()},
          {"psi3(i)", s.psi_i.to_string()},
          {"psi3(alpha)", s.psi_alpha.to_string()}};
}

Emission derive_relations() {
  Emission e;
  for (const auto& r : derive_commutation()) e.emplace_back(r.name, Fraction(r.rhs).to_string());
  for (const auto& r : derive_adem()) e.emplace_back(r.name, Fraction(r.rhs).to_string());
  for (const auto& r : derive_cartan()) e.emplace_back(r.name, Fraction(r.rhs).to_string());
  FrobeniusCongruence fc = frobenius_congruence_check();
  e.emplace_back("Q0(x) = x^3 mod 3", fc.all() ? "holds" : "fails");
  return e;
}

Emission derive_gamma(int order) {
  if (order < 0) order = 4;
  Emission e;
  for (const auto& [name, rel] : defining_relations()) e.emplace_back(name, rel.second.to_string());
  for (int d = 0; d <= order; ++d) e.emplace_back("rank " + std::to_string(d), std::to_string(rank_in_degree(d)));
  return e;
}

// Exponent of the first coefficient whose integer lift changes between the
// two precisions, minus one; the whole range when none does.
int lift_agreement(const LaurentSeries& lo, const LaurentSeries& hi) {
  for (int k = lo.low(); k <= lo.order(); ++k) {
    PadicGauss x = lo.coeff(k), y = hi.coeff(k);
    if (x.symmetric_re() != y.symmetric_re() || x.symmetric_im() != y.symmetric_im()) return -(k - 1);
  }
  return -lo.order();
}

std::string series_body(const LaurentSeries& s, const std::string& var) {
  std::string t = s.to_string(var);
  auto pos = t.rfind(" + O(");
  return pos == std::string::npos ? t : t.substr(0, pos);
}

Emission derive_k1(int terms, int prec) {
  if (terms < 0 || terms > 200) throw Error(Errc::BoundExceeded, "k1 --terms must be in 0..200");
  if (prec < 2 || prec > 4000) throw Error(Errc::BoundExceeded, "k1 --prec must be in 2..4000");
  Emission e;
  // printed_low: lowest exponent with a published coefficient.
  auto emit = [&](const std::string& name, const std::string& var, int printed_low, const LaurentSeries& lo,
                  const LaurentSeries& hi) {
    auto power = [&](int k) { return var + "^" + std::to_string(k); };
    e.emplace_back(name, series_body(lo, var));
    e.emplace_back(name + " derived terms",
                   -lo.order() < printed_low ? power(printed_low - 1) + " through " + power(-lo.order()) : "none");
    e.emplace_back(name + " error",
                   "O(" + var + "^" + std::to_string(-lo.order() - 1) + ", 3^" + std::to_string(lo.precision()) + ")");
    e.emplace_back(name + " integer lift stable through", var + "^" + std::to_string(lift_agreement(lo, hi)));
  };
  emit("psiF(h)", "h", -2, psiF_h(solve_alpha(terms + 2, prec)), psiF_h(solve_alpha(terms + 2, prec + 8)));
  emit("psiF(c)", "c", -7, psiF_c(solve_alpha_c(terms + 1, prec)), psiF_c(solve_alpha_c(terms + 1, prec + 8)));
  return e;
}

std::string emission_text(const Emission& e) {
  std::string s;
  for (const auto& [name, value] : e) s += name + " = " + value + "\n";
  return s;
}

std::string emission_json(const std::string& target, const Emission& e) {
  nlohmann::ordered_json j;
  j["target"] = target;
  j["formulas"] = nlohmann::ordered_json::array();
  for (const auto& [name, value] : e) j["formulas"].push_back({{"name", name}, {"value", value}});
  return j.dump(2) + "\n";
}

}  // namespace

Emission derive_target(const std::string& target, const DeriveOptions& o) {
  if (target == "torsion") return derive_torsion();
  if (target == "isogeny") return derive_isogeny(o.order);
  if (target == "psi3") return derive_psi3();
  if (target == "relations") return derive_relations();
  if (target == "gamma") return derive_gamma(o.order);
  if (target == "k1") return derive_k1(o.terms, o.prec);
  throw Error(Errc::NotFound, "unknown derive target " + target);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power operations for height-2 Morava E-theory at the prime 3", "power-ops"};
  app.require_subcommand(1);

  std::string target, format = "text";
  DeriveOptions options;
  auto* derive = app.add_subcommand("derive", "Re-derive a family of formulas");
  derive->add_option("target", target, "torsion, isogeny, psi3, relations, gamma or k1")
      ->required()
      ->check(CLI::IsMember(kTargets));
  derive->add_option("--order", options.order, "Truncation order (isogeny: u' terms; gamma: ranks)");
  derive->add_option("--terms", options.terms, "k1: emit through h^-terms and c^-terms")->capture_default_str();
  derive->add_option("--prec", options.prec, "k1: 3-adic precision")->capture_default_str();
  derive->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string scope = "all";
  std::string golden_dir = default_golden_dir().string();
  auto* verify_cmd = app.add_subcommand("verify", "Check the golden corpus against fresh derivations");
  verify_cmd->add_option("scope", scope, "all or a module name")->capture_default_str();
  verify_cmd->add_option("--golden-dir", golden_dir, "Corpus directory")->capture_default_str();

  std::string expression;
  auto* normalize_cmd = app.add_subcommand("normalize", "Admissible normal form of a gamma expression");
  normalize_cmd->add_option("expression", expression, "e.g. \"q2 q0 h\"")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "power-ops: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*derive) {
      Emission e = derive_target(target, options);
      out << (format == "json" ? emission_json(target, e) : emission_text(e));
      return 0;
    }
    if (*verify_cmd) {
      VerifyReport report = verify(scope, golden_dir);
      out << report.to_string();
      return report.ok() ? 0 : 1;
    }
    if (*normalize_cmd) {
      out << normalize(parse_gamma(expression)).to_string() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "power-ops: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::NotFound:
      case Errc::BoundExceeded:
        return 2;
      default:
        return 1;
    }
  }
  return 2;
}

}  // namespace pops
