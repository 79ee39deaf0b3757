// Copyright 2026 The metasym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "metasym_cli/app.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "metasym/cocycle.hpp"
#include "metasym/element_parser.hpp"
#include "metasym/errors.hpp"
#include "metasym/local_arith.hpp"
#include "metasym/symsq.hpp"
#include "metasym/weil_index.hpp"
#include "metasym_cli/satake_io.hpp"
#include "metasym_cli/suites.hpp"

namespace metasym::cli {

namespace {

using metasym::to_string;
using cli::to_string;

std::string render_set(const std::set<Rational>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + to_string(x);
  return out + "}";
}

std::optional<Rational> parse_chi(const std::string& text) {
  if (text == "ramified") return std::nullopt;
  return parse_rational(text);
}

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw UsageError("expected true or false, got '" + text + "'");
}

struct Options {
  std::string a = "1", b = "1", place = "inf", scale = "1";
  std::string g, h;
  std::string alphas = "1", chi = "1";
  std::size_t r = 0;
  long q = 3;
  int degree = 10;
  std::string file;
  double s_re = 2, s_im = 0;
  std::string trivial = "true";
  std::string kind = "even", s_exact = "0", xi = "1";
  long blocks = 1;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::string json_path;
  bool timings = false;
};

SatakeData satake_from(const Options& o) {
  auto alphas = parse_rational_list(o.alphas);
  if (o.r != 0 && o.r != alphas.size())
    throw UsageError("--r " + std::to_string(o.r) + " does not match " + std::to_string(alphas.size()) + " alphas");
  return SatakeData(std::move(alphas), o.q, parse_chi(o.chi));
}

int check(const Options& o, std::ostream& out) {
  CheckReport report = run_suite(o.suite, SuiteConfig{o.seed});
  report.print_table(out);
  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path);
    if (!f) throw UsageError("cannot write " + o.json_path);
    f << report.to_json(o.timings) << "\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"metasym: metaplectic cocycles, Weil indices and unramified symmetric square factors"};
  app.require_subcommand(1);
  Options o;

  auto* c_check = app.add_subcommand("check", "run a verification suite");
  c_check->add_option("--suite", o.suite, "symbols, cocycles, weil, weilrep, symsq or all");
  c_check->add_option("--seed", o.seed, "seed for randomized cases");
  c_check->add_option("--json", o.json_path, "write the JSON report here");
  c_check->add_flag("--timings", o.timings, "include per-case timings in the JSON report");

  auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_v");
  c_hilbert->add_option("-a", o.a)->required();
  c_hilbert->add_option("-b", o.b)->required();
  c_hilbert->add_option("--place", o.place, "inf or a prime");

  auto* c_cocycle = app.add_subcommand("cocycle", "sigma(g, h) at a place");
  c_cocycle->add_option("--g", o.g, "element, e.g. torus(2,3) or gl2(1,2,3,4)")->required();
  c_cocycle->set_help_flag("--help");
  c_cocycle->add_option("--h", o.h)->required();
  c_cocycle->add_option("--place", o.place);

  auto* c_gamma = app.add_subcommand("weil-gamma", "Weil index of psi_scale");
  c_gamma->add_option("--place", o.place);
  c_gamma->add_option("--scale", o.scale);

  auto* c_mu = app.add_subcommand("weil-mu", "mu_psi(a) = gamma(psi_a) / gamma(psi)");
  c_mu->add_option("-a", o.a)->required();
  c_mu->add_option("--place", o.place);
  c_mu->add_option("--scale", o.scale);

  auto add_satake = [&](CLI::App* c) {
    c->add_option("--alphas", o.alphas, "comma separated Satake parameters")->required();
    c->add_option("--r", o.r, "rank (checked against the alphas)");
    c->add_option("--chi", o.chi, "chi(varpi) or 'ramified'");
    c->add_option("--q", o.q, "residue field size");
  };
  auto* c_zeta = app.add_subcommand("zeta", "unramified zeta series in X = chi q^{-2s+1/2}");
  add_satake(c_zeta);
  c_zeta->add_option("--deg", o.degree);

  auto* c_lfactor = app.add_subcommand("lfactor", "local Sym^2, exterior square and Rankin-Selberg factors");
  add_satake(c_lfactor);

  auto* c_euler = app.add_subcommand("euler", "partial Euler product of the twisted Sym^2 factors");
  c_euler->add_option("--file", o.file, "Satake table (JSON)")->required();
  c_euler->add_option("--s", o.s_re);
  c_euler->add_option("--s-imag", o.s_im);

  auto* c_poles = app.add_subcommand("poles", "pole bookkeeping");
  c_poles->add_option("--r", o.r)->required();
  c_poles->add_option("--trivial", o.trivial, "whether chi^r omega^2 is trivial");

  auto* c_gk = app.add_subcommand("gk", "normalizing ratio of the spherical section");
  c_gk->add_option("--kind", o.kind, "even or odd");
  c_gk->add_option("--r", o.r)->required();
  c_gk->add_option("--blocks", o.blocks);
  c_gk->add_option("--s", o.s_exact);
  c_gk->add_option("--xi", o.xi, "value of eta^-2 (even) or chi eta^-2 (odd) at varpi, or 'ramified'");
  c_gk->add_option("--q", o.q);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_check) return check(o, out);
    if (*c_hilbert) {
      out << hilbert(parse_rational(o.a), parse_rational(o.b), LocalPlace::parse(o.place)).to_string() << "\n";
    } else if (*c_cocycle) {
      out << sigma_eval(parse_element(o.g), parse_element(o.h), LocalPlace::parse(o.place)).to_string() << "\n";
    } else if (*c_gamma) {
      auto res = gamma_with_residual(AdditiveCharacter(LocalPlace::parse(o.place), parse_rational(o.scale)));
      out << res.value.to_string() << "\n";
    } else if (*c_mu) {
      AdditiveCharacter psi(LocalPlace::parse(o.place), parse_rational(o.scale));
      out << mu(parse_rational(o.a), psi).to_string() << "\n";
    } else if (*c_zeta) {
      SatakeData sat = satake_from(o);
      out << unramified_zeta_series(sat, ChiSquareRoot(sat.chi.value_or(1)), o.degree).to_string() << "\n";
      out << "identity " << (unramified_zeta_check(sat, o.degree) ? "holds" : "FAILS") << " to degree " << o.degree
          << "\n";
    } else if (*c_lfactor) {
      LocalFactors f = local_factors(satake_from(o));
      out << "sym: " << f.sym.to_string() << "\next: " << f.ext.to_string() << "\nrs:  " << f.rs.to_string() << "\n";
    } else if (*c_euler) {
      std::vector<EulerEntry> table;
      for (const auto& e : ingest_satake(o.file)) table.push_back(to_euler_entry(e.p, e.data));
      auto v = euler_product(table, {o.s_re, o.s_im});
      std::ostringstream s;
      s.precision(12);
      s << v.real();
      if (o.s_im != 0 || v.imag() != 0) s << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
      out << s.str() << "\n";
    } else if (*c_poles) {
      PoleReport pr = pole_report(o.r, parse_bool(o.trivial));
      out << "normalizer poles: " << render_set(pr.normalizer_poles) << "\n";
      out << "L poles: " << render_set(pr.l_poles) << "\n";
      if (!pr.normalizer_poles.empty()) {
        std::string sep = "s -> 2s - 1/2: ";
        for (const auto& s : pr.normalizer_poles) {
          out << sep << to_string(s) << " -> " << to_string(PoleReport::s_to_l_arg(s));
          sep = ", ";
        }
        out << "\n";
      }
    } else if (*c_gk) {
      if (o.kind != "even" && o.kind != "odd") throw UsageError("--kind must be even or odd");
      GkKind kind = o.kind == "even" ? GkKind::Even : GkKind::Odd;
      out << gk_ratio(kind, o.r, o.blocks, parse_rational(o.s_exact), parse_chi(o.xi), o.q).to_string() << "\n";
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace metasym::cli
