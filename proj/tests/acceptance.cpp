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

// One line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "metasym/cocycle.hpp"
#include "metasym/errors.hpp"
#include "metasym/local_arith.hpp"
#include "metasym/oracles.hpp"
#include "metasym/schur.hpp"
#include "metasym/symsq.hpp"
#include "metasym/weil_index.hpp"
#include "metasym/weil_rep.hpp"
#include "support.hpp"

using namespace metasym;
using metasym::testing::Sampler;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = limit_s <= 0 || secs < limit_s;
  bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::string limit = limit_s > 0 ? " (limit " + std::to_string(static_cast<int>(limit_s)) + " s)" : "";
  std::printf("criterion %2d  %s  %-34s %s  [%.3f s%s]\n", id, pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
              secs, limit.c_str());
  std::fflush(stdout);
}

std::string frac(size_t good, size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

std::vector<LocalPlace> weil_places() {
  std::vector<LocalPlace> out;
  for (long p : {3, 5, 7, 11, 13}) out.push_back(LocalPlace::finite(p));
  out.push_back(LocalPlace::real());
  return out;
}

const std::vector<std::pair<long, int>> kModels{{3, 1}, {3, 2}, {5, 1}, {7, 1}};

Sign sign_of(Complex z) { return z.real() > 0 ? Sign::plus() : Sign::minus(); }

}  // namespace

int main() {
  criterion(1, "Hilbert reciprocity", 1, [] {
    Sampler rng(1);
    size_t good = 0;
    for (int i = 0; i < 1000; ++i)
      if (reciprocity_product(rng.nonzero(60, 30), rng.nonzero(60, 30)) == Sign::plus()) ++good;
    return Outcome{good == 1000, frac(good, 1000) + " seeded pairs"};
  });

  criterion(2, "Hilbert oracle agreement", 5, [] {
    size_t good = 0, total = 0;
    for (const auto& v : {LocalPlace::finite(2), LocalPlace::finite(3), LocalPlace::finite(5), LocalPlace::finite(7),
                          LocalPlace::real()})
      for (const auto& a : testing::small_values())
        for (const auto& b : testing::small_values()) {
          ++total;
          if (hilbert(a, b, v) == hilbert_solvability_oracle(a, b, v)) ++good;
        }
    return Outcome{good == total, frac(good, total) + " (a, b, v)"};
  });

  criterion(3, "Weil index identities", 5, [] {
    size_t good = 0, total = 0;
    double worst = 0;
    for (const auto& v : weil_places()) {
      AdditiveCharacter psi(v);
      auto reps = square_class_representatives(v);
      for (const auto& a : reps) {
        worst = std::max(worst, gamma_with_residual(AdditiveCharacter(v, a)).residual);
        for (const auto& b : reps) {
          total += 2;
          if (mu_multiplicativity_check(a, b, psi)) ++good;
          bool same = true;
          for (const auto& x : reps) same = same && mu(x, AdditiveCharacter(v, a)) == mu(x, AdditiveCharacter(v, b));
          if (same == same_square_class(a, b, v)) ++good;
        }
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, ", max snap residual %.1e", worst);
    return Outcome{good == total && worst < 1e-6, frac(good, total) + buf};
  });

  criterion(4, "mu(-1) gamma^2 = 1", 0, [] {
    size_t good = 0, total = 0;
    for (const auto& v : weil_places())
      for (const auto& a : square_class_representatives(v)) {
        AdditiveCharacter psi(v, a);
        ++total;
        if (mu(-1, psi) * gamma(psi).pow(2) == EighthRoot::one()) ++good;
      }
    return Outcome{good == total, frac(good, total) + " characters psi_a"};
  });

  criterion(5, "finite Weil model", 60, [] {
    size_t pairs = 0, pm = 0, torus = 0, torus_ok = 0, triples = 0, triples_ok = 0, rejected = 0;
    size_t other = 0, other_ok = 0;
    for (auto [p, n] : kModels) {
      FiniteWeilModel model(p, n);
      LocalPlace v = LocalPlace::finite(p);
      auto gens = model_generators(model);
      for (const auto& g : gens)
        for (const auto& h : gens) {
          ++pairs;
          Complex c = projective_multiplier(model, Word{g}, Word{h}).value;
          if (std::abs(c - Complex(sign_of(c).value(), 0)) < 1e-6) ++pm;
          if (g.kind == Generator::Kind::T && h.kind == Generator::Kind::T) {
            ++torus;
            if (sign_of(c) == hilbert(g.param, h.param, v)) ++torus_ok;
          }
        }
      Sampler rng(static_cast<std::uint64_t>(100 * p + n));
      auto word = [&] {
        Word w{gens[rng.index(gens.size())]};
        if (rng.integer(0, 1)) w.push_back(gens[rng.index(gens.size())]);
        return word_matrix(w);
      };
      for (size_t done = 0; done < 200;) {
        Matrix a = word(), b = word(), c = word();
        try {
          Complex lhs = projective_multiplier(model, a, b).value * projective_multiplier(model, matmul(a, b), c).value;
          Complex rhs = projective_multiplier(model, a, matmul(b, c)).value * projective_multiplier(model, b, c).value;
          ++done;
          ++triples;
          if (std::abs(lhs - rhs) < 1e-6) ++triples_ok;
        } catch (const PreconditionError&) {
          ++rejected;
        }
      }
      Rational u(least_nonresidue(p));
      for (const Rational& a : {Rational(p), u, Rational(-1)}) {
        ++other;
        if (central_scalar_check(model, a)) ++other_ok;
      }
      for (const auto& a : square_class_representatives(v)) {
        if (valuation(a, p) > n - 1) continue;
        ++other;
        if (whittaker_functional_exists(model, a) == same_square_class(a, 1, v)) ++other_ok;
      }
      for (const Rational& a1 : {Rational(1), u})
        for (const Rational& b1 : {Rational(1), u})
          for (const Rational& b2 : {Rational(1), u}) {
            ++other;
            bool expect = same_square_class(a1, b1, v) && same_square_class(1, b2, v);
            if (tensor_whittaker_check(p, n, a1, 1, b1, b2) == expect) ++other_ok;
          }
    }
    bool ok = pm == pairs && torus_ok == torus && triples_ok == triples && other_ok == other;
    return Outcome{ok, "+-1 " + frac(pm, pairs) + ", torus " + frac(torus_ok, torus) + ", cocycle " +
                           frac(triples_ok, triples) + " (" + std::to_string(rejected) +
                           " resampled), central/Whittaker/tensor " + frac(other_ok, other)};
  });

  criterion(6, "parity split", 0, [] {
    size_t good = 0, total = 0;
    for (auto [p, n] : kModels) {
      FiniteWeilModel model(p, n);
      for (const auto& g : model_generators(model)) {
        ++total;
        if (parity_invariance_check(model, g)) ++good;
      }
    }
    return Outcome{good == total, frac(good, total) + " generators"};
  });

  criterion(7, "Schur oracle equivalence", 10, [] {
    Sampler rng(7);
    size_t good = 0, total = 0;
    for (long m = 0; m <= 8; ++m)
      for (size_t r = 1; r <= 4; ++r)
        for (const auto& lam : partitions_of(m, r)) {
          auto values = rng.nonzeros(r, 5, 4);
          ++total;
          if (schur_jt(lam, values) == schur_tableau_oracle(lam, values)) ++good;
        }
    return Outcome{good == total, frac(good, total) + " (lambda, values)"};
  });

  criterion(8, "unramified zeta identity", 10, [] {
    Sampler rng(8);
    SatakeData ones({1, 1}, 3);
    TruncatedSeries lhs = sym_series(ones, 10);
    bool binomial = true;
    for (int m = 0; m <= 10; ++m) binomial = binomial && lhs[m] == Rational((m + 1) * (m + 2) / 2);
    bool first = lhs[0] == 1 && lhs[1] == 3 && lhs[2] == 6 && lhs[3] == 10;
    size_t good = 0, total = 0;
    for (size_t r : {2, 3, 4, 5}) {
      int tuples = r == 5 ? 2 : 5;
      for (int i = 0; i < tuples; ++i) {
        SatakeData sat(rng.nonzeros(r, 6, 4), 5, rng.nonzero(4, 3));
        ++total;
        if (bg_identity_check(sat, 10) && unramified_zeta_check(sat, 10)) ++good;
      }
    }
    ++total;
    if (bg_identity_check(ones, 10) && unramified_zeta_check(ones, 10)) ++good;
    return Outcome{good == total && binomial && first,
                   frac(good, total) + " tuples to X^10, (1-X)^-3 = 1, 3, 6, 10, ..."};
  });

  criterion(9, "square root independence", 0, [] {
    Sampler rng(9);
    size_t good = 0, total = 0;
    for (const Rational& chi : {Rational(4), Rational(9, 4), Rational(2), Rational(-3)})
      for (size_t r : {2, 3, 4}) {
        SatakeData sat(rng.nonzeros(r), 7, chi);
        ChiSquareRoot root(chi);
        ++total;
        bool same = unramified_zeta_series(sat, root, 10) == unramified_zeta_series(sat, root.flipped(), 10);
        for (const auto& lam : even_partitions_of(4, r - 1)) {
          auto a = toral_q_values(lam.padded(r), sat, root), b = toral_q_values(lam.padded(r), sat, root.flipped());
          same = same && a == b;
        }
        if (same) ++good;
      }
    return Outcome{good == total, frac(good, total) + " (chi, r) identical"};
  });

  criterion(10, "Rankin-Selberg factorization", 2, [] {
    Sampler rng(10);
    size_t good = 0, total = 0;
    for (size_t r = 1; r <= 5; ++r)
      for (int i = 0; i < 10; ++i) {
        ++total;
        if (rs_factorization_check(SatakeData(rng.nonzeros(r), 5, rng.nonzero()))) ++good;
      }
    return Outcome{good == total, frac(good, total) + " tuples"};
  });

  criterion(11, "pole bookkeeping", 0, [] {
    bool ok = true;
    for (size_t r = 1; r <= 6; ++r) {
      auto t = pole_report(r, true);
      auto n = pole_report(r, false);
      ok = ok && t.normalizer_poles == std::set<Rational>{Rational(1, 4), Rational(3, 4)} &&
           t.l_poles == std::set<Rational>{0, 1} && n.normalizer_poles.empty() && n.l_poles.empty();
    }
    ok = ok && PoleReport::s_to_l_arg(Rational(3, 4)) == 1 && PoleReport::s_to_l_arg(Rational(1, 4)) == 0;
    return Outcome{ok, "{1/4, 3/4} -> {0, 1}; empty when nontrivial"};
  });

  criterion(12, "Euler product vs zeta(2)", 1, [] {
    std::vector<EulerEntry> table;
    for (long p = 2; p < 100; ++p)
      if (is_prime(p)) table.push_back({p, {Complex(1)}, Complex(1)});
    double partial = euler_product(table, 2.0).real();
    double direct = 0;
    for (long n = 200000; n >= 1; --n) direct += 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    direct += 1.0 / 200000.5;
    double bound = partial * (std::exp(0.5 * (1.0 / 99 + 1.0 / 100)) - 1);
    double gap = direct - partial;
    char buf[128];
    std::snprintf(buf, sizeof buf, "partial %.6f, direct %.6f, gap %.2e <= %.2e", partial, direct, gap, bound);
    return Outcome{gap >= 0 && gap <= bound, buf};
  });

  criterion(13, "cocycle suite", 10, [] {
    Sampler rng(13);
    size_t good = 0, total = 0;
    auto tick = [&](bool ok) {
      ++total;
      if (ok) ++good;
    };
    for (const auto& v : {LocalPlace::finite(3), LocalPlace::finite(5), LocalPlace::real()}) {
      auto reps = square_class_representatives(v);
      for (int i = 0; i < 50; ++i) {
        auto g = i % 2 ? rng.gl2() : rng.torus(3);
        auto e = StructuredElement::identity(g.rank());
        tick(sigma_eval(e, g, v) == Sign::plus() && sigma_eval(g, e, v) == Sign::plus());
      }
      std::vector<StructuredElement> tori;
      for (const auto& a : reps)
        for (const auto& b : reps) tori.push_back(StructuredElement::torus({a, b}));
      for (const auto& g : tori)
        for (const auto& h : tori)
          for (const auto& k : tori) tick(cocycle_identity_check(g, h, k, v));
      for (int i = 0; i < 200; ++i) {
        size_t r = 2 + static_cast<size_t>(i % 4);
        auto t = rng.even_torus(r), h = rng.even_torus(r);
        tick(sigma_torus_even_reduced(t, h, v) == sigma_eval(t, h, v));
      }
      for (int r = 2; r <= 5; ++r)
        for (const auto& a : reps)
          for (const auto& b : reps) {
            Sign expect = hilbert(a, b, v).pow(r * (r - 1) / 2);
            auto za = StructuredElement::central(a, r), zb = StructuredElement::central(b, r);
            tick(sigma_eval(za, zb, v) == expect && sigma_eval(zb, za, v) == expect);
          }
      for (int i = 0; i < 50; ++i) {
        auto n = rng.unipotent(3);
        auto g = rng.torus(3);
        tick(sigma_eval(n, g, v) == Sign::plus() && sigma_eval(g, n, v) == Sign::plus());
      }
      for (int i = 0; i < 30; ++i) {
        Rational c = rng.nonzero(5, 3), x = rng.nonzero(5, 3);
        auto g = StructuredElement::sl2(1, c, 0, 1) * StructuredElement::sl2(x, 0, 0, 1 / x);
        tick(block_lemmas_check({2, 1, 2}, 0, 1, g, StructuredElement::torus({c * c}), v));
        tick(block_lemmas_check({2, 1, 2}, 0, 2, g, g, v));
      }
    }
    for (int i = 0; i < 400; ++i) {
      bool two = i % 2 == 0;
      auto g = two ? rng.gl2() : rng.torus(3);
      auto h = two ? rng.gl2() : rng.torus(3);
      tick(global_sigma_product(g, h) == Sign::plus());
    }
    return Outcome{good == total, frac(good, total) + " exact checks"};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures == 0 ? 0 : 1;
}
