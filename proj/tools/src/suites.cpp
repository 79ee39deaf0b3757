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

#include "metasym_cli/suites.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "metasym/characters.hpp"
#include "metasym/cocycle.hpp"
#include "metasym/errors.hpp"
#include "metasym/local_arith.hpp"
#include "metasym/oracles.hpp"
#include "metasym/schur.hpp"
#include "metasym/symsq.hpp"
#include "metasym/weil_index.hpp"
#include "metasym/weil_rep.hpp"

namespace metasym::cli {

namespace {

using metasym::to_string;
using cli::to_string;

using Result = std::pair<std::string, bool>;

std::string count_of(size_t good, size_t total) { return std::to_string(good) + "/" + std::to_string(total); }
Result tally(size_t good, size_t total) { return {count_of(good, total), good == total}; }

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  size_t index(size_t n) { return static_cast<size_t>(integer(0, static_cast<long>(n) - 1)); }

  Rational nonzero(long bound = 12, long den_bound = 6) {
    long num = 0;
    while (num == 0) num = integer(-bound, bound);
    return make_rational(num, integer(1, den_bound));
  }

  std::vector<Rational> nonzeros(size_t n) {
    std::vector<Rational> out;
    for (size_t i = 0; i < n; ++i) out.push_back(nonzero());
    return out;
  }

  StructuredElement gl2() {
    while (true) {
      Rational a = integer(-6, 6), b = integer(-6, 6), c = integer(-6, 6), d = integer(-6, 6);
      if (a * d - b * c != 0) return StructuredElement::gl2(a, b, c, d);
    }
  }

  StructuredElement torus(size_t r) { return StructuredElement::torus(nonzeros(r)); }

  /// t with t_1/t_2, t_3/t_4, ... squares.
  StructuredElement even_torus(size_t r) {
    std::vector<Rational> t;
    for (size_t i = 0; i < r; ++i) {
      if (i % 2 == 1) {
        Rational x = nonzero(5, 3);
        t.push_back(t.back() * x * x);
      } else {
        t.push_back(nonzero());
      }
    }
    return StructuredElement::torus(t);
  }

  StructuredElement unipotent(int r) {
    Matrix n = identity_matrix(r);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) n[static_cast<size_t>(i)][static_cast<size_t>(j)] = integer(-4, 4);
    return StructuredElement::unipotent(n);
  }

 private:
  std::mt19937_64 rng_;
};

const std::vector<Rational>& small_values() {
  static const std::vector<Rational> values{1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 10, -10};
  return values;
}

// ---------------------------------------------------------------- symbols

CheckReport symbols_suite(const SuiteConfig& config) {
  CheckReport rep{"symbols", {}};
  Sampler rng(config.seed);
  struct Known {
    Rational a, b;
    LocalPlace v;
    int value;
  };
  const std::vector<Known> known{{-1, -1, LocalPlace::real(), -1},    {-1, -1, LocalPlace::finite(2), -1},
                                 {2, 5, LocalPlace::finite(5), -1},   {3, 3, LocalPlace::finite(3), -1},
                                 {3, 5, LocalPlace::finite(3), -1},   {2, -1, LocalPlace::finite(2), 1},
                                 {5, 5, LocalPlace::finite(2), 1},    {-1, 2, LocalPlace::real(), 1}};
  for (const auto& k : known) {
    std::string in = "a=" + to_string(k.a) + " b=" + to_string(k.b) + " v=" + k.v.to_string();
    rep.run("hilbert/" + in, in, std::to_string(k.value), [&]() -> Result {
      Sign s = hilbert(k.a, k.b, k.v);
      return {s.to_string(), s.value() == k.value};
    });
  }
  rep.run("reciprocity/seeded", "200 random rational pairs", "product over places = 1", [&]() -> Result {
    size_t good = 0;
    for (int i = 0; i < 200; ++i)
      if (reciprocity_product(rng.nonzero(40, 20), rng.nonzero(40, 20)) == Sign::plus()) ++good;
    return tally(good, 200);
  });
  for (const auto& v : {LocalPlace::finite(2), LocalPlace::finite(3), LocalPlace::finite(5), LocalPlace::finite(7),
                        LocalPlace::real()}) {
    rep.run("oracle/" + v.to_string(), "a, b in +-{1,2,3,5,6,10}", "symbol = solvability oracle", [&]() -> Result {
      size_t good = 0, total = 0;
      for (const auto& a : small_values())
        for (const auto& b : small_values()) {
          ++total;
          if (hilbert(a, b, v) == hilbert_solvability_oracle(a, b, v)) ++good;
        }
      return tally(good, total);
    });
    rep.run("bilinear/" + v.to_string(), "square class representatives", "(a,bc) = (a,b)(a,c), (a,b) = (b,a)",
            [&]() -> Result {
              auto reps = square_class_representatives(v);
              size_t good = 0, total = 0;
              for (const auto& a : reps)
                for (const auto& b : reps)
                  for (const auto& c : reps) {
                    ++total;
                    if (hilbert(a, b * c, v) == hilbert(a, b, v) * hilbert(a, c, v) && hilbert(a, b, v) == hilbert(b, a, v))
                      ++good;
                  }
              return tally(good, total);
            });
  }
  return rep;
}

// ------------------------------------------------------------------- weil

CheckReport weil_suite(const SuiteConfig&) {
  CheckReport rep{"weil", {}};
  struct Known {
    long p;
    Rational scale;
    std::string value;
  };
  const std::vector<Known> known{{3, 3, "-i"}, {3, 6, "i"}, {5, 10, "-1"}, {7, 7, "-i"}, {5, 1, "1"}, {0, 1, "e^{i*pi/4}"}};
  for (const auto& k : known) {
    LocalPlace v = k.p == 0 ? LocalPlace::real() : LocalPlace::finite(k.p);
    std::string in = "v=" + v.to_string() + " scale=" + to_string(k.scale);
    rep.run("gamma/" + in, in, k.value, [&]() -> Result {
      std::string got = gamma(AdditiveCharacter(v, k.scale)).to_string();
      return {got, got == k.value};
    });
  }
  for (long p : {3L, 5L, 7L, 11L, 13L, 0L}) {
    LocalPlace v = p == 0 ? LocalPlace::real() : LocalPlace::finite(p);
    AdditiveCharacter psi(v);
    auto reps = square_class_representatives(v);
    rep.run("mu-multiplicative/" + v.to_string(), "square class pairs", "mu(ab) = mu(a)mu(b)(a,b)", [&]() -> Result {
      size_t good = 0, total = 0;
      for (const auto& a : reps)
        for (const auto& b : reps) {
          ++total;
          if (mu_multiplicativity_check(a, b, psi)) ++good;
        }
      return tally(good, total);
    });
    rep.run("mu-square-class/" + v.to_string(), "square class pairs", "mu_{psi_a} = mu_{psi_b} iff a ~ b",
            [&]() -> Result {
              size_t good = 0, total = 0;
              for (const auto& a : reps)
                for (const auto& b : reps) {
                  ++total;
                  bool same = true;
                  for (const auto& x : reps)
                    same = same && mu(x, AdditiveCharacter(v, a)) == mu(x, AdditiveCharacter(v, b));
                  if (same == same_square_class(a, b, v)) ++good;
                }
              return tally(good, total);
            });
    rep.run("mu-minus-one/" + v.to_string(), "psi", "mu(-1) gamma^2 = 1", [&]() -> Result {
      EighthRoot x = mu(-1, psi) * gamma(psi).pow(2);
      return {x.to_string(), x == EighthRoot::one()};
    });
    rep.run("snap-residual/" + v.to_string(), "gamma(psi_a), a over classes", "< 1e-6", [&]() -> Result {
      double worst = 0;
      for (const auto& a : reps) worst = std::max(worst, gamma_with_residual(AdditiveCharacter(v, a)).residual);
      std::ostringstream s;
      s << worst;
      return {s.str(), worst < 1e-6};
    });
  }
  return rep;
}

// --------------------------------------------------------------- cocycles

CheckReport cocycles_suite(const SuiteConfig& config) {
  CheckReport rep{"cocycles", {}};
  Sampler rng(config.seed);
  const std::vector<LocalPlace> places{LocalPlace::finite(3), LocalPlace::finite(5), LocalPlace::real()};
  for (const auto& v : places) {
    rep.run("normalization/" + v.to_string(), "60 random GL2 and rank 3 tori", "sigma(1,g) = sigma(g,1) = 1",
            [&]() -> Result {
              size_t good = 0;
              for (int i = 0; i < 60; ++i) {
                auto g = i % 2 ? rng.gl2() : rng.torus(3);
                auto e = StructuredElement::identity(g.rank());
                if (sigma_eval(e, g, v) == Sign::plus() && sigma_eval(g, e, v) == Sign::plus()) ++good;
              }
              return tally(good, 60);
            });
    rep.run("identity-torus/" + v.to_string(), "all triples of rank 2 tori over square classes",
            "2-cocycle identity", [&]() -> Result {
              auto reps = square_class_representatives(v);
              std::vector<StructuredElement> tori;
              for (const auto& a : reps)
                for (const auto& b : reps) tori.push_back(StructuredElement::torus({a, b}));
              size_t good = 0, total = 0;
              for (const auto& g : tori)
                for (const auto& h : tori)
                  for (const auto& k : tori) {
                    ++total;
                    if (cocycle_identity_check(g, h, k, v)) ++good;
                  }
              return tally(good, total);
            });
    rep.run("identity-gl2/" + v.to_string(), "100 random GL2 triples", "2-cocycle identity", [&]() -> Result {
      size_t good = 0;
      for (int i = 0; i < 100; ++i)
        if (cocycle_identity_check(rng.gl2(), rng.gl2(), rng.gl2(), v)) ++good;
      return tally(good, 100);
    });
    rep.run("even-torus/" + v.to_string(), "100 pairs in T^e, ranks 2 to 5", "reduced formula = sigma",
            [&]() -> Result {
              size_t good = 0;
              for (int i = 0; i < 100; ++i) {
                size_t r = 2 + static_cast<size_t>(i % 4);
                auto t = rng.even_torus(r), h = rng.even_torus(r);
                if (sigma_torus_even_reduced(t, h, v) == sigma_eval(t, h, v)) ++good;
              }
              return tally(good, 100);
            });
    rep.run("center/" + v.to_string(), "a, b over classes, r = 2..5", "sigma(a, b) = (a,b)^{r(r-1)/2}",
            [&]() -> Result {
              auto reps = square_class_representatives(v);
              size_t good = 0, total = 0;
              for (int r = 2; r <= 5; ++r)
                for (const auto& a : reps)
                  for (const auto& b : reps) {
                    ++total;
                    auto za = StructuredElement::central(a, r), zb = StructuredElement::central(b, r);
                    Sign expect = hilbert(a, b, v).pow(r * (r - 1) / 2);
                    if (sigma_eval(za, zb, v) == expect && sigma_eval(zb, za, v) == expect) ++good;
                  }
              return tally(good, total);
            });
    rep.run("unipotent/" + v.to_string(), "40 random rank 3 pairs", "sigma(n, g) = sigma(g, n) = 1", [&]() -> Result {
      size_t good = 0;
      for (int i = 0; i < 40; ++i) {
        auto n = rng.unipotent(3);
        auto g = rng.torus(3);
        if (sigma_eval(n, g, v) == Sign::plus() && sigma_eval(g, n, v) == Sign::plus()) ++good;
      }
      return tally(good, 40);
    });
    rep.run("block-lemmas/" + v.to_string(), "blocks (2,1,2), square determinants", "commute and multiply",
            [&]() -> Result {
              size_t good = 0;
              for (int i = 0; i < 30; ++i) {
                Rational c = rng.nonzero(5, 3), x = rng.nonzero(5, 3);
                auto g = StructuredElement::sl2(1, c, 0, 1) * StructuredElement::sl2(x, 0, 0, 1 / x);
                auto h = StructuredElement::torus({c * c});
                if (block_lemmas_check({2, 1, 2}, 0, 1, g, h, v) && block_lemmas_check({2, 1, 2}, 0, 2, g, g, v)) ++good;
              }
              return tally(good, 30);
            });
  }
  rep.run("block-commutation/non-square", "det g = det h = 3 at v = 3", "fails ((3,3)_3 = -1)", [&]() -> Result {
    bool holds = block_commutation_holds({1, 1}, 0, 1, StructuredElement::torus({3}), StructuredElement::torus({3}),
                                         LocalPlace::finite(3));
    return {holds ? "commutes" : "does not commute", !holds};
  });
  rep.run("global-product", "150 GL2 pairs and 150 rank 3 torus pairs", "product over places = 1", [&]() -> Result {
    size_t good = 0;
    for (int i = 0; i < 300; ++i) {
      bool two = i % 2 == 0;
      auto g = two ? rng.gl2() : rng.torus(3);
      auto h = two ? rng.gl2() : rng.torus(3);
      if (global_sigma_product(g, h) == Sign::plus()) ++good;
    }
    return tally(good, 300);
  });
  return rep;
}

// ---------------------------------------------------------------- weilrep

Sign sign_of(Complex z) { return z.real() > 0 ? Sign::plus() : Sign::minus(); }
bool is_unit_sign(Complex z) { return std::abs(z - Complex(sign_of(z).value(), 0)) < 1e-6; }

CheckReport weilrep_suite(const SuiteConfig& config) {
  CheckReport rep{"weilrep", {}};
  Sampler rng(config.seed);
  for (auto [p, n] : std::vector<std::pair<long, int>>{{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    FiniteWeilModel model(p, n);
    LocalPlace v = LocalPlace::finite(p);
    auto gens = model_generators(model);
    std::string tag = "p=" + std::to_string(p) + ",N=" + std::to_string(n);
    Rational u(least_nonresidue(p));
    rep.run("multiplier/" + tag, "all generator pairs", "+-1, torus pairs = (a,a')_p, coboundary of Kubota",
            [&]() -> Result {
              size_t good = 0, total = 0;
              std::vector<SignedPair> data;
              for (const auto& g : gens)
                for (const auto& h : gens) {
                  ++total;
                  auto m = projective_multiplier(model, Word{g}, Word{h});
                  if (!is_unit_sign(m.value)) continue;
                  Sign s = sign_of(m.value);
                  if (g.kind == Generator::Kind::T && h.kind == Generator::Kind::T && s != hilbert(g.param, h.param, v))
                    continue;
                  ++good;
                  data.push_back({g.matrix(), h.matrix(), s * kubota_sl2(g.matrix(), h.matrix(), v)});
                }
              auto fit = fit_coboundary(data);
              return {count_of(good, total) + (fit.consistent ? ", coboundary fit" : ", no coboundary fit"),
                      good == total && fit.consistent};
            });
    rep.run("multiplier-cocycle/" + tag, "40 triples of generator words", "2-cocycle identity", [&]() -> Result {
      size_t good = 0, done = 0, rejected = 0;
      auto word = [&] {
        Word w{gens[rng.index(gens.size())]};
        if (rng.integer(0, 1)) w.push_back(gens[rng.index(gens.size())]);
        return word_matrix(w);
      };
      while (done < 40) {
        Matrix a = word(), b = word(), c = word();
        try {
          Complex lhs = projective_multiplier(model, a, b).value * projective_multiplier(model, matmul(a, b), c).value;
          Complex rhs = projective_multiplier(model, a, matmul(b, c)).value * projective_multiplier(model, b, c).value;
          ++done;
          if (std::abs(lhs - rhs) < 1e-6) ++good;
        } catch (const PreconditionError&) {
          ++rejected;
        }
      }
      return {count_of(good, done) + " (" + std::to_string(rejected) + " outside the model)", good == done};
    });
    rep.run("central/" + tag, "a in {p, u, -1, p u}", "chi(a) mu(a)", [&]() -> Result {
      size_t good = 0;
      for (const Rational& a : {Rational(p), u, Rational(-1), Rational(Rational(p) * u)})
        if (central_scalar_check(model, a)) ++good;
      return tally(good, 4);
    });
    rep.run("parity/" + tag, "every generator", "even/odd split preserved", [&]() -> Result {
      size_t good = 0;
      for (const auto& g : gens)
        if (parity_invariance_check(model, g)) ++good;
      return tally(good, gens.size());
    });
    rep.run("whittaker/" + tag, "a over classes with v(a) <= N - 1", "exists iff a is a square", [&]() -> Result {
      size_t good = 0, total = 0;
      for (const auto& a : square_class_representatives(v)) {
        if (valuation(a, p) > n - 1) continue;
        ++total;
        if (whittaker_functional_exists(model, a) == same_square_class(a, 1, v)) ++good;
      }
      return tally(good, total);
    });
    rep.run("twist/" + tag, "a in {u, p, 4}", "conjugation by diag(1, a) intertwines", [&]() -> Result {
      size_t good = 0;
      for (const Rational& a : {u, Rational(p), Rational(4)})
        if (twist_intertwiner_check(p, n, a)) ++good;
      return tally(good, 3);
    });
    rep.run("tensor/" + tag, "a_i, b_i in {1, u}", "generic iff b_i ~ a_i", [&]() -> Result {
      size_t good = 0, total = 0;
      const std::vector<Rational> units{1, u};
      for (const auto& a1 : units)
        for (const auto& a2 : units)
          for (const auto& b1 : units)
            for (const auto& b2 : units) {
              ++total;
              bool expect = same_square_class(a1, b1, v) && same_square_class(a2, b2, v);
              if (tensor_whittaker_check(p, n, a1, a2, b1, b2) == expect) ++good;
            }
      return tally(good, total);
    });
  }
  return rep;
}

// ------------------------------------------------------------------ symsq

CheckReport symsq_suite(const SuiteConfig& config) {
  CheckReport rep{"symsq", {}};
  Sampler rng(config.seed);
  auto exact = [](const std::string& got, const std::string& want) -> Result { return {got, got == want}; };
  rep.run("schur/(2)", "x=2, y=3", "19", [&] { return exact(to_string(schur_jt(Partition({2}), {2, 3})), "19"); });
  rep.run("schur/(2,2)", "x=2, y=3", "36", [&] { return exact(to_string(schur_jt(Partition({2, 2}), {2, 3})), "36"); });
  rep.run("schur/(3,1)", "1,1,1", "15", [&] { return exact(to_string(schur_jt(Partition({3, 1}), {1, 1, 1})), "15"); });
  rep.run("schur/oracle", "|lambda| <= 6, r <= 4", "determinant = tableaux", [&]() -> Result {
    size_t good = 0, total = 0;
    for (long m = 0; m <= 6; ++m)
      for (size_t r = 1; r <= 4; ++r)
        for (const auto& lam : partitions_of(m, r)) {
          auto values = rng.nonzeros(r);
          ++total;
          if (schur_jt(lam, values) == schur_tableau_oracle(lam, values)) ++good;
        }
    return tally(good, total);
  });
  rep.run("modulus/haar", "B, r = 2, 3", "exponent = index oracle", [&]() -> Result {
    size_t good = 0, total = 0;
    for (const std::vector<long>& lam : {std::vector<long>{1, 0}, {2, 1}, {1, 0, 0}, {2, 1, 0}, {3, 1, 1}}) {
      std::vector<std::pair<int, int>> roots;
      int r = static_cast<int>(lam.size());
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) roots.emplace_back(i, j);
      ++total;
      if (modulus_exponent(ParabolicKind::B, lam, lam.size()) == modulus_index_oracle(lam, roots)) ++good;
    }
    return tally(good, total);
  });
  rep.run("gf/(1,1)", "r=2, alpha=(1,1)", "[1, 3, 6, 10]", [&]() -> Result {
    SatakeData sat({1, 1}, 3);
    return exact(sym_series(sat, 3).to_string(), "[1, 3, 6, 10]");
  });
  for (size_t r = 2; r <= 4; ++r) {
    rep.run("prop316/r=" + std::to_string(r), "2 seeded alpha tuples, chi = 2, degree 8",
            "gf identity and unramified zeta identity", [&]() -> Result {
              size_t good = 0;
              for (int i = 0; i < 2; ++i) {
                SatakeData sat(rng.nonzeros(r), 5, Rational(2));
                if (bg_identity_check(sat, 8) && unramified_zeta_check(sat, 8)) ++good;
              }
              return tally(good, 2);
            });
  }
  rep.run("sqrt-branch", "chi = 4 (root +-2) and chi = 2", "series unchanged", [&]() -> Result {
    size_t good = 0;
    for (const Rational& chi : {Rational(4), Rational(2)}) {
      SatakeData sat(rng.nonzeros(3), 7, chi);
      ChiSquareRoot root(chi);
      if (unramified_zeta_series(sat, root, 6) == unramified_zeta_series(sat, root.flipped(), 6)) ++good;
    }
    return tally(good, 2);
  });
  rep.run("rs-factorization", "r = 1..5, 2 tuples each", "rs = ext sym", [&]() -> Result {
    size_t good = 0;
    for (size_t r = 1; r <= 5; ++r)
      for (int i = 0; i < 2; ++i)
        if (rs_factorization_check(SatakeData(rng.nonzeros(r), 5, rng.nonzero()))) ++good;
    return tally(good, 10);
  });
  rep.run("tate/trivial", "chi = 1, shift 0", "pole at 0", [&]() -> Result {
    auto pole = TateFactor(Rational(1), 0, 5).pole();
    return exact(pole ? to_string(*pole) : "none", "0");
  });
  rep.run("tate/q", "chi = q = 5", "pole at 1", [&]() -> Result {
    auto pole = TateFactor(Rational(5), 0, 5).pole();
    return exact(pole ? to_string(*pole) : "none", "1");
  });
  rep.run("tate/ramified", "chi ramified, s = 3", "1", [&]() -> Result {
    return exact(to_string(*TateFactor(std::nullopt, 0, 5).exact_value(3)), "1");
  });
  rep.run("gk/pole", "even, r=2, eta trivial, s=0", "pole",
          [&] { return exact(gk_ratio(GkKind::Even, 2, 1, 0, Rational(1), 3).to_string(), "pole"); });
  rep.run("gk/value", "even, r=2, eta trivial, s=1/4, q=3", "L(1)/L(4) = 40/27",
          [&] { return exact(gk_ratio(GkKind::Even, 2, 1, Rational(1, 4), Rational(1), 3).to_string(), "40/27"); });
  rep.run("gk/ramified", "odd, r=3, chi eta^-2 ramified", "1",
          [&] { return exact(gk_ratio(GkKind::Odd, 3, 1, Rational(1, 3), std::nullopt, 3).to_string(), "1"); });
  rep.run("gk/pole-location", "even, eta trivial, r = 2, 4, 6", "s = 3/4 - 1/(2r) after the 1/2 shift",
          [&]() -> Result {
            size_t good = 0;
            for (size_t r : {2, 4, 6}) {
              auto s = gk_numerator_pole(r, Rational(1), 3);
              if (s && *s + kGkToEisensteinShift == Rational(3, 4) - Rational(1, 2 * static_cast<long>(r))) ++good;
            }
            return tally(good, 3);
          });
  rep.run("poles/trivial", "r = 3, chi^r omega^2 = 1", "{1/4, 3/4}, {0, 1}, 3/4 -> 1", [&]() -> Result {
    auto pr = pole_report(3, true);
    bool ok = pr.normalizer_poles == std::set<Rational>{Rational(1, 4), Rational(3, 4)} &&
              pr.l_poles == std::set<Rational>{0, 1} && PoleReport::s_to_l_arg(Rational(3, 4)) == 1 &&
              PoleReport::s_to_l_arg(Rational(1, 4)) == 0;
    return {ok ? "match" : "mismatch", ok};
  });
  rep.run("poles/nontrivial", "r = 3, chi^r omega^2 != 1", "empty", [&]() -> Result {
    auto pr = pole_report(3, false);
    bool ok = pr.normalizer_poles.empty() && pr.l_poles.empty();
    return {ok ? "empty" : "nonempty", ok};
  });
  rep.run("euler/zeta2", "r = 1, alpha = 1, p < 100, s = 2", "zeta(2) within the tail bound", [&]() -> Result {
    std::vector<EulerEntry> table;
    for (long p = 2; p < 100; ++p)
      if (is_prime(p)) table.push_back({p, {1.0}, Complex(1.0)});
    double got = euler_product(table, 2.0).real();
    double zeta2 = M_PI * M_PI / 6;
    double bound = got * (std::exp(0.5 * (1.0 / 99 + 1.0 / 100)) - 1);
    std::ostringstream s;
    s << got << " (zeta(2) - product = " << zeta2 - got << ", bound " << bound << ")";
    return {s.str(), zeta2 - got >= 0 && zeta2 - got <= bound};
  });
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"symbols", "cocycles", "weil", "weilrep", "symsq", "all"};
  return names;
}

CheckReport run_suite(const std::string& name, const SuiteConfig& config) {
  using Fn = CheckReport (*)(const SuiteConfig&);
  static const std::map<std::string, Fn> suites{{"symbols", symbols_suite},
                                                {"cocycles", cocycles_suite},
                                                {"weil", weil_suite},
                                                {"weilrep", weilrep_suite},
                                                {"symsq", symsq_suite}};
  if (name == "all") {
    CheckReport all{"all", {}};
    for (const auto& n : suite_names())
      if (n != "all") all.append(suites.at(n)(config));
    return all;
  }
  auto it = suites.find(name);
  if (it == suites.end()) throw UsageError("unknown suite '" + name + "'");
  return it->second(config);
}

}  // namespace metasym::cli
