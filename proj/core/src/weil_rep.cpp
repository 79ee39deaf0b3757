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

#include "metasym/weil_rep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "metasym/errors.hpp"

namespace metasym {

namespace {

constexpr double kOperatorTolerance = 1e-9;
constexpr double kScalarTolerance = 1e-6;

Integer ipow(long p, long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return out;
}

long ceil_half(long x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

double abs_power(long p, long valuation, double exponent) {
  return std::pow(static_cast<double>(p), -exponent * static_cast<double>(valuation));
}

}  // namespace

Matrix Generator::matrix() const {
  const Rational zero(0), one(1);
  switch (kind) {
    case Kind::W: return {{zero, one}, {Rational(-1), zero}};
    case Kind::N: return {{one, param}, {zero, one}};
    case Kind::T: return {{param, zero}, {zero, Rational(1 / param)}};
    case Kind::D: return {{one, zero}, {zero, Rational(param * param)}};
    case Kind::Central: return {{param, zero}, {zero, param}};
    case Kind::Sign: return identity_matrix(2);
  }
  return identity_matrix(2);
}

std::string Generator::to_string() const {
  switch (kind) {
    case Kind::W: return "w";
    case Kind::N: return "n(" + metasym::to_string(param) + ")";
    case Kind::T: return "t(" + metasym::to_string(param) + ")";
    case Kind::D: return "d(" + metasym::to_string(param) + ")";
    case Kind::Central: return "z(" + metasym::to_string(param) + ")";
    case Kind::Sign: return "sign(" + xi.to_string() + ")";
  }
  return "?";
}

Matrix word_matrix(const Word& word) {
  Matrix m = identity_matrix(2);
  for (const auto& g : word) m = matmul(m, g.matrix());
  return m;
}

std::string word_to_string(const Word& word) {
  if (word.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) s += (i ? " " : "") + word[i].to_string();
  return s;
}

Word canonical_word(const Matrix& g, long p) {
  if (g.size() != 2) throw DomainError("canonical words are defined for 2x2 matrices");
  const Rational &a = g[0][0], &b = g[0][1], &c = g[1][0], &d = g[1][1];
  Rational det = a * d - b * c;
  if (det == 0) throw DomainError("singular matrix");
  if (det != 1) {
    if (!is_rational_square(det)) throw PreconditionError("determinant is not a rational square");
    Rational e = rational_sqrt(det);
    Rational inv = 1 / det;
    Word w{Generator::d(e)};
    Word rest = canonical_word({{a, b}, {Rational(c * inv), Rational(d * inv)}}, p);
    w.insert(w.end(), rest.begin(), rest.end());
    return w;
  }
  Word w;
  auto push_n = [&](const Rational& x) {
    if (x != 0) w.push_back(Generator::n(x));
  };
  auto push_t = [&](const Rational& x) {
    if (x != 1) w.push_back(Generator::t(x));
  };
  if (c == 0) {
    push_n(a * b);
    push_t(a);
  } else if (d == 0 || valuation(c, p) <= valuation(d, p)) {
    push_n(a / c);
    push_t(Rational(-1 / c));
    w.push_back(Generator::w());
    push_n(d / c);
  } else {
    push_n(b / d);
    push_t(Rational(1 / d));
    w.push_back(Generator::w());
    push_n(Rational(-c / d));
    push_t(-1);
    w.push_back(Generator::w());
  }
  return w;
}

FiniteWeilModel::FiniteWeilModel(long p, int n, Rational scale, UnramifiedCharacter chi)
    : p_(p), n_(n), psi_(LocalPlace::finite(p), scale), chi_(std::move(chi)) {
  if (p == 2) throw UnsupportedDomainError("finite Weil models need an odd prime");
  if (n < 1) throw DomainError("model level N must be positive");
  pn_ = ipow(p, n);
  p2n_ = pn_ * pn_;
  if (p2n_ > 6561) throw ResourceError("finite Weil model larger than 6561 points");
  size_ = static_cast<size_t>(p2n_.get_ui());
  auto [alpha, unit] = valuation_and_unit(psi_.scale(), p);
  if (alpha > n || alpha < -n) throw ResourceError("additive character scale valuation exceeds the model level");
  kernel_exponent_ = 2L * n - alpha;
  if (kernel_exponent_ <= 0) {
    kernel_modulus_ = 1;
    kernel_unit_ = 0;
  } else {
    Integer m = ipow(p, kernel_exponent_);
    kernel_modulus_ = m.get_si();
    kernel_unit_ = residue_mod(unit * 2, m).get_si();
  }
  roots_.resize(static_cast<size_t>(kernel_modulus_));
  for (std::int64_t j = 0; j < kernel_modulus_; ++j)
    roots_[static_cast<size_t>(j)] =
        std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(kernel_modulus_));
}

Rational FiniteWeilModel::point(size_t k) const { return make_rational(Integer(static_cast<unsigned long>(k)), pn_); }

std::optional<size_t> FiniteWeilModel::index_of(const Rational& x) const {
  if (x == 0) return 0;
  if (valuation(x, p_) < -n_) return std::nullopt;
  return static_cast<size_t>(residue_mod(x * pn_, p2n_).get_ui());
}

ModelFunction FiniteWeilModel::delta(size_t k) const {
  ModelFunction f = zero();
  f.at(k) = 1;
  return f;
}

Complex FiniteWeilModel::kernel(size_t x, size_t y) const {
  if (kernel_modulus_ == 1) return 1;
  const __int128 m = kernel_modulus_;
  __int128 prod = (static_cast<__int128>(kernel_unit_) * static_cast<__int128>(x)) % m;
  prod = (prod * static_cast<__int128>(y)) % m;
  return roots_[static_cast<size_t>(prod)];
}

Window FiniteWeilModel::window_of(const ModelFunction& f) const {
  if (f.size() != size_) throw DomainError("function does not live on this model");
  double peak = 0;
  for (const auto& z : f) peak = std::max(peak, std::abs(z));
  if (peak == 0) return {-n_, -n_};
  const double tol = kOperatorTolerance * std::max(1.0, peak);
  int support = -n_;
  for (size_t k = 1; k < size_; ++k) {
    if (std::abs(f[k]) <= tol) continue;
    int v = 0;
    size_t kk = k;
    while (kk % static_cast<size_t>(p_) == 0) {
      kk /= static_cast<size_t>(p_);
      ++v;
    }
    support = std::max(support, n_ - v);
  }
  int invariance = n_;
  size_t shift = 1;  // p^{N+c} for c = -N
  for (int c = -n_; c < n_; ++c, shift *= static_cast<size_t>(p_)) {
    bool invariant = true;
    for (size_t k = 0; k < size_ && invariant; ++k)
      invariant = std::abs(f[k] - f[(k + shift) % size_]) <= tol;
    if (invariant) {
      invariance = c;
      break;
    }
  }
  return {support, invariance};
}

std::optional<Window> FiniteWeilModel::window_after(const Generator& g, const Window& w) const {
  Window out = w;
  const long alpha = valuation(psi_.scale(), p_);
  switch (g.kind) {
    case Generator::Kind::W:
      out = {static_cast<int>(w.invariance + alpha), static_cast<int>(w.support - alpha)};
      break;
    case Generator::Kind::N:
      if (g.param != 0) {
        long beta = valuation(g.param, p_) + alpha;
        out.invariance = static_cast<int>(std::max({static_cast<long>(w.invariance), w.support - beta, ceil_half(-beta)}));
      }
      break;
    case Generator::Kind::T: {
      if (g.param == 0) throw DomainError("t(0) is not invertible");
      long v = valuation(g.param, p_);
      out = {static_cast<int>(w.support + v), static_cast<int>(w.invariance - v)};
      break;
    }
    case Generator::Kind::D: {
      if (g.param == 0) throw DomainError("d(0) is not invertible");
      long v = valuation(g.param, p_);
      out = {static_cast<int>(w.support - v), static_cast<int>(w.invariance + v)};
      break;
    }
    case Generator::Kind::Central:
      if (g.param == 0) throw DomainError("central(0) is not invertible");
      break;
    case Generator::Kind::Sign: break;
  }
  if (!representable(out)) return std::nullopt;
  return out;
}

std::optional<Window> FiniteWeilModel::window_after(const Word& word, const Window& w) const {
  std::optional<Window> cur = w;
  for (auto it = word.rbegin(); it != word.rend() && cur; ++it) cur = window_after(*it, *cur);
  return cur;
}

std::vector<ModelFunction> FiniteWeilModel::coset_basis(const Window& w) const {
  if (!representable(w) || w.support < -n_ || w.support + w.invariance < 0)
    throw PreconditionError("window is not representable in this model");
  const Integer step_i = ipow(p_, n_ - w.support);
  const Integer mod_i = ipow(p_, n_ + w.invariance);
  const size_t step = step_i.get_ui(), mod = mod_i.get_ui();
  std::vector<ModelFunction> basis;
  for (size_t k0 = 0; k0 < mod; k0 += step) {
    ModelFunction f = zero();
    for (size_t k = k0; k < size_; k += mod) f[k] = 1;
    basis.push_back(std::move(f));
  }
  return basis;
}

ModelFunction FiniteWeilModel::fourier(const ModelFunction& f) const {
  Window w = window_of(f);
  auto out_window = window_after(Generator::w(), w);
  if (!out_window) throw PreconditionError("Fourier transform leaves the model window");
  const long alpha = valuation(psi_.scale(), p_);
  const double scale = std::pow(static_cast<double>(p_), -0.5 * static_cast<double>(alpha) - n_);
  // Only points inside the image support are computed; elsewhere the
  // transform vanishes.
  const size_t step = ipow(p_, n_ - out_window->support).get_ui();
  std::vector<size_t> nonzero;
  for (size_t y = 0; y < size_; ++y)
    if (f[y] != Complex(0)) nonzero.push_back(y);
  ModelFunction out = zero();
  for (size_t x = 0; x < size_; x += step) {
    Complex s = 0;
    for (size_t y : nonzero) s += f[y] * kernel(x, y);
    out[x] = scale * s;
  }
  return out;
}

ModelFunction FiniteWeilModel::apply(const Generator& g, const ModelFunction& f) const {
  if (f.size() != size_) throw DomainError("function does not live on this model");
  if (!window_after(g, window_of(f)))
    throw PreconditionError("generator " + g.to_string() + " moves the function outside the model window");
  const LocalPlace v = LocalPlace::finite(p_);
  switch (g.kind) {
    case Generator::Kind::W: {
      ModelFunction out = fourier(f);
      Complex gam = gamma(psi_).value();
      for (auto& z : out) z *= gam;
      return out;
    }
    case Generator::Kind::N: {
      if (g.param == 0) return f;
      ModelFunction out = f;
      for (size_t k = 0; k < size_; ++k) {
        if (out[k] == Complex(0)) continue;
        Rational x = point(k);
        out[k] *= psi_(g.param * x * x);
      }
      return out;
    }
    case Generator::Kind::T:
    case Generator::Kind::D: {
      const bool torus = g.kind == Generator::Kind::T;
      const Rational factor = torus ? g.param : Rational(1 / g.param);
      const long va = valuation(g.param, p_);
      Complex scalar = torus ? abs_power(p_, va, 0.5) * mu(g.param, psi_).value()
                             : chi_(g.param, v).value() * abs_power(p_, va, -0.5);
      ModelFunction out = zero();
      for (size_t k = 0; k < size_; ++k) {
        auto idx = index_of(factor * point(k));
        if (idx) out[k] = scalar * f[*idx];
      }
      return out;
    }
    case Generator::Kind::Central: {
      Complex scalar = chi_(g.param, v).value() * mu(g.param, psi_).value();
      ModelFunction out = f;
      for (auto& z : out) z *= scalar;
      return out;
    }
    case Generator::Kind::Sign: {
      ModelFunction out = f;
      for (auto& z : out) z *= static_cast<double>(g.xi.value());
      return out;
    }
  }
  return f;
}

ModelFunction FiniteWeilModel::apply(const Word& word, const ModelFunction& f) const {
  ModelFunction cur = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply(*it, cur);
  return cur;
}

std::vector<Generator> model_generators(const FiniteWeilModel& model) {
  Rational p(model.p());
  Rational u(least_nonresidue(model.p()));
  std::vector<Generator> out{Generator::w(),    Generator::n(1),    Generator::n(u),     Generator::t(-1),
                             Generator::t(u),   Generator::t(p),    Generator::t(p * u)};
  if (model.level() >= 2) {
    out.push_back(Generator::n(p));
    out.push_back(Generator::n(1 / p));
    out.push_back(Generator::t(1 / p));
  }
  return out;
}

double max_abs_diff(const ModelFunction& a, const ModelFunction& b) {
  if (a.size() != b.size()) throw DomainError("size mismatch");
  double d = 0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

namespace {

bool contains_d(const Word& w) {
  return std::any_of(w.begin(), w.end(), [](const Generator& g) { return g.kind == Generator::Kind::D; });
}

// Largest window (by dimension, then support) valid for every word.
std::optional<Window> best_window(const FiniteWeilModel& model, const std::vector<const Word*>& words,
                                  const std::optional<Rational>& must_contain = std::nullopt) {
  const int n = model.level();
  std::optional<Window> best;
  for (int s = n; s >= -n; --s) {
    for (int c = n; c >= -n; --c) {
      if (s + c < 0) continue;
      if (must_contain && *must_contain != 0 && -valuation(*must_contain, model.p()) > s) continue;
      Window w{s, c};
      bool ok = std::all_of(words.begin(), words.end(),
                            [&](const Word* word) { return model.window_after(*word, w).has_value(); });
      if (!ok) continue;
      if (!best || s + c > best->support + best->invariance) best = w;
    }
  }
  return best;
}

size_t first_nonzero(const ModelFunction& f) {
  return static_cast<size_t>(std::find_if(f.begin(), f.end(), [](Complex z) { return z != Complex(0); }) - f.begin());
}

ModelFunction reflect(const FiniteWeilModel& model, const ModelFunction& f) {
  ModelFunction out(f.size());
  for (size_t k = 0; k < f.size(); ++k) out[k] = f[model.negate(k)];
  return out;
}

std::vector<ModelFunction> parity_basis(const FiniteWeilModel& model, const Window& w, Parity parity) {
  auto basis = model.coset_basis(w);
  if (parity == Parity::All) return basis;
  std::vector<ModelFunction> out;
  std::set<size_t> seen;
  for (const auto& f : basis) {
    ModelFunction r = reflect(model, f);
    size_t key = std::min(first_nonzero(f), first_nonzero(r));
    if (!seen.insert(key).second) continue;
    ModelFunction g(f.size());
    double peak = 0;
    for (size_t k = 0; k < f.size(); ++k) {
      g[k] = parity == Parity::Even ? f[k] + r[k] : f[k] - r[k];
      peak = std::max(peak, std::abs(g[k]));
    }
    if (peak > 0) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

MultiplierResult projective_multiplier(const FiniteWeilModel& model, const Word& g, const Word& h, Parity parity) {
  Word combined = g;
  combined.insert(combined.end(), h.begin(), h.end());
  Word product = canonical_word(word_matrix(combined), model.p());
  if (parity == Parity::All && (contains_d(combined) || contains_d(product))) parity = Parity::Even;
  auto window = best_window(model, {&combined, &product});
  if (!window) throw PreconditionError("no test window of the model is valid for " + word_to_string(combined));
  auto basis = parity_basis(model, *window, parity);
  std::vector<std::pair<ModelFunction, ModelFunction>> images;
  Complex num = 0;
  double den = 0;
  for (const auto& f : basis) {
    ModelFunction a = model.apply(combined, f);
    ModelFunction b = model.apply(product, f);
    for (size_t k = 0; k < a.size(); ++k) {
      num += std::conj(b[k]) * a[k];
      den += std::norm(b[k]);
    }
    images.emplace_back(std::move(a), std::move(b));
  }
  if (den < 1e-18) throw ModelInconsistencyError("operator of the product vanishes on the test space");
  MultiplierResult result;
  result.value = num / den;
  result.window = *window;
  result.dimension = basis.size();
  for (const auto& [a, b] : images)
    for (size_t k = 0; k < a.size(); ++k) result.residual = std::max(result.residual, std::abs(a[k] - result.value * b[k]));
  if (result.residual > kScalarTolerance)
    throw ModelInconsistencyError("op(g)op(h) is not a scalar multiple of op(gh) (residual " +
                                  std::to_string(result.residual) + ")");
  return result;
}

MultiplierResult projective_multiplier(const FiniteWeilModel& model, const Matrix& g, const Matrix& h, Parity parity) {
  return projective_multiplier(model, canonical_word(g, model.p()), canonical_word(h, model.p()), parity);
}

bool parity_invariance_check(const FiniteWeilModel& model, const Generator& g) {
  Word word{g};
  auto window = best_window(model, {&word});
  if (!window) throw PreconditionError("generator " + g.to_string() + " admits no test window");
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    double sign = parity == Parity::Even ? 1.0 : -1.0;
    for (const auto& f : parity_basis(model, *window, parity)) {
      ModelFunction out = model.apply(g, f);
      ModelFunction r = reflect(model, out);
      for (size_t k = 0; k < out.size(); ++k)
        if (std::abs(r[k] - sign * out[k]) > kOperatorTolerance) return false;
    }
  }
  return true;
}

bool fourier_inversion_check(const FiniteWeilModel& model, const ModelFunction& f) {
  ModelFunction ff = model.fourier(model.fourier(f));
  return max_abs_diff(ff, reflect(model, f)) < kOperatorTolerance;
}

bool central_scalar_check(const FiniteWeilModel& model, const Rational& a) {
  Word direct{Generator::central(a)};
  Word composed{Generator::t(a), Generator::d(a)};
  auto window = best_window(model, {&direct, &composed});
  if (!window) throw PreconditionError("no test window for the central element");
  Complex expected = model.chi()(a, LocalPlace::finite(model.p())).value() * mu(a, model.psi()).value();
  for (const auto& f : parity_basis(model, *window, Parity::Even)) {
    ModelFunction z = model.apply(direct, f);
    ModelFunction scaled = f;
    for (auto& x : scaled) x *= expected;
    if (max_abs_diff(z, scaled) > kOperatorTolerance) return false;
    if (max_abs_diff(model.apply(composed, f), z) > kOperatorTolerance) return false;
  }
  return true;
}

bool whittaker_eigen_check(const FiniteWeilModel& model, const Rational& b, const Rational& c) {
  auto idx = model.index_of(b);
  if (!idx) throw PreconditionError("evaluation point outside the model");
  Word word{Generator::n(c)};
  auto window = best_window(model, {&word}, b);
  if (!window) throw PreconditionError("no test window contains the evaluation point");
  Complex eigen = model.psi()(c * b * b);
  for (const auto& f : model.coset_basis(*window)) {
    Complex lhs = model.apply(word, f)[*idx];
    if (std::abs(lhs - eigen * f[*idx]) > kOperatorTolerance) return false;
  }
  return true;
}

namespace {

std::vector<Rational> whittaker_test_set(long p, long k) {
  std::vector<Rational> cs;
  Rational base = pow(Rational(p), -k);
  for (long t = 1; t < p; ++t) cs.push_back(base * t);
  return cs;
}

long whittaker_depth(const FiniteWeilModel& model, const Rational& a) {
  if (a == 0) throw DomainError("Whittaker target must be nonzero");
  long v = valuation(a, model.p());
  if (v < 0 || v > model.level() - 1) throw PreconditionError("Whittaker target valuation outside 0..N-1");
  return v + 1;
}

}  // namespace

bool whittaker_functional_exists(const FiniteWeilModel& model, const Rational& a) {
  auto cs = whittaker_test_set(model.p(), whittaker_depth(model, a));
  std::vector<Word> words;
  for (const auto& c : cs) words.push_back({Generator::n(c)});
  std::vector<const Word*> ptrs;
  for (const auto& w : words) ptrs.push_back(&w);
  auto window = best_window(model, ptrs);
  if (!window) throw PreconditionError("no test window for the Whittaker test set");
  for (const auto& f : model.coset_basis(*window)) {
    // one evaluation point per basis coset
    size_t b = first_nonzero(f);
    bool matches = true;
    for (size_t i = 0; i < cs.size() && matches; ++i) {
      Complex lhs = model.apply(words[i], f)[b];
      matches = std::abs(lhs - model.psi()(cs[i] * a) * f[b]) <= kOperatorTolerance;
    }
    if (matches) return true;
  }
  return false;
}

namespace {

bool operators_agree(const FiniteWeilModel& m1, const Word& w1, const FiniteWeilModel& m2, const Word& w2,
                     Complex factor) {
  const int n = m1.level();
  std::optional<Window> best;
  for (int s = n; s >= -n; --s)
    for (int c = n; c >= -n; --c) {
      if (s + c < 0) continue;
      Window w{s, c};
      if (!m1.window_after(w1, w) || !m2.window_after(w2, w)) continue;
      if (!best || s + c > best->support + best->invariance) best = w;
    }
  if (!best) throw PreconditionError("no common window for the twisted operators");
  for (const auto& f : m1.coset_basis(*best)) {
    ModelFunction a = m1.apply(w1, f);
    ModelFunction b = m2.apply(w2, f);
    for (auto& z : b) z *= factor;
    if (max_abs_diff(a, b) > kOperatorTolerance) return false;
  }
  return true;
}

}  // namespace

bool twist_intertwiner_check(long p, int n, const Rational& a) {
  FiniteWeilModel base(p, n, 1);
  FiniteWeilModel twisted(p, n, a);
  const LocalPlace v = LocalPlace::finite(p);
  const Rational pr(p);
  for (const Rational& b : {Rational(1), Rational(-3), pr, Rational(1 / pr)})
    if (!operators_agree(base, {Generator::n(a * b)}, twisted, {Generator::n(b)}, 1.0)) return false;
  for (const Rational& y : {Rational(least_nonresidue(p)), Rational(-1), pr, Rational(1 / pr)}) {
    double sign = hilbert(a, y, v).value();
    if (!operators_agree(base, {Generator::t(y)}, twisted, {Generator::t(y)}, sign)) return false;
  }
  if (!operators_agree(base, {Generator::t(a), Generator::w()}, twisted, {Generator::w()}, 1.0)) return false;

  if (!is_rational_square(a)) return true;
  // For a = c^2 the map J f(x) = f(cx) intertwines the two models.
  const Rational c = rational_sqrt(a);
  auto intertwine = [&](const ModelFunction& f) {
    ModelFunction out = twisted.zero();
    for (size_t k = 0; k < out.size(); ++k)
      if (auto idx = base.index_of(c * base.point(k))) out[k] = f[*idx];
    return out;
  };
  const Generator gens[] = {Generator::w(), Generator::n(1), Generator::n(pr), Generator::t(Rational(least_nonresidue(p))),
                            Generator::t(-1)};
  Word j_word{Generator::t(c)};
  for (const auto& g : gens) {
    Word word{g};
    auto window = best_window(base, {&word});
    if (!window) continue;
    for (const auto& f : base.coset_basis(*window)) {
      if (!base.window_after(j_word, *window) || !base.window_after(j_word, base.window_of(base.apply(g, f)))) continue;
      ModelFunction lhs = intertwine(base.apply(g, f));
      ModelFunction rhs = twisted.apply(g, intertwine(f));
      if (max_abs_diff(lhs, rhs) > kOperatorTolerance) return false;
    }
  }
  return true;
}

bool tensor_whittaker_check(long p, int n, const Rational& a1, const Rational& a2, const Rational& b1,
                            const Rational& b2) {
  FiniteWeilModel m1(p, n, a1);
  FiniteWeilModel m2(p, n, a2);
  const size_t size = m1.size();
  auto cs = whittaker_test_set(p, 1);
  std::vector<Word> words;
  for (const auto& c : cs) words.push_back({Generator::n(c)});
  std::vector<const Word*> ptrs;
  for (const auto& w : words) ptrs.push_back(&w);
  auto w1 = best_window(m1, ptrs);
  auto w2 = best_window(m2, ptrs);
  if (!w1 || !w2) throw PreconditionError("no test window for the tensor check");
  const AdditiveCharacter psi = AdditiveCharacter::standard(LocalPlace::finite(p));
  for (const auto& f1 : m1.coset_basis(*w1)) {
    for (const auto& f2 : m2.coset_basis(*w2)) {
      const size_t x1 = first_nonzero(f1), x2 = first_nonzero(f2);
      const size_t point = x1 * size + x2;
      bool matches = true;
      for (size_t i = 0; i < cs.size() && matches; ++i) {
        ModelFunction g1 = m1.apply(words[i], f1);
        for (size_t j = 0; j < cs.size() && matches; ++j) {
          ModelFunction g2 = m2.apply(words[j], f2);
          // value of (g1 tensor g2) at the product point, read off the tensor carrier
          std::vector<Complex> tensor(size * size);
          for (size_t u = 0; u < size; ++u)
            for (size_t w = 0; w < size; ++w) tensor[u * size + w] = g1[u] * g2[w];
          Matrix nmat = identity_matrix(4);
          nmat[0][1] = cs[i];
          nmat[2][3] = cs[j];
          Complex eigen = nilpotent_char_eval(NilpotentKind::PsiTuple, StructuredElement::unipotent(nmat), psi, {b1, b2});
          matches = std::abs(tensor[point] - eigen * f1[x1] * f2[x2]) <= kOperatorTolerance;
        }
      }
      if (matches) return true;
    }
  }
  return false;
}

CoboundaryFit fit_coboundary(const std::vector<SignedPair>& data) {
  std::map<Matrix, size_t> ids;
  auto id = [&](const Matrix& m) {
    auto [it, inserted] = ids.emplace(m, ids.size());
    return it->second;
  };
  struct Equation {
    std::vector<size_t> vars;
    bool rhs;
  };
  std::vector<Equation> eqs;
  for (const auto& d : data) {
    Matrix gh = matmul(d.g, d.h);
    eqs.push_back({{id(d.g), id(d.h), id(gh)}, d.value.is_negative()});
  }
  const size_t n = ids.size();
  const size_t words = (n + 64) / 64;  // one extra bit column for the right-hand side
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& e : eqs) {
    std::vector<std::uint64_t> row(words, 0);
    for (size_t v : e.vars) row[v / 64] ^= std::uint64_t{1} << (v % 64);
    if (e.rhs) row[n / 64] ^= std::uint64_t{1} << (n % 64);
    rows.push_back(std::move(row));
  }
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < rows.size(); ++col) {
    auto bit = [&](const std::vector<std::uint64_t>& r) { return (r[col / 64] >> (col % 64)) & 1U; };
    size_t pivot = rank;
    while (pivot < rows.size() && !bit(rows[pivot])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != rank && bit(rows[r]))
        for (size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
    ++rank;
  }
  bool consistent = true;
  for (size_t r = rank; r < rows.size(); ++r)
    if ((rows[r][n / 64] >> (n % 64)) & 1U) consistent = false;
  return {consistent, eqs.size(), n};
}

}  // namespace metasym
