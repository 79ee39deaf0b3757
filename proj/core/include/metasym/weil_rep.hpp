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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metasym/characters.hpp"
#include "metasym/structured_element.hpp"
#include "metasym/weil_index.hpp"

namespace metasym {

using ModelFunction = std::vector<Complex>;

/// A function on Q_p supported on p^{-support} Z_p and invariant under
/// p^{invariance} Z_p. Inside a model of level N a window is representable
/// iff support <= N and invariance <= N.
struct Window {
  int support = 0;
  int invariance = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

/// One generator of the metaplectic GL2^(2) action.
struct Generator {
  enum class Kind { W, N, T, D, Central, Sign };
  Kind kind = Kind::W;
  Rational param = 0;  // b for N, a for T / D / Central
  metasym::Sign xi;    // for Sign

  static Generator w() { return {Kind::W, 0, {}}; }
  static Generator n(const Rational& b) { return {Kind::N, b, {}}; }
  static Generator t(const Rational& a) { return {Kind::T, a, {}}; }
  /// diag(1, a^2), acting by chi(a)|a|^{-1/2} f(x/a).
  static Generator d(const Rational& a) { return {Kind::D, a, {}}; }
  static Generator central(const Rational& a) { return {Kind::Central, a, {}}; }
  static Generator sign(metasym::Sign s) { return {Kind::Sign, 1, s}; }

  /// The underlying GL2 matrix (identity for Sign).
  Matrix matrix() const;
  std::string to_string() const;
};

/// Product g_1 g_2 ... g_k; operators apply right to left.
using Word = std::vector<Generator>;

Matrix word_matrix(const Word& word);
std::string word_to_string(const Word& word);

/// Fixed section of SL2 and of the square-determinant part of GL2:
///   c = 0:            n(ab) t(a)
///   v(c) <= v(d):     n(a/c) t(-1/c) w n(d/c)
///   otherwise:        n(b/d) t(1/d) w n(-c/d) t(-1) w
/// and diag(1, e^2) g' for det = e^2 (e > 0 rational). PreconditionError
/// when the determinant is not a rational square.
Word canonical_word(const Matrix& g, long p);

/// Residues of p^{-N} Z_p modulo p^N Z_p with the action of the Weil
/// representation attached to psi_scale and an unramified character chi.
class FiniteWeilModel {
 public:
  /// UnsupportedDomainError for p = 2; ResourceError when p^{2N} > 6561
  /// or |v_p(scale)| > N.
  FiniteWeilModel(long p, int n, Rational scale = 1, UnramifiedCharacter chi = UnramifiedCharacter::trivial());

  long p() const { return p_; }
  int level() const { return n_; }
  size_t size() const { return size_; }
  const AdditiveCharacter& psi() const { return psi_; }
  const UnramifiedCharacter& chi() const { return chi_; }

  /// k / p^N.
  Rational point(size_t k) const;
  /// Index of x modulo p^N Z_p; nullopt if x is not in p^{-N} Z_p.
  std::optional<size_t> index_of(const Rational& x) const;
  /// Index of -x.
  size_t negate(size_t k) const { return (size_ - k) % size_; }

  ModelFunction zero() const { return ModelFunction(size_, Complex(0)); }
  ModelFunction delta(size_t k) const;

  bool representable(const Window& w) const { return w.support <= n_ && w.invariance <= n_; }
  /// Smallest window containing f (zero gives {-N, -N}).
  Window window_of(const ModelFunction& f) const;
  /// Window of the image; nullopt if not representable.
  std::optional<Window> window_after(const Generator& g, const Window& w) const;
  std::optional<Window> window_after(const Word& word, const Window& w) const;

  /// Indicators of the cosets of p^{invariance} Z_p inside p^{-support} Z_p.
  std::vector<ModelFunction> coset_basis(const Window& w) const;

  /// f^(x) = |scale|^{1/2} p^{-N} sum_y f(y) psi(2xy). PreconditionError if
  /// the result leaves the model.
  ModelFunction fourier(const ModelFunction& f) const;

  /// PreconditionError if the image leaves the model.
  ModelFunction apply(const Generator& g, const ModelFunction& f) const;
  ModelFunction apply(const Word& word, const ModelFunction& f) const;

 private:
  Complex kernel(size_t x, size_t y) const;

  long p_;
  int n_;
  size_t size_;
  Integer pn_;      // p^N
  Integer p2n_;     // p^{2N}
  AdditiveCharacter psi_;
  UnramifiedCharacter chi_;
  long kernel_exponent_;  // kernel phase lives in Z / p^e
  std::int64_t kernel_modulus_;
  std::int64_t kernel_unit_;
  std::vector<Complex> roots_;
};

/// w, n(1), n(u), t(-1), t(u), t(p), t(pu) for a nonresidue u; from level 2
/// on also n(p), n(1/p), t(1/p). Pairs of these always have a test window.
std::vector<Generator> model_generators(const FiniteWeilModel& model);

double max_abs_diff(const ModelFunction& a, const ModelFunction& b);

enum class Parity { All, Even, Odd };

struct MultiplierResult {
  Complex value;
  double residual = 0;  // max |op(g)op(h)f - value op(gh)f| over the basis
  Window window;        // test window used
  size_t dimension = 0;
};

/// The scalar c with op(g) op(h) = c op(gh) on the largest window valid for
/// both sides, where gh is the canonical word of the product matrix.
/// ModelInconsistencyError if the ratio is not scalar within 1e-6;
/// PreconditionError if no window fits.
MultiplierResult projective_multiplier(const FiniteWeilModel& model, const Word& g, const Word& h,
                                       Parity parity = Parity::All);

/// Same with the canonical words of two matrices.
MultiplierResult projective_multiplier(const FiniteWeilModel& model, const Matrix& g, const Matrix& h,
                                       Parity parity = Parity::All);

/// The generator maps even functions to even and odd to odd (within 1e-9)
/// on the largest window it accepts.
bool parity_invariance_check(const FiniteWeilModel& model, const Generator& g);

/// fourier(fourier(f))(x) == f(-x) within 1e-9 for the given f.
bool fourier_inversion_check(const FiniteWeilModel& model, const ModelFunction& f);

/// op(central(a)) equals chi(a) mu(a) and agrees with op(t(a)) op(d(a))
/// within 1e-9 on the even subspace.
bool central_scalar_check(const FiniteWeilModel& model, const Rational& a);

/// delta_b(op(n(c)) f) == psi(c b^2) delta_b(f) for every basis f of the
/// largest window containing b on which n(c) acts.
bool whittaker_eigen_check(const FiniteWeilModel& model, const Rational& b, const Rational& c);

/// Some evaluation functional delta_b, b in the model, transforms by psi_a
/// under n(c) for all c in p^{-k} Z_p with k = v_p(a) + 1 (a p-adic
/// integer with v_p(a) <= N - 1 is required).
bool whittaker_functional_exists(const FiniteWeilModel& model, const Rational& a);

/// Conjugation by diag(1, a): op_psi(n(ab)) = op_{psi_a}(n(b)),
/// op_psi(t(y)) = (a, y)_p op_{psi_a}(t(y)), op_psi(t(a) w) = op_{psi_a}(w);
/// for a = c^2 also the intertwiner f(x) -> f(cx). Operators compared
/// within 1e-9.
bool twist_intertwiner_check(long p, int n, const Rational& a);

/// Two block models with psi_{a_1}, psi_{a_2}: some product evaluation
/// functional on the tensor carrier transforms under n(c_1) x n(c_2) by
/// psi(b_1 c_1 + b_2 c_2).
bool tensor_whittaker_check(long p, int n, const Rational& a1, const Rational& a2, const Rational& b1,
                            const Rational& b2);

/// Fit of d(g, h) = beta(g) beta(h) / beta(gh) over GF(2).
struct CoboundaryFit {
  bool consistent = false;
  size_t equations = 0;
  size_t unknowns = 0;
};

struct SignedPair {
  Matrix g;
  Matrix h;
  metasym::Sign value;
};

CoboundaryFit fit_coboundary(const std::vector<SignedPair>& data);

}  // namespace metasym
