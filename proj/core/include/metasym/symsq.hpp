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

#include <complex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "metasym/partition.hpp"
#include "metasym/rational.hpp"
#include "metasym/series.hpp"

namespace metasym {

/// Unramified local data at one place: Satake parameters, residue size q and
/// chi(varpi). chi == nullopt marks a ramified character.
struct SatakeData {
  SatakeData(std::vector<Rational> alphas, long q, std::optional<Rational> chi = Rational(1));

  size_t r() const { return alphas.size(); }
  std::vector<Rational> alphas;
  long q;
  std::optional<Rational> chi;
  /// Product of the alphas.
  Rational omega;
};

/// coeff * q^{q_exp} * q^{s_coeff * s}. Half-integral q powers stay symbolic.
struct QMonomial {
  Rational coeff{0};
  Rational q_exp{0};
  Rational s_coeff{0};

  bool is_zero() const { return coeff == 0; }
  QMonomial operator*(const QMonomial& o) const;
  bool operator==(const QMonomial& o) const = default;
  double value(long q, double s) const;
  std::string to_string() const;
};

/// A chosen square root of chi(varpi). When chi is a rational square the
/// root is explicit; otherwise only even powers can be evaluated.
struct ChiSquareRoot {
  ChiSquareRoot(Rational chi, int branch = 1);

  /// (chi^{1/2})^n. PreconditionError for odd n without an explicit root.
  Rational at_power(long n) const;
  ChiSquareRoot flipped() const { return ChiSquareRoot(chi, -branch); }

  Rational chi;
  int branch;
  std::optional<Rational> root;
};

enum class ParabolicKind { B, BPrime, P2, Q };

/// e with delta_P(t_lambda) = q^{-e} for the standard parabolic with the
/// given block sizes (summing to r).
Rational modulus_exponent(const std::vector<long>& blocks, const std::vector<long>& lambda);
/// Named parabolics of GL_r: B, the Borel of GL_{r-1} in the upper corner,
/// P(2,..,2) (r even) and Q(r-1,1).
Rational modulus_exponent(ParabolicKind kind, const std::vector<long>& lambda, size_t r);

/// delta_B(t_lambda)^{1/2} s_lambda(alpha) for dominant lambda with
/// lambda_r = 0, else zero.
QMonomial shintani_whittaker(const std::vector<long>& lambda, const SatakeData& sat);

/// The two toral semi-Whittaker values at t_lambda; both vanish unless lambda
/// is even.
std::pair<QMonomial, QMonomial> toral_q_values(const std::vector<long>& lambda, const SatakeData& sat,
                                               const ChiSquareRoot& chi_sqrt);

/// prod_{i<=j} (1 - alpha_i alpha_j X)^{-1}, chi not included.
TruncatedSeries sym_series(const SatakeData& sat, int degree);

/// Sum over even dominant lambda in Z^{r-1} of s_lambda(alpha) X^{|lambda|/2}.
TruncatedSeries even_partition_gf(const SatakeData& sat, int degree);

/// prod_{i<=j} (1 - alpha_i alpha_j X)^{-1} against
/// even_partition_gf * (1 - omega^2 X^r)^{-1}.
bool bg_identity_check(const SatakeData& sat, int degree);

/// Reciprocal polynomial P with L = 1/P(q^{-s}).
struct LocalFactor {
  Polynomial reciprocal;
  std::string to_string() const { return poly_to_string(reciprocal); }
  Rational operator()(const Rational& x) const;
  std::complex<double> operator()(std::complex<double> x) const;
};

struct LocalFactors {
  LocalFactor sym;
  LocalFactor ext;
  LocalFactor rs;
};

/// Sym^2, wedge^2 and pi x pi twisted by chi. All constant 1 if ramified.
LocalFactors local_factors(const SatakeData& sat);
bool rs_factorization_check(const SatakeData& sat);

/// s -> (1 - chi q^{-(s + shift)})^{-1}, or 1 when chi is ramified.
class TateFactor {
 public:
  TateFactor(std::optional<Rational> chi, Rational shift, long q);

  bool is_ramified() const { return !chi_; }
  /// The rational s where the factor is singular, if any.
  std::optional<Rational> pole() const;
  bool is_pole(const Rational& s) const { return pole() == s; }
  /// Exact value when s + shift is an integer and s is not the pole.
  std::optional<Rational> exact_value(const Rational& s) const;
  double value(double s) const;
  LocalFactor reciprocal() const;

 private:
  std::optional<Rational> chi_;
  Rational shift_;
  long q_;
};

/// The (toral part of the) unramified zeta integral as a series in
/// X = chi q^{-2s+1/2}. ConsistencyError if some term is not a multiple
/// of X^{|lambda|/2}.
TruncatedSeries unramified_zeta_series(const SatakeData& sat, const ChiSquareRoot& chi_sqrt, int degree);
/// Series equals prod_{i<=j}(1 - alpha_i alpha_j X)^{-1} (1 - omega^2 X^r).
bool unramified_zeta_check(const SatakeData& sat, const ChiSquareRoot& chi_sqrt, int degree);
bool unramified_zeta_check(const SatakeData& sat, int degree);

enum class GkKind { Even, Odd };

struct GkValue {
  enum class Kind { Finite, Pole, Zero, Indeterminate };
  Kind kind;
  std::optional<Rational> exact;
  double approx;
  std::string to_string() const;
};

/// r(2s + 1/2) - r + 1
Rational gk_numerator_argument(size_t r, const Rational& s);
/// r(2s + q_blocks + 1/2)
Rational gk_denominator_argument(size_t r, long q_blocks, const Rational& s);

/// L(r(2s+1/2)-r+1, xi) / L(r(2s+q_blocks+1/2), xi) for the spherical
/// section. xi is eta^{-2} (even kind) or chi eta^{-2} (odd kind); pass its
/// value at varpi, or nullopt if ramified.
GkValue gk_ratio(GkKind kind, size_t r, long q_blocks, const Rational& s, std::optional<Rational> xi, long q);

/// s at which the numerator of gk_ratio is singular (if any).
std::optional<Rational> gk_numerator_pole(size_t r, std::optional<Rational> xi, long q);

/// Added to the ratio's s, gives the Eisenstein parameter.
inline const Rational kGkToEisensteinShift{1, 2};

struct PoleReport {
  std::set<Rational> normalizer_poles;
  std::set<Rational> l_poles;
  static Rational s_to_l_arg(const Rational& s) { return 2 * s - Rational(1, 2); }
};

PoleReport pole_report(size_t r, bool chi_r_omega_sq_trivial);

/// One place of an Euler product, with floating parameters.
struct EulerEntry {
  long p;
  std::vector<std::complex<double>> alphas;
  std::optional<std::complex<double>> chi;
};

EulerEntry to_euler_entry(long p, const SatakeData& sat);

/// prod_p 1 / sym_p(p^{-s}). ConvergenceError outside the abscissa.
std::complex<double> euler_product(const std::vector<EulerEntry>& table, std::complex<double> s);

}  // namespace metasym
