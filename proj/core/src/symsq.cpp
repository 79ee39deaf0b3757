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

#include "metasym/symsq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "metasym/errors.hpp"
#include "metasym/schur.hpp"

namespace metasym {

namespace {

double to_double(const Rational& x) { return x.get_d(); }

// k with x = q^k, if any.
std::optional<long> exact_log(Rational x, long q) {
  if (x <= 0 || q < 2) return std::nullopt;
  long k = 0;
  while (x >= q) {
    x /= q;
    ++k;
  }
  while (x < 1) {
    x *= q;
    --k;
  }
  if (x != 1) return std::nullopt;
  return k;
}

std::vector<long> pad(std::vector<long> lambda, size_t r) {
  if (lambda.size() > r) {
    for (size_t i = r; i < lambda.size(); ++i)
      if (lambda[i] != 0) throw DomainError("lambda has more than r entries");
    lambda.resize(r);
  }
  lambda.resize(r, 0);
  return lambda;
}

long total(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

TruncatedSeries linear_factor(const Rational& c, int power, int degree) {
  // 1 - c X^power
  Polynomial p(static_cast<size_t>(power) + 1, Rational(0));
  p[0] = 1;
  p[static_cast<size_t>(power)] -= c;
  return TruncatedSeries::from_polynomial(p, degree);
}


}  // namespace

TruncatedSeries sym_series(const SatakeData& sat, int degree) {
  TruncatedSeries out = TruncatedSeries::one(degree);
  for (size_t i = 0; i < sat.r(); ++i)
    for (size_t j = i; j < sat.r(); ++j) out = out * linear_factor(sat.alphas[i] * sat.alphas[j], 1, degree).inverse();
  return out;
}

SatakeData::SatakeData(std::vector<Rational> a, long q_, std::optional<Rational> chi_)
    : alphas(std::move(a)), q(q_), chi(std::move(chi_)), omega(1) {
  if (alphas.empty()) throw DomainError("Satake data needs at least one parameter");
  if (q < 2) throw DomainError("residue size must be at least 2");
  for (const auto& x : alphas) {
    if (x == 0) throw DomainError("Satake parameters must be nonzero");
    omega *= x;
  }
  if (chi && *chi == 0) throw DomainError("chi(varpi) must be nonzero");
}

QMonomial QMonomial::operator*(const QMonomial& o) const {
  return {coeff * o.coeff, q_exp + o.q_exp, s_coeff + o.s_coeff};
}

double QMonomial::value(long q, double s) const {
  return to_double(coeff) * std::pow(static_cast<double>(q), to_double(q_exp) + to_double(s_coeff) * s);
}

std::string QMonomial::to_string() const {
  std::string out = metasym::to_string(coeff);
  if (q_exp != 0) out += "*q^(" + metasym::to_string(q_exp) + ")";
  if (s_coeff != 0) out += "*q^(" + metasym::to_string(s_coeff) + "*s)";
  return out;
}

ChiSquareRoot::ChiSquareRoot(Rational c, int b) : chi(std::move(c)), branch(b) {
  if (chi == 0) throw DomainError("chi(varpi) must be nonzero");
  if (branch != 1 && branch != -1) throw DomainError("square root branch must be +1 or -1");
  if (is_rational_square(chi)) root = rational_sqrt(chi) * branch;
}

Rational ChiSquareRoot::at_power(long n) const {
  if (root) return pow(*root, n);
  if (n % 2 != 0) throw PreconditionError("odd power of a square root of " + metasym::to_string(chi) + " is not rational");
  return pow(chi, n / 2);
}

Rational modulus_exponent(const std::vector<long>& blocks, const std::vector<long>& lambda) {
  long r = total(blocks);
  std::vector<long> lam = pad(lambda, static_cast<size_t>(r));
  Rational e = 0;
  long before = 0;
  size_t pos = 0;
  for (long n : blocks) {
    if (n <= 0) throw DomainError("block sizes must be positive");
    long after = r - before - n;
    long block_sum = 0;
    for (long i = 0; i < n; ++i) block_sum += lam[pos++];
    e += Rational(block_sum * (after - before));
    before += n;
  }
  return e;
}

Rational modulus_exponent(ParabolicKind kind, const std::vector<long>& lambda, size_t r) {
  if (r == 0) throw DomainError("rank must be positive");
  std::vector<long> lam = pad(lambda, r);
  switch (kind) {
    case ParabolicKind::B:
      return modulus_exponent(std::vector<long>(r, 1), lam);
    case ParabolicKind::BPrime:
      if (r == 1) return 0;
      return modulus_exponent(std::vector<long>(r - 1, 1), std::vector<long>(lam.begin(), lam.end() - 1));
    case ParabolicKind::P2:
      if (r % 2 != 0) throw DomainError("P(2,..,2) needs even rank");
      return modulus_exponent(std::vector<long>(r / 2, 2), lam);
    case ParabolicKind::Q:
      if (r == 1) return 0;
      return modulus_exponent(std::vector<long>{static_cast<long>(r) - 1, 1}, lam);
  }
  throw DomainError("unknown parabolic");
}

QMonomial shintani_whittaker(const std::vector<long>& lambda, const SatakeData& sat) {
  std::vector<long> lam = pad(lambda, sat.r());
  if (!is_dominant(lam)) return {};
  Rational e = modulus_exponent(ParabolicKind::B, lam, sat.r());
  return {schur_jt(Partition(lam), sat.alphas), -e / 2, 0};
}

std::pair<QMonomial, QMonomial> toral_q_values(const std::vector<long>& lambda, const SatakeData& sat,
                                               const ChiSquareRoot& chi_sqrt) {
  std::vector<long> lam = pad(lambda, sat.r());
  if (!is_dominant(lam) || !Partition(lam).is_even()) return {};
  long n = total(lam);
  Rational eb = modulus_exponent(ParabolicKind::B, lam, sat.r());
  Rational ebp = modulus_exponent(ParabolicKind::BPrime, lam, sat.r());
  QMonomial qv{chi_sqrt.at_power(n) * pow(sat.omega, -n), -eb / 4, 0};
  QMonomial qpv{pow(sat.omega, n), -ebp / 4, 0};
  return {qv, qpv};
}

TruncatedSeries even_partition_gf(const SatakeData& sat, int degree) {
  if (degree < 1) throw DomainError("truncation degree must be at least 1");
  TruncatedSeries out(degree);
  for (int k = 0; k <= degree; ++k)
    for (const auto& lam : even_partitions_of(2L * k, sat.r() - 1)) out[k] += schur_jt(lam, sat.alphas);
  return out;
}

bool bg_identity_check(const SatakeData& sat, int degree) {
  TruncatedSeries lhs = sym_series(sat, degree);
  TruncatedSeries rhs = even_partition_gf(sat, degree);
  if (static_cast<int>(sat.r()) <= degree)
    rhs = rhs * linear_factor(sat.omega * sat.omega, static_cast<int>(sat.r()), degree).inverse();
  return lhs == rhs;
}

Rational LocalFactor::operator()(const Rational& x) const {
  Rational v = 0;
  for (size_t i = reciprocal.size(); i-- > 0;) v = v * x + reciprocal[i];
  return v;
}

std::complex<double> LocalFactor::operator()(std::complex<double> x) const {
  std::complex<double> v = 0;
  for (size_t i = reciprocal.size(); i-- > 0;) v = v * x + to_double(reciprocal[i]);
  return v;
}

LocalFactors local_factors(const SatakeData& sat) {
  LocalFactors out{{{Rational(1)}}, {{Rational(1)}}, {{Rational(1)}}};
  if (!sat.chi) return out;
  const Rational& c = *sat.chi;
  for (size_t i = 0; i < sat.r(); ++i)
    for (size_t j = 0; j < sat.r(); ++j) {
      Polynomial f{Rational(1), -c * sat.alphas[i] * sat.alphas[j]};
      out.rs.reciprocal = poly_mul(out.rs.reciprocal, f);
      if (i < j) out.ext.reciprocal = poly_mul(out.ext.reciprocal, f);
      if (i <= j) out.sym.reciprocal = poly_mul(out.sym.reciprocal, f);
    }
  return out;
}

bool rs_factorization_check(const SatakeData& sat) {
  LocalFactors f = local_factors(sat);
  return poly_trim(poly_mul(f.ext.reciprocal, f.sym.reciprocal)) == poly_trim(f.rs.reciprocal);
}

TateFactor::TateFactor(std::optional<Rational> chi, Rational shift, long q)
    : chi_(std::move(chi)), shift_(std::move(shift)), q_(q) {
  if (q_ < 2) throw DomainError("residue size must be at least 2");
  if (chi_ && *chi_ == 0) throw DomainError("character value must be nonzero");
}

std::optional<Rational> TateFactor::pole() const {
  if (!chi_) return std::nullopt;
  auto k = exact_log(*chi_, q_);
  if (!k) return std::nullopt;
  return Rational(*k) - shift_;
}

std::optional<Rational> TateFactor::exact_value(const Rational& s) const {
  if (!chi_) return Rational(1);
  Rational x = s + shift_;
  if (x.get_den() != 1 || is_pole(s)) return std::nullopt;
  return 1 / (1 - *chi_ * pow(Rational(q_), -x.get_num().get_si()));
}

double TateFactor::value(double s) const {
  if (!chi_) return 1.0;
  double d = 1.0 - to_double(*chi_) * std::pow(static_cast<double>(q_), -(s + to_double(shift_)));
  return d == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / d;
}

LocalFactor TateFactor::reciprocal() const {
  if (!chi_) return {{Rational(1)}};
  return {{Rational(1), -*chi_}};
}

TruncatedSeries unramified_zeta_series(const SatakeData& sat, const ChiSquareRoot& chi_sqrt, int degree) {
  if (!sat.chi) throw PreconditionError("the unramified computation needs an unramified chi");
  if (chi_sqrt.chi != *sat.chi) throw PreconditionError("square root does not match chi(varpi)");
  const size_t r = sat.r();
  TruncatedSeries out(degree);
  for (long n = 0; n <= 2L * degree; ++n) {
    for (const auto& mu : partitions_of(n, r - 1)) {
      std::vector<long> lam = mu.padded(r);
      QMonomial w = shintani_whittaker(lam, sat);
      auto [qv, qpv] = toral_q_values(lam, sat, chi_sqrt);
      QMonomial delta_q{1, 0, -modulus_exponent(ParabolicKind::Q, lam, r)};
      QMonomial delta_b_inv{1, modulus_exponent(ParabolicKind::B, lam, r), 0};
      QMonomial term = w * qv * qpv * delta_q * delta_b_inv;
      if (term.is_zero()) continue;
      long k = n / 2;
      if (n % 2 != 0 || term.q_exp != Rational(k) / 2 || term.s_coeff != Rational(-2 * k))
        throw ConsistencyError("term at lambda = " + mu.to_string() + " is " + term.to_string() +
                               ", not a multiple of (q^(-2s+1/2))^" + std::to_string(k));
      out[static_cast<int>(k)] += term.coeff / pow(*sat.chi, k);
    }
  }
  return out;
}

bool unramified_zeta_check(const SatakeData& sat, const ChiSquareRoot& chi_sqrt, int degree) {
  TruncatedSeries lhs = unramified_zeta_series(sat, chi_sqrt, degree);
  TruncatedSeries rhs = sym_series(sat, degree);
  if (static_cast<int>(sat.r()) <= degree)
    rhs = rhs * linear_factor(sat.omega * sat.omega, static_cast<int>(sat.r()), degree);
  return lhs == rhs;
}

bool unramified_zeta_check(const SatakeData& sat, int degree) {
  if (!sat.chi) throw PreconditionError("the unramified computation needs an unramified chi");
  return unramified_zeta_check(sat, ChiSquareRoot(*sat.chi), degree);
}

std::string GkValue::to_string() const {
  switch (kind) {
    case Kind::Pole: return "pole";
    case Kind::Zero: return "0";
    case Kind::Indeterminate: return "indeterminate";
    case Kind::Finite: break;
  }
  if (exact) return metasym::to_string(*exact);
  return std::to_string(approx);
}

Rational gk_numerator_argument(size_t r, const Rational& s) {
  Rational rr(static_cast<long>(r));
  return rr * (2 * s + Rational(1, 2)) - rr + 1;
}

Rational gk_denominator_argument(size_t r, long q_blocks, const Rational& s) {
  return Rational(static_cast<long>(r)) * (2 * s + q_blocks + Rational(1, 2));
}

GkValue gk_ratio(GkKind kind, size_t r, long q_blocks, const Rational& s, std::optional<Rational> xi, long q) {
  size_t expected = static_cast<size_t>(2 * q_blocks) + (kind == GkKind::Odd ? 1 : 0);
  if (q_blocks < 1 || r != expected)
    throw PreconditionError("rank " + std::to_string(r) + " does not match " + std::to_string(q_blocks) +
                            (kind == GkKind::Even ? " blocks of even kind" : " blocks of odd kind"));
  TateFactor tate(std::move(xi), 0, q);
  Rational x_num = gk_numerator_argument(r, s);
  Rational x_den = gk_denominator_argument(r, q_blocks, s);
  bool num_pole = tate.is_pole(x_num);
  bool den_pole = tate.is_pole(x_den);
  if (num_pole && den_pole) return {GkValue::Kind::Indeterminate, std::nullopt, std::nan("")};
  if (num_pole) return {GkValue::Kind::Pole, std::nullopt, std::numeric_limits<double>::infinity()};
  if (den_pole) return {GkValue::Kind::Zero, Rational(0), 0.0};
  double approx = tate.value(to_double(x_num)) / tate.value(to_double(x_den));
  auto a = tate.exact_value(x_num);
  auto b = tate.exact_value(x_den);
  std::optional<Rational> exact;
  if (a && b) exact = *a / *b;
  return {GkValue::Kind::Finite, exact, approx};
}

std::optional<Rational> gk_numerator_pole(size_t r, std::optional<Rational> xi, long q) {
  auto k = TateFactor(std::move(xi), 0, q).pole();
  if (!k) return std::nullopt;
  // r(2s + 1/2) - r + 1 = k
  Rational rr(static_cast<long>(r));
  return (*k + rr - 1 - rr / 2) / (2 * rr);
}

PoleReport pole_report(size_t r, bool chi_r_omega_sq_trivial) {
  if (r == 0) throw DomainError("rank must be positive");
  PoleReport out;
  if (chi_r_omega_sq_trivial) {
    out.normalizer_poles = {Rational(1, 4), Rational(3, 4)};
    out.l_poles = {Rational(0), Rational(1)};
  }
  return out;
}

EulerEntry to_euler_entry(long p, const SatakeData& sat) {
  EulerEntry e{p, {}, std::nullopt};
  for (const auto& a : sat.alphas) e.alphas.emplace_back(to_double(a), 0.0);
  if (sat.chi) e.chi = std::complex<double>(to_double(*sat.chi), 0.0);
  return e;
}

std::complex<double> euler_product(const std::vector<EulerEntry>& table, std::complex<double> s) {
  std::complex<double> out = 1.0;
  for (const auto& e : table) {
    if (e.p < 2) throw DomainError("Euler factor needs a prime, got " + std::to_string(e.p));
    if (!e.chi) continue;
    std::complex<double> x = std::pow(std::complex<double>(static_cast<double>(e.p), 0.0), -s);
    std::complex<double> factor = 1.0;
    for (size_t i = 0; i < e.alphas.size(); ++i)
      for (size_t j = i; j < e.alphas.size(); ++j) {
        std::complex<double> t = *e.chi * e.alphas[i] * e.alphas[j] * x;
        if (std::abs(t) >= 1.0)
          throw ConvergenceError("Euler factor at p = " + std::to_string(e.p) + " is outside its abscissa of convergence");
        factor *= 1.0 - t;
      }
    out /= factor;
  }
  return out;
}

}  // namespace metasym
