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

#include "metasym/weil_index.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "metasym/errors.hpp"

namespace metasym {

namespace {
constexpr double kPi = std::numbers::pi;

Complex unit_phase(double turns) { return std::polar(1.0, 2 * kPi * turns); }

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
}  // namespace

Complex EighthRoot::value() const { return std::polar(1.0, kPi * k_ / 4.0); }

std::string EighthRoot::to_string() const {
  switch (k_) {
    case 0: return "1";
    case 1: return "e^{i*pi/4}";
    case 2: return "i";
    case 3: return "e^{3i*pi/4}";
    case 4: return "-1";
    case 5: return "e^{-3i*pi/4}";
    case 6: return "-i";
    default: return "e^{-i*pi/4}";
  }
}

Complex ScaledRoot::value() const { return scale.get_d() * root.value(); }

std::string ScaledRoot::to_string() const {
  if (scale == 0) return "0";
  if (root.exponent() == 0) return metasym::to_string(scale);
  if (root.exponent() == 4) return metasym::to_string(Rational(-scale));
  if (scale == 1) return root.to_string();
  if (scale == -1) return (root * Sign::minus()).to_string();
  return metasym::to_string(scale) + "*" + root.to_string();
}

AdditiveCharacter::AdditiveCharacter(LocalPlace place, Rational scale)
    : place_(place), scale_(std::move(scale)) {
  if (place_.is_finite() && !place_.is_odd_finite())
    throw UnsupportedDomainError("additive characters are modelled only at odd primes and the real place");
  if (scale_ == 0) throw DomainError("additive character scale must be nonzero");
}

AdditiveCharacter AdditiveCharacter::twisted(const Rational& a) const {
  return AdditiveCharacter(place_, scale_ * a);
}

Rational padic_fractional_part(const Rational& x, long p) {
  if (x == 0) return 0;
  auto [v, u] = valuation_and_unit(x, p);
  if (v >= 0) return 0;
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(-v));
  return make_rational(residue_mod(u, modulus), modulus);
}

Complex AdditiveCharacter::operator()(const Rational& x) const {
  Rational y = scale_ * x;
  if (place_.is_real()) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    return unit_phase(Rational(y - fl).get_d());
  }
  return unit_phase(-padic_fractional_part(y, place_.prime()).get_d());
}

Complex gauss_shell_oracle(long p, const Rational& a, int shell_depth) {
  if (p == 2) throw UnsupportedDomainError("Gauss shell oracle needs an odd prime");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (shell_depth < 1) throw DomainError("shell depth must be positive");
  auto [v, u] = valuation_and_unit(a, p);
  long j = floor_div(v, 2) + shell_depth;
  long m = 2 * j - v;
  long h = (m + 1) / 2;
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(m));
  if (!modulus.fits_slong_p() || modulus > Integer(1) << 60)
    throw ResourceError("Gauss shell oracle modulus too large; lower the shell depth");
  const __int128 mod = modulus.get_si();
  const __int128 ubar = residue_mod(u, modulus).get_si();
  __int128 outer = 1, inner = 1;
  for (long i = 0; i < h; ++i) outer *= p;
  for (long i = 0; i < m - h; ++i) inner *= p;

  // Split y = y0 + p^h t; the t-sum is a complete character sum equal to
  // p^{m-h} when p^{m-h} divides 2 u y0 and 0 otherwise.
  Complex sum = 0;
  for (__int128 y0 = 0; y0 < outer; ++y0) {
    if ((2 * ubar * y0) % inner != 0) continue;
    __int128 phase = (ubar * ((y0 * y0) % mod)) % mod;
    sum += unit_phase(-static_cast<double>(phase) / static_cast<double>(mod));
  }
  sum *= static_cast<double>(inner);
  // integral over p^{-j} Z_p = p^j * p^{-m} * sum; then scale by |a|^{1/2}.
  double log_scale = static_cast<double>(j - m) - 0.5 * static_cast<double>(v);
  return sum * std::pow(static_cast<double>(p), log_scale);
}

Complex fresnel_oracle(const Rational& a) {
  if (a == 0) throw DomainError("Fresnel oracle needs a nonzero scale");
  // After x = t / sqrt(2 pi |a|): gamma = (2 / sqrt(pi)) * int_0^inf e^{i t^2} dt.
  constexpr double kR = 8.0;
  constexpr int kIntervals = 40000;
  auto f = [](double t) { return std::polar(1.0, t * t); };
  const double step = kR / kIntervals;
  Complex body = f(0.0) + f(kR);
  for (int k = 1; k < kIntervals; ++k) body += (k % 2 ? 4.0 : 2.0) * f(k * step);
  body *= step / 3.0;
  // Tail by repeated integration by parts:
  // T_n = -e^{iR^2} R^{-n-1} / (2i) + (n + 1) / (2i) * T_{n+2}.
  const Complex two_i(0.0, 2.0);
  Complex tail = 0, coeff = 1;
  for (int n = 0; n <= 12; n += 2) {
    tail += coeff * (-f(kR) * std::pow(kR, -(n + 1)) / two_i);
    coeff *= static_cast<double>(n + 1) / two_i;
  }
  Complex value = 2.0 / std::sqrt(kPi) * (body + tail);
  return a > 0 ? value : std::conj(value);
}

WeilIndexResult snap_to_eighth_root(Complex z, double tolerance) {
  WeilIndexResult best{EighthRoot(0), z, std::abs(z - EighthRoot(0).value())};
  for (int k = 1; k < 8; ++k) {
    double d = std::abs(z - EighthRoot(k).value());
    if (d < best.residual) best = {EighthRoot(k), z, d};
  }
  if (!(best.residual < tolerance))
    throw ConsistencyError("oracle value is not within tolerance of any eighth root of unity (residual " +
                           std::to_string(best.residual) + ")");
  return best;
}

namespace {
using CacheKey = std::tuple<long, int, int>;
std::mutex g_cache_mutex;
std::map<CacheKey, WeilIndexResult> g_cache;

CacheKey square_class_key(const AdditiveCharacter& psi) {
  const Rational& a = psi.scale();
  if (psi.place().is_real()) return {0, a > 0 ? 1 : -1, 0};
  long p = psi.place().prime();
  auto [v, u] = valuation_and_unit(a, p);
  return {p, static_cast<int>(((v % 2) + 2) % 2), unit_legendre(u, p).value()};
}
}  // namespace

WeilIndexResult gamma_with_residual(const AdditiveCharacter& psi) {
  CacheKey key = square_class_key(psi);
  {
    std::lock_guard lock(g_cache_mutex);
    if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  }
  Complex z = psi.place().is_real() ? fresnel_oracle(psi.scale())
                                    : gauss_shell_oracle(psi.place().prime(), psi.scale());
  WeilIndexResult result = snap_to_eighth_root(z);
  std::lock_guard lock(g_cache_mutex);
  g_cache.emplace(key, result);
  return result;
}

EighthRoot gamma(const AdditiveCharacter& psi) { return gamma_with_residual(psi).value; }

EighthRoot mu(const Rational& a, const AdditiveCharacter& psi) {
  if (a == 0) throw DomainError("mu of zero");
  return gamma(psi.twisted(a)) * gamma(psi).inverse();
}

bool mu_multiplicativity_check(const Rational& a, const Rational& b, const AdditiveCharacter& psi) {
  return mu(a * b, psi) == mu(a, psi) * mu(b, psi) * hilbert(a, b, psi.place());
}

}  // namespace metasym
