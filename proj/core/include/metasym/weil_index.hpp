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
#include <string>

#include "metasym/local_arith.hpp"
#include "metasym/rational.hpp"

namespace metasym {

using Complex = std::complex<double>;

/// e^{i pi k / 4}, stored as k mod 8.
class EighthRoot {
 public:
  constexpr EighthRoot() = default;
  constexpr explicit EighthRoot(long exponent) : k_(static_cast<int>(((exponent % 8) + 8) % 8)) {}
  static constexpr EighthRoot one() { return EighthRoot(0); }
  static constexpr EighthRoot from_sign(Sign s) { return EighthRoot(s.is_negative() ? 4 : 0); }

  constexpr int exponent() const { return k_; }
  constexpr EighthRoot inverse() const { return EighthRoot(-k_); }
  constexpr EighthRoot pow(long e) const { return EighthRoot(static_cast<long>(k_) * (e % 8)); }
  Complex value() const;
  /// "1", "-1", "i", "-i", "e^{i*pi/4}", "e^{-3i*pi/4}", ...
  std::string to_string() const;

  friend constexpr EighthRoot operator*(EighthRoot a, EighthRoot b) { return EighthRoot(a.k_ + b.k_); }
  friend constexpr EighthRoot operator*(EighthRoot a, Sign s) { return a * from_sign(s); }
  friend constexpr bool operator==(EighthRoot, EighthRoot) = default;

 private:
  int k_ = 0;
};

/// An exact value of the form c * zeta with c rational and zeta an eighth
/// root of unity. Closed under multiplication.
struct ScaledRoot {
  Rational scale = 1;
  EighthRoot root;

  Complex value() const;
  std::string to_string() const;
  friend ScaledRoot operator*(const ScaledRoot& a, const ScaledRoot& b) {
    return {a.scale * b.scale, a.root * b.root};
  }
  friend bool operator==(const ScaledRoot& a, const ScaledRoot& b) {
    if (a.scale == 0 || b.scale == 0) return a.scale == b.scale;
    return a.scale == b.scale && a.root == b.root;
  }
};

/// psi_a(x) = psi(a x) for the standard character psi of Q_v:
/// real: psi(x) = exp(2 pi i x); odd p: psi(x) = exp(-2 pi i {x}_p), whose
/// conductor is exactly Z_p. With these choices the product over all places
/// is trivial on Q.
class AdditiveCharacter {
 public:
  /// Throws UnsupportedDomainError for p = 2 and DomainError for a == 0.
  AdditiveCharacter(LocalPlace place, Rational scale = 1);
  static AdditiveCharacter standard(const LocalPlace& v) { return AdditiveCharacter(v, 1); }

  const LocalPlace& place() const { return place_; }
  const Rational& scale() const { return scale_; }
  /// psi_{scale * a}.
  AdditiveCharacter twisted(const Rational& a) const;
  /// Value at a rational argument.
  Complex operator()(const Rational& x) const;

 private:
  LocalPlace place_;
  Rational scale_;
};

/// The p-adic fractional part {x}_p in [0, 1).
Rational padic_fractional_part(const Rational& x, long p);

/// Numerical Weil index of x -> psi(a x^2) at an odd prime, obtained from
/// |a|^{1/2} times the integral of psi(a x^2) over p^{-J} Z_p, where the
/// lattice is shell_depth shells beyond the first lattice on which the phase
/// is nontrivial. The integral is an exact finite exponential sum; the value
/// is stable for every shell_depth >= 1 up to rounding (< 1e-12).
Complex gauss_shell_oracle(long p, const Rational& a, int shell_depth = 4);

/// Numerical Weil index at the real place: |2a|^{1/2} times the regularized
/// Fresnel integral of exp(2 pi i a x^2), by Simpson quadrature on [0, 8]
/// plus an asymptotic tail. Absolute error < 1e-9.
Complex fresnel_oracle(const Rational& a);

struct WeilIndexResult {
  EighthRoot value;
  Complex oracle;
  double residual = 0;  // |oracle - value|
};

/// Snaps a numerical value to the nearest eighth root of unity; throws
/// ConsistencyError if none lies within tolerance.
WeilIndexResult snap_to_eighth_root(Complex z, double tolerance = 1e-6);

/// gamma(psi) as an exact eighth root, selected by the oracle. Memoized per
/// (place, square class of the scale).
WeilIndexResult gamma_with_residual(const AdditiveCharacter& psi);
EighthRoot gamma(const AdditiveCharacter& psi);

/// mu_psi(a) = gamma(psi_a) / gamma(psi).
EighthRoot mu(const Rational& a, const AdditiveCharacter& psi);

/// mu(ab) == mu(a) mu(b) (a, b)_v.
bool mu_multiplicativity_check(const Rational& a, const Rational& b, const AdditiveCharacter& psi);

}  // namespace metasym
