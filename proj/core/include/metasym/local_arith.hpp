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

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metasym/rational.hpp"

namespace metasym {

/// A place of Q: a finite prime or the real place. The complex place is not
/// modelled; every symbol is trivial there.
class LocalPlace {
 public:
  static LocalPlace real() { return LocalPlace(0); }
  /// Throws DomainError unless p is prime.
  static LocalPlace finite(long p);
  /// Accepts "inf", "real", "R" or a prime.
  static LocalPlace parse(std::string_view text);

  bool is_real() const { return prime_ == 0; }
  bool is_finite() const { return prime_ != 0; }
  bool is_odd_finite() const { return prime_ > 2; }
  /// Only meaningful for finite places.
  long prime() const { return prime_; }
  std::string to_string() const;

  friend bool operator==(const LocalPlace&, const LocalPlace&) = default;
  friend auto operator<=>(const LocalPlace&, const LocalPlace&) = default;

 private:
  explicit LocalPlace(long p) : prime_(p) {}
  long prime_;
};

/// An element of {+1, -1}.
class Sign {
 public:
  constexpr Sign() = default;
  static constexpr Sign plus() { return Sign(false); }
  static constexpr Sign minus() { return Sign(true); }
  static Sign from_int(int v);

  constexpr int value() const { return negative_ ? -1 : 1; }
  constexpr bool is_negative() const { return negative_; }
  constexpr Sign pow(long e) const { return (negative_ && (e % 2 != 0)) ? minus() : plus(); }

  friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.negative_ != b.negative_); }
  Sign& operator*=(Sign o) { negative_ = negative_ != o.negative_; return *this; }
  friend constexpr Sign operator-(Sign a) { return Sign(!a.negative_); }
  friend constexpr bool operator==(Sign, Sign) = default;
  std::string to_string() const { return negative_ ? "-1" : "1"; }

 private:
  constexpr explicit Sign(bool negative) : negative_(negative) {}
  bool negative_ = false;
};

bool is_prime(long n);

/// x = p^v * u with u a p-adic unit. Throws DomainError for x == 0.
std::pair<long, Rational> valuation_and_unit(const Rational& x, long p);

/// p-adic valuation of a nonzero rational.
long valuation(const Rational& x, long p);

/// Legendre symbol (a/p) for an odd prime p not dividing a.
Sign legendre(const Integer& a, long p);

/// Legendre symbol of a p-adic unit rational n/d, i.e. (n d / p).
Sign unit_legendre(const Rational& u, long p);

/// Local Hilbert symbol (a, b)_v for nonzero rationals. Supports the real
/// place, odd primes, and p = 2 (classical mod-8 formula).
Sign hilbert(const Rational& a, const Rational& b, const LocalPlace& v);

/// Primes dividing 2 * num * den of the given nonzero rationals, ascending.
std::vector<long> relevant_primes(const std::vector<Rational>& values);

/// Product of (a, b)_v over the real place and every prime dividing
/// 2 * num * den of a and b. Always +1 by reciprocity.
Sign reciprocity_product(const Rational& a, const Rational& b);

/// True iff a / b is a square in Q_v.
bool same_square_class(const Rational& a, const Rational& b, const LocalPlace& v);

/// One representative of every square class of Q_v^x:
/// odd p: {1, u, p, u p} with u the least non-residue;
/// p = 2: {±1, ±5, ±2, ±10}; real: {1, -1}.
std::vector<Rational> square_class_representatives(const LocalPlace& v);

/// Least positive quadratic non-residue modulo an odd prime.
long least_nonresidue(long p);

/// Modular inverse of a unit rational's residue: returns n * d^{-1} mod m
/// for u = n/d with gcd(d, m) = 1. Result in [0, m).
Integer residue_mod(const Rational& u, const Integer& m);

}  // namespace metasym
