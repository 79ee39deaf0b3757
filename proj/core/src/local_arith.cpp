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

#include "metasym/local_arith.hpp"

#include <algorithm>
#include <set>

#include "metasym/errors.hpp"

namespace metasym {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

LocalPlace LocalPlace::finite(long p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return LocalPlace(p);
}

LocalPlace LocalPlace::parse(std::string_view text) {
  if (text == "inf" || text == "real" || text == "R" || text == "oo") return real();
  long p = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw DataError("unknown place '" + std::string(text) + "'");
    p = p * 10 + (c - '0');
    if (p > 1000000000L) throw DataError("place too large");
  }
  if (text.empty()) throw DataError("empty place");
  return finite(p);
}

std::string LocalPlace::to_string() const { return is_real() ? "inf" : std::to_string(prime_); }

Sign Sign::from_int(int v) {
  if (v == 1) return plus();
  if (v == -1) return minus();
  throw DomainError("sign must be +1 or -1, got " + std::to_string(v));
}

std::pair<long, Rational> valuation_and_unit(const Rational& x, long p) {
  if (x == 0) throw DomainError("valuation of zero");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  Integer num = x.get_num(), den = x.get_den();
  Integer prime(p);
  long v = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t()));
  v -= static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t()));
  return {v, make_rational(num, den)};
}

long valuation(const Rational& x, long p) { return valuation_and_unit(x, p).first; }

Sign legendre(const Integer& a, long p) {
  if (p == 2) throw DomainError("Legendre symbol needs an odd prime");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  Integer m(p);
  Integer r = a % m;
  if (r < 0) r += m;
  if (r == 0) throw DomainError("Legendre symbol: p divides a");
  // Euler's criterion.
  Integer e;
  mpz_powm_ui(e.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), m.get_mpz_t());
  return e == 1 ? Sign::plus() : Sign::minus();
}

Sign unit_legendre(const Rational& u, long p) {
  return legendre(u.get_num(), p) * legendre(u.get_den(), p);
}

Integer residue_mod(const Rational& u, const Integer& m) {
  Integer inv;
  Integer den = u.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("denominator not invertible modulo " + m.get_str());
  Integer r = (u.get_num() * inv) % m;
  if (r < 0) r += m;
  return r;
}

namespace {

Sign hilbert_two(const Rational& a, const Rational& b) {
  auto [alpha, u] = valuation_and_unit(a, 2);
  auto [beta, w] = valuation_and_unit(b, 2);
  long u8 = residue_mod(u, Integer(8)).get_si();
  long w8 = residue_mod(w, Integer(8)).get_si();
  auto eps = [](long x) { return ((x - 1) / 2) % 2; };
  auto omega = [](long x) { return ((x * x - 1) / 8) % 2; };
  long e = eps(u8) * eps(w8) + alpha * omega(w8) + beta * omega(u8);
  return (e % 2 == 0) ? Sign::plus() : Sign::minus();
}

Sign hilbert_odd(const Rational& a, const Rational& b, long p) {
  auto [alpha, u] = valuation_and_unit(a, p);
  auto [beta, w] = valuation_and_unit(b, p);
  Sign s = Sign::plus();
  if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 != 0) s = Sign::minus();
  s *= unit_legendre(u, p).pow(beta);
  s *= unit_legendre(w, p).pow(alpha);
  return s;
}

}  // namespace

Sign hilbert(const Rational& a, const Rational& b, const LocalPlace& v) {
  if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
  if (v.is_real()) return (a < 0 && b < 0) ? Sign::minus() : Sign::plus();
  if (v.prime() == 2) return hilbert_two(a, b);
  return hilbert_odd(a, b, v.prime());
}

std::vector<long> relevant_primes(const std::vector<Rational>& values) {
  std::set<long> primes{2};
  for (const Rational& x : values) {
    if (x == 0) throw DomainError("relevant primes of zero");
    for (Integer n : {Integer(abs(x.get_num())), Integer(x.get_den())}) {
      for (long d = 2; Integer(d) * d <= n; ++d) {
        if (n % d == 0) {
          primes.insert(d);
          while (n % d == 0) n /= d;
        }
      }
      if (n > 1) {
        if (!n.fits_slong_p()) throw ResourceError("prime factor too large to factor by trial division");
        primes.insert(n.get_si());
      }
    }
  }
  return {primes.begin(), primes.end()};
}

Sign reciprocity_product(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
  Sign prod = hilbert(a, b, LocalPlace::real());
  for (long p : relevant_primes({a, b})) prod *= hilbert(a, b, LocalPlace::finite(p));
  return prod;
}

bool same_square_class(const Rational& a, const Rational& b, const LocalPlace& v) {
  if (a == 0 || b == 0) throw DomainError("square class of zero");
  Rational ratio = a / b;
  if (v.is_real()) return ratio > 0;
  auto [e, u] = valuation_and_unit(ratio, v.prime());
  if (e % 2 != 0) return false;
  if (v.prime() == 2) return residue_mod(u, Integer(8)) == 1;
  return unit_legendre(u, v.prime()) == Sign::plus();
}

long least_nonresidue(long p) {
  for (long n = 2; n < p; ++n)
    if (legendre(Integer(n), p) == Sign::minus()) return n;
  throw DomainError("no non-residue modulo " + std::to_string(p));
}

std::vector<Rational> square_class_representatives(const LocalPlace& v) {
  if (v.is_real()) return {Rational(1), Rational(-1)};
  long p = v.prime();
  if (p == 2) return {1, -1, 5, -5, 2, -2, 10, -10};
  long u = least_nonresidue(p);
  return {Rational(1), Rational(u), Rational(p), Rational(u * p)};
}

}  // namespace metasym
