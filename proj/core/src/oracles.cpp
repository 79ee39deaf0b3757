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

#include "metasym/oracles.hpp"

#include <cstdint>
#include <set>
#include <vector>

#include "metasym/errors.hpp"

namespace metasym {

namespace {

// Multiplies x by squares of p until the valuation is 0 or 1 and returns an integer.
Integer reduce_to_integer(const Rational& x, long p) {
  auto [v, u] = valuation_and_unit(x, p);
  Integer den = u.get_den();
  // u * den^2 has the same square class as u and is an integer.
  Integer out = u.get_num() * den;
  if (v % 2 != 0) out *= p;
  return out;
}

}  // namespace

Sign hilbert_solvability_oracle(const Rational& a, const Rational& b, const LocalPlace& v) {
  if (a == 0 || b == 0) throw DomainError("Hilbert symbol of zero");
  if (v.is_real()) return (a < 0 && b < 0) ? Sign::minus() : Sign::plus();
  const long p = v.prime();
  const int k = p == 2 ? 5 : 3;
  std::int64_t mod = 1;
  for (int i = 0; i < k; ++i) mod *= p;
  Integer big_mod(mod);
  const std::int64_t ar = residue_mod(Rational(reduce_to_integer(a, p)), big_mod).get_si();
  const std::int64_t br = residue_mod(Rational(reduce_to_integer(b, p)), big_mod).get_si();

  // squares[s] bit 1: s = z^2 for some z; bit 2: for some unit z.
  std::vector<unsigned char> squares(static_cast<size_t>(mod), 0);
  std::set<std::pair<std::int64_t, bool>> classes;  // (x^2, x unit)
  for (std::int64_t x = 0; x < mod; ++x) {
    std::int64_t s = x * x % mod;
    bool unit = x % p != 0;
    squares[static_cast<size_t>(s)] |= unit ? 3 : 1;
    classes.insert({s, unit});
  }
  for (const auto& [sx, ux] : classes) {
    for (const auto& [sy, uy] : classes) {
      std::int64_t t = (ar * sx + br * sy) % mod;
      unsigned char need = (ux || uy) ? 1 : 2;
      if (squares[static_cast<size_t>(t)] & need) return Sign::plus();
    }
  }
  return Sign::minus();
}

long modulus_index_oracle(const std::vector<long>& lambda,
                          const std::vector<std::pair<int, int>>& roots, long p, int depth) {
  std::int64_t mod = 1;
  for (int i = 0; i < depth; ++i) mod *= p;
  auto log_p = [p](std::int64_t n) {
    long e = 0;
    while (n > 1) { n /= p; ++e; }
    return e;
  };
  long total = 0;
  for (auto [i, j] : roots) {
    if (i < 0 || j < 0 || static_cast<size_t>(std::max(i, j)) >= lambda.size() || i >= j)
      throw DomainError("root position out of range");
    long d = lambda[static_cast<size_t>(i)] - lambda[static_cast<size_t>(j)];
    long ad = d < 0 ? -d : d;
    if (ad > depth) throw ResourceError("modulus oracle depth too small for this weight");
    std::int64_t scale = 1;
    for (long s = 0; s < ad; ++s) scale *= p;
    // Image of multiplication by p^{|d|} on O / p^depth.
    std::set<std::int64_t> image;
    for (std::int64_t x = 0; x < mod; ++x) image.insert(x * scale % mod);
    long index = log_p(mod / static_cast<std::int64_t>(image.size()));
    total += d < 0 ? -index : index;
  }
  return total;
}

}  // namespace metasym
