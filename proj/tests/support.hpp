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
#include <random>
#include <vector>

#include "metasym/rational.hpp"
#include "metasym/structured_element.hpp"

namespace metasym::testing {

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

  std::vector<Rational> nonzeros(size_t n, long bound = 12, long den_bound = 6) {
    std::vector<Rational> out;
    for (size_t i = 0; i < n; ++i) out.push_back(nonzero(bound, den_bound));
    return out;
  }

  StructuredElement gl2(long bound = 6) {
    while (true) {
      Rational a = integer(-bound, bound), b = integer(-bound, bound), c = integer(-bound, bound),
               d = integer(-bound, bound);
      if (a * d - b * c != 0) return StructuredElement::gl2(a, b, c, d);
    }
  }

  StructuredElement torus(size_t r) { return StructuredElement::torus(nonzeros(r)); }

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
    for (size_t i = 0; i < static_cast<size_t>(r); ++i)
      for (size_t j = i + 1; j < static_cast<size_t>(r); ++j) n[i][j] = integer(-4, 4);
    return StructuredElement::unipotent(n);
  }

 private:
  std::mt19937_64 rng_;
};

inline const std::vector<Rational>& small_values() {
  static const std::vector<Rational> values{1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 10, -10};
  return values;
}

}  // namespace metasym::testing
