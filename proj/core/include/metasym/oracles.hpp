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

#include <utility>
#include <vector>

#include "metasym/local_arith.hpp"

namespace metasym {

/// Brute-force Hilbert symbol: +1 iff a x^2 + b y^2 = z^2 has a primitive
/// solution modulo p^k (k = 3 for odd p, k = 5 for p = 2, after reducing a
/// and b to valuation 0 or 1 by squares; Hensel lifting makes this exact),
/// and by sign analysis at the real place.
Sign hilbert_solvability_oracle(const Rational& a, const Rational& b, const LocalPlace& v);

/// exponent e with [N(O) : t N(O) t^{-1}] = p^e for t = diag(p^{lambda_i}),
/// where N is the unipotent group spanned by the given root positions (i, j),
/// i < j, 0-based. Counted coordinatewise on O / p^depth.
long modulus_index_oracle(const std::vector<long>& lambda,
                          const std::vector<std::pair<int, int>>& roots, long p = 3, int depth = 3);

}  // namespace metasym
