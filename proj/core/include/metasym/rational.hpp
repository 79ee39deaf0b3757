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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace metasym {

using Integer = mpz_class;
/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "3", "-7/4" or a plain decimal such as "0.25" or "-1.5".
/// Decimals are converted exactly. Throws DataError on malformed text.
Rational parse_rational(std::string_view text);

/// Renders as "n" or "n/d".
std::string to_string(const Rational& x);

/// Exact integer power; negative exponents invert (x must be nonzero).
Rational pow(const Rational& x, long e);

/// True iff x is the square of a rational.
bool is_rational_square(const Rational& x);

/// Returns the nonnegative rational square root, or throws DomainError.
Rational rational_sqrt(const Rational& x);

std::vector<Rational> parse_rational_list(std::string_view csv);

}  // namespace metasym
