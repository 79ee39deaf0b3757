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

#include <string>
#include <vector>

#include "metasym/rational.hpp"

namespace metasym {

/// Polynomial with exact rational coefficients, index = degree.
using Polynomial = std::vector<Rational>;

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// Drops trailing zero coefficients (keeps at least the constant term).
Polynomial poly_trim(Polynomial p);
std::string poly_to_string(const Polynomial& p, const std::string& var = "X");

/// Formal power series in one variable over Q, truncated mod X^{D+1}.
class TruncatedSeries {
 public:
  /// The zero series of degree D.
  explicit TruncatedSeries(int degree);
  /// Truncates or zero-pads the coefficients to degree D.
  TruncatedSeries(std::vector<Rational> coefficients, int degree);

  static TruncatedSeries one(int degree);
  static TruncatedSeries from_polynomial(const Polynomial& p, int degree);

  int degree() const { return degree_; }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<size_t>(i)); }
  Rational& operator[](int i) { return coeffs_.at(static_cast<size_t>(i)); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Degrees must agree; throws DomainError otherwise.
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Rational& c) const;
  /// Requires a nonzero constant term.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(long e) const;

  bool operator==(const TruncatedSeries& o) const;
  std::string to_string() const;

 private:
  void require_same_degree(const TruncatedSeries& o) const;
  std::vector<Rational> coeffs_;
  int degree_;
};

}  // namespace metasym
