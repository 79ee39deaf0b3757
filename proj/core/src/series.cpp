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

#include "metasym/series.hpp"

#include <sstream>

#include "metasym/errors.hpp"

namespace metasym {

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Polynomial poly_trim(Polynomial p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(Rational(0));
  return p;
}

std::string poly_to_string(const Polynomial& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) os << to_string(c);
    if (i >= 1) {
      if (c != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

TruncatedSeries::TruncatedSeries(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("negative truncation degree");
  coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, int degree)
    : coeffs_(std::move(coefficients)), degree_(degree) {
  if (degree < 0) throw DomainError("negative truncation degree");
  coeffs_.resize(static_cast<size_t>(degree) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::one(int degree) {
  TruncatedSeries s(degree);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, int degree) {
  return TruncatedSeries(p, degree);
}

void TruncatedSeries::require_same_degree(const TruncatedSeries& o) const {
  if (degree_ != o.degree_)
    throw DomainError("series truncation degrees differ (" + std::to_string(degree_) + " vs " +
                      std::to_string(o.degree_) + ")");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  require_same_degree(o);
  TruncatedSeries out = *this;
  for (int i = 0; i <= degree_; ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  require_same_degree(o);
  TruncatedSeries out = *this;
  for (int i = 0; i <= degree_; ++i) out.coeffs_[i] -= o.coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  require_same_degree(o);
  TruncatedSeries out(degree_);
  for (int i = 0; i <= degree_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= degree_; ++j) out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] == 0) throw DomainError("series with zero constant term is not invertible");
  TruncatedSeries out(degree_);
  Rational inv0 = 1 / coeffs_[0];
  out.coeffs_[0] = inv0;
  for (int n = 1; n <= degree_; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
    out.coeffs_[n] = -acc * inv0;
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  TruncatedSeries result = one(degree_);
  TruncatedSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  require_same_degree(o);
  return coeffs_ == o.coeffs_;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i <= degree_; ++i) os << (i ? ", " : "") << metasym::to_string(coeffs_[i]);
  os << "]";
  return os.str();
}

}  // namespace metasym
