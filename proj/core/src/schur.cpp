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

#include "metasym/schur.hpp"

#include <functional>

#include "metasym/errors.hpp"
#include "metasym/structured_element.hpp"

namespace metasym {

Rational complete_homogeneous(long k, const std::vector<Rational>& values) {
  if (k < 0) return 0;
  // h_k(x_1..x_n) = h_k(x_1..x_{n-1}) + x_n h_{k-1}(x_1..x_n)
  std::vector<Rational> h(static_cast<size_t>(k) + 1, Rational(0));
  h[0] = 1;
  for (const auto& x : values)
    for (size_t j = 1; j < h.size(); ++j) h[j] += x * h[j - 1];
  return h.back();
}

Rational schur_jt(const Partition& lambda, const std::vector<Rational>& values) {
  const size_t n = lambda.length();
  if (n > values.size()) throw DomainError("partition has more parts than variables");
  if (n == 0) return 1;
  long top = lambda[0] + static_cast<long>(n);
  std::vector<Rational> h(static_cast<size_t>(top) + 1);
  for (long k = 0; k <= top; ++k) h[static_cast<size_t>(k)] = complete_homogeneous(k, values);
  auto hk = [&](long k) -> Rational { return k < 0 ? Rational(0) : h[static_cast<size_t>(k)]; };
  Matrix m(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = hk(lambda[i] - static_cast<long>(i) + static_cast<long>(j));
  return determinant(std::move(m));
}

namespace {

// Fills the cells row by row; calls visit with the multiset of entries.
void enumerate_tableaux(const Partition& lambda, size_t r, const std::function<void(const std::vector<int>&)>& visit) {
  const size_t rows = lambda.length();
  std::vector<std::vector<int>> t(rows);
  for (size_t i = 0; i < rows; ++i) t[i].assign(static_cast<size_t>(lambda[i]), 0);
  std::vector<int> counts(r, 0);
  std::function<void(size_t, size_t)> fill = [&](size_t i, size_t j) {
    if (i == rows) {
      visit(counts);
      return;
    }
    if (j == t[i].size()) {
      fill(i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= static_cast<int>(r); ++v) {
      t[i][j] = v;
      ++counts[static_cast<size_t>(v - 1)];
      fill(i, j + 1);
      --counts[static_cast<size_t>(v - 1)];
    }
  };
  fill(0, 0);
}

}  // namespace

Rational schur_tableau_oracle(const Partition& lambda, const std::vector<Rational>& values) {
  if (lambda.size() > 10 || values.size() > 4)
    throw ResourceError("tableau enumeration is limited to |lambda| <= 10 and at most 4 variables");
  if (lambda.length() > values.size()) throw DomainError("partition has more parts than variables");
  Rational total = 0;
  enumerate_tableaux(lambda, values.size(), [&](const std::vector<int>& counts) {
    Rational term = 1;
    for (size_t i = 0; i < counts.size(); ++i) term *= pow(values[i], counts[i]);
    total += term;
  });
  return total;
}

long count_tableaux(const Partition& lambda, size_t r) {
  if (lambda.size() > 10 || r > 4)
    throw ResourceError("tableau enumeration is limited to |lambda| <= 10 and at most 4 variables");
  long n = 0;
  enumerate_tableaux(lambda, r, [&](const std::vector<int>&) { ++n; });
  return n;
}

}  // namespace metasym
