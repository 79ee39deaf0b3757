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

#include <vector>

#include "metasym/partition.hpp"
#include "metasym/rational.hpp"

namespace metasym {

/// Complete homogeneous symmetric polynomial h_k at the values (h_0 = 1,
/// h_k = 0 for k < 0).
Rational complete_homogeneous(long k, const std::vector<Rational>& values);

/// s_lambda(values) by the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
/// DomainError if lambda has more nonzero parts than there are values.
Rational schur_jt(const Partition& lambda, const std::vector<Rational>& values);

/// s_lambda(values) as a sum over semistandard tableaux with entries
/// 1..r. ResourceError beyond |lambda| <= 10, r <= 4.
Rational schur_tableau_oracle(const Partition& lambda, const std::vector<Rational>& values);

/// Number of semistandard tableaux of shape lambda with entries 1..r.
long count_tableaux(const Partition& lambda, size_t r);

}  // namespace metasym
