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

#include "metasym/local_arith.hpp"
#include "metasym/structured_element.hpp"

namespace metasym {

/// x(m): lower-left entry if nonzero, else lower-right.
Rational kubota_x(const Matrix& m);

/// (x(gh)/x(g), x(gh)/x(h))_v on SL2. PreconditionError unless det g = det h = 1.
Sign kubota_sl2(const Matrix& g, const Matrix& h, const LocalPlace& v);

/// (x(g)/x(gh), det(g) x(h)/x(gh))_v on GL2; restricts to kubota_sl2 on SL2
/// and to (a_1, d_2)_v on diagonal pairs.
Sign kubota_gl2(const Matrix& g, const Matrix& h, const LocalPlace& v);

/// sigma_r(g, h) on the supported classes: unipotent on either side gives
/// +1; otherwise the block rule over the common 1x1 / 2x2 refinement,
/// prod sigma(g_i, h_i) * prod_{i<j} (det g_i, det h_j)_v. Odd primes and
/// the real place only; UnsupportedDomainError elsewhere or for
/// non-aligned block structures.
Sign sigma_eval(const StructuredElement& g, const StructuredElement& h, const LocalPlace& v);

/// The same formula without the place restriction. Used at p = 2 for the
/// product over all places, where only Hilbert symbols enter.
Sign sigma_formula(const StructuredElement& g, const StructuredElement& h, const LocalPlace& v);

/// prod of (t_i, h_i)_v over i = 1, 3, ..., skipping an unpaired last entry,
/// for t, h in T^e; PreconditionError otherwise.
Sign sigma_torus_even_reduced(const StructuredElement& t, const StructuredElement& h, const LocalPlace& v);

/// Product of sigma over the real place and every prime dividing 2 or an
/// entry of g, h or gh.
Sign global_sigma_product(const StructuredElement& g, const StructuredElement& h);

/// sigma(g,h) sigma(gh,k) == sigma(g,hk) sigma(h,k).
bool cocycle_identity_check(const StructuredElement& g, const StructuredElement& h,
                            const StructuredElement& k, const LocalPlace& v);

/// tau_P(m, h) = prod_i tau_{r_i}(m_i, h_i) * prod_{i<j} (det m_i, det h_j)_v
/// with the declared blocks of m and h; both must have the same block sizes.
Sign tau_p(const StructuredElement& m, const StructuredElement& h, const LocalPlace& v);

/// e_i(g): g in slot i of a block-diagonal element of the given type,
/// identity in the other slots.
StructuredElement embed_block(const std::vector<int>& sizes, int slot, const StructuredElement& g);

/// tau_P(e_i(g), e_j(h)) == tau_P(e_j(h), e_i(g)), with no determinant assumption.
bool block_commutation_holds(const std::vector<int>& sizes, int i, int j, const StructuredElement& g,
                             const StructuredElement& h, const LocalPlace& v);

/// Commutation as above together with multiplicativity of tau_P on the
/// square-determinant block subgroup. PreconditionError unless det g and
/// det h are squares at v.
bool block_lemmas_check(const std::vector<int>& sizes, int i, int j, const StructuredElement& g,
                        const StructuredElement& h, const LocalPlace& v);

/// (g, xi) in the double cover.
struct CoverElement {
  StructuredElement element;
  Sign xi;
};

CoverElement cover_multiply(const CoverElement& a, const CoverElement& b, const LocalPlace& v);

}  // namespace metasym
