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

#include "metasym/cocycle.hpp"

#include <set>

#include "metasym/errors.hpp"

namespace metasym {

Rational kubota_x(const Matrix& m) { return m[1][0] != 0 ? m[1][0] : m[1][1]; }

Sign kubota_sl2(const Matrix& g, const Matrix& h, const LocalPlace& v) {
  if (determinant(g) != 1 || determinant(h) != 1)
    throw PreconditionError("Kubota SL2 cocycle needs determinant-one arguments");
  Rational x = kubota_x(matmul(g, h));
  return hilbert(x / kubota_x(g), x / kubota_x(h), v);
}

Sign kubota_gl2(const Matrix& g, const Matrix& h, const LocalPlace& v) {
  Rational x = kubota_x(matmul(g, h));
  return hilbert(kubota_x(g) / x, determinant(g) * kubota_x(h) / x, v);
}

Sign sigma_formula(const StructuredElement& g, const StructuredElement& h, const LocalPlace& v) {
  if (g.rank() != h.rank()) throw DomainError("rank mismatch");
  if (g.is_unipotent() || h.is_unipotent()) return Sign::plus();
  auto segments = common_segments(g, h);
  Sign s = Sign::plus();
  for (const auto& seg : segments)
    if (seg.g.size() == 2) s *= kubota_gl2(seg.g, seg.h, v);
  std::vector<Rational> dg, dh;
  for (const auto& seg : segments) {
    dg.push_back(determinant(seg.g));
    dh.push_back(determinant(seg.h));
  }
  // prod_{i<j} (dg_i, dh_j) = prod_j (prod_{i<j} dg_i, dh_j)
  Rational prefix = 1;
  for (size_t j = 0; j < segments.size(); ++j) {
    if (j > 0) s *= hilbert(prefix, dh[j], v);
    prefix *= dg[j];
  }
  return s;
}

namespace {
void require_supported_place(const LocalPlace& v) {
  if (v.is_finite() && !v.is_odd_finite())
    throw UnsupportedDomainError("cocycles are evaluated only at odd primes and the real place");
}
}  // namespace

Sign sigma_eval(const StructuredElement& g, const StructuredElement& h, const LocalPlace& v) {
  require_supported_place(v);
  return sigma_formula(g, h, v);
}

Sign sigma_torus_even_reduced(const StructuredElement& t, const StructuredElement& h, const LocalPlace& v) {
  require_supported_place(v);
  if (t.rank() != h.rank()) throw DomainError("rank mismatch");
  if (!t.in_even_torus(v) || !h.in_even_torus(v))
    throw PreconditionError("arguments must lie in the even torus T^e");
  auto a = t.diagonal();
  auto b = h.diagonal();
  Sign s = Sign::plus();
  for (size_t i = 0; i + 1 < a.size(); i += 2) s *= hilbert(a[i], b[i], v);
  return s;
}

Sign global_sigma_product(const StructuredElement& g, const StructuredElement& h) {
  std::vector<Rational> values;
  for (const auto* m : {&g, &h}) {
    for (const auto& row : m->matrix())
      for (const auto& x : row)
        if (x != 0) values.push_back(x);
  }
  values.push_back(g.det());
  values.push_back(h.det());
  if (!g.is_unipotent() && !h.is_unipotent()) {
    for (const auto& row : (g * h).matrix())
      for (const auto& x : row)
        if (x != 0) values.push_back(x);
  }
  Sign s = sigma_formula(g, h, LocalPlace::real());
  for (long p : relevant_primes(values)) s *= sigma_formula(g, h, LocalPlace::finite(p));
  return s;
}

bool cocycle_identity_check(const StructuredElement& g, const StructuredElement& h, const StructuredElement& k,
                            const LocalPlace& v) {
  return sigma_eval(g, h, v) * sigma_eval(g * h, k, v) == sigma_eval(g, h * k, v) * sigma_eval(h, k, v);
}

Sign tau_p(const StructuredElement& m, const StructuredElement& h, const LocalPlace& v) {
  require_supported_place(v);
  if (m.is_unipotent() || h.is_unipotent()) return Sign::plus();
  if (m.block_sizes() != h.block_sizes()) throw UnsupportedDomainError("tau_P needs matching block types");
  Sign s = Sign::plus();
  Rational prefix = 1;
  for (size_t i = 0; i < m.blocks().size(); ++i) {
    const Block& a = m.blocks()[i];
    const Block& b = h.blocks()[i];
    s *= sigma_formula(StructuredElement::from_blocks({a}), StructuredElement::from_blocks({b}), v);
    if (i > 0) s *= hilbert(prefix, b.det(), v);
    prefix *= a.det();
  }
  return s;
}

StructuredElement embed_block(const std::vector<int>& sizes, int slot, const StructuredElement& g) {
  if (slot < 0 || static_cast<size_t>(slot) >= sizes.size()) throw DomainError("block slot out of range");
  if (g.rank() != sizes[static_cast<size_t>(slot)]) throw DomainError("block size does not match slot");
  if (g.is_unipotent()) throw UnsupportedDomainError("unipotent blocks are not supported");
  std::vector<Block> blocks;
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (static_cast<int>(i) == slot) {
      // keep g as one block so the block type is preserved
      if (g.blocks().size() == 1) {
        blocks.push_back(g.blocks()[0]);
      } else {
        if (!g.is_diagonal()) throw UnsupportedDomainError("composite non-diagonal blocks are not supported");
        blocks.push_back(Block::torus(g.diagonal()));
      }
    } else {
      blocks.push_back(Block::scalar(1, sizes[i]));
    }
  }
  return StructuredElement::from_blocks(std::move(blocks));
}

bool block_commutation_holds(const std::vector<int>& sizes, int i, int j, const StructuredElement& g,
                             const StructuredElement& h, const LocalPlace& v) {
  if (i == j) throw DomainError("block lemmas need distinct slots");
  auto ei = embed_block(sizes, i, g);
  auto ej = embed_block(sizes, j, h);
  return tau_p(ei, ej, v) == tau_p(ej, ei, v);
}

bool block_lemmas_check(const std::vector<int>& sizes, int i, int j, const StructuredElement& g,
                        const StructuredElement& h, const LocalPlace& v) {
  if (!g.has_square_det(v) || !h.has_square_det(v))
    throw PreconditionError("block determinants must be squares at the place");
  if (!block_commutation_holds(sizes, i, j, g, h, v)) return false;
  // On the square-determinant subgroup the cross terms vanish, so tau_P of
  // the combined element is the product of the block cocycles.
  std::vector<Block> blocks;
  for (size_t k = 0; k < sizes.size(); ++k) {
    if (static_cast<int>(k) == i) blocks.push_back(embed_block(sizes, i, g).blocks()[k]);
    else if (static_cast<int>(k) == j) blocks.push_back(embed_block(sizes, j, h).blocks()[k]);
    else blocks.push_back(Block::scalar(1, sizes[k]));
  }
  auto combined = StructuredElement::from_blocks(std::move(blocks));
  Sign lhs = tau_p(combined, combined, v);
  Sign rhs = sigma_formula(g, g, v) * sigma_formula(h, h, v);
  return lhs == rhs;
}

CoverElement cover_multiply(const CoverElement& a, const CoverElement& b, const LocalPlace& v) {
  return {a.element * b.element, sigma_eval(a.element, b.element, v) * a.xi * b.xi};
}

}  // namespace metasym
