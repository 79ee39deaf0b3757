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

#include "metasym/structured_element.hpp"

#include <sstream>

#include "metasym/errors.hpp"

namespace metasym {

Matrix identity_matrix(int n) {
  Matrix m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  for (size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  size_t n = a.size();
  Matrix c(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Rational determinant(Matrix m) {
  size_t n = m.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

Block Block::torus(std::vector<Rational> entries) {
  if (entries.empty()) throw DomainError("torus block needs at least one entry");
  for (const auto& e : entries)
    if (e == 0) throw DomainError("torus entries must be nonzero");
  Block b;
  b.kind = Kind::Torus;
  b.size = static_cast<int>(entries.size());
  b.data = std::move(entries);
  return b;
}

Block Block::scalar(const Rational& a, int m) {
  if (a == 0) throw DomainError("central scalar must be nonzero");
  if (m < 1) throw DomainError("block size must be positive");
  return Block{Kind::Scalar, m, {a}};
}

Block Block::two_by_two(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Rational det = a * d - b * c;
  if (det == 0) throw DomainError("2x2 block is singular");
  return Block{det == 1 ? Kind::SL2 : Kind::GL2, 2, {a, b, c, d}};
}

Rational Block::det() const {
  switch (kind) {
    case Kind::Torus: {
      Rational d = 1;
      for (const auto& e : data) d *= e;
      return d;
    }
    case Kind::Scalar: return pow(data[0], size);
    default: return data[0] * data[3] - data[1] * data[2];
  }
}

bool Block::is_diagonal() const {
  if (kind == Kind::Torus || kind == Kind::Scalar) return true;
  return data[1] == 0 && data[2] == 0;
}

std::vector<Rational> Block::diagonal() const {
  switch (kind) {
    case Kind::Torus: return data;
    case Kind::Scalar: return std::vector<Rational>(static_cast<size_t>(size), data[0]);
    default:
      if (!is_diagonal()) throw DomainError("block is not diagonal");
      return {data[0], data[3]};
  }
}

Matrix Block::matrix() const {
  if (kind == Kind::SL2 || kind == Kind::GL2) return {{data[0], data[1]}, {data[2], data[3]}};
  Matrix m = identity_matrix(size);
  auto d = diagonal();
  for (size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

std::string Block::to_string() const {
  auto join = [](const std::vector<Rational>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + metasym::to_string(xs[i]);
    return s;
  };
  switch (kind) {
    case Kind::Torus: return "torus(" + join(data) + ")";
    case Kind::Scalar: return "central(" + metasym::to_string(data[0]) + "," + std::to_string(size) + ")";
    case Kind::SL2: return "sl2(" + join(data) + ")";
    default: return "gl2(" + join(data) + ")";
  }
}

StructuredElement StructuredElement::identity(int r) { return central(1, r); }

StructuredElement StructuredElement::torus(std::vector<Rational> entries) {
  return from_blocks({Block::torus(std::move(entries))});
}

StructuredElement StructuredElement::central(const Rational& a, int r) {
  return from_blocks({Block::scalar(a, r)});
}

StructuredElement StructuredElement::sl2(const Rational& a, const Rational& b, const Rational& c,
                                         const Rational& d) {
  if (a * d - b * c != 1) throw DomainError("sl2 element must have determinant 1");
  return from_blocks({Block::two_by_two(a, b, c, d)});
}

StructuredElement StructuredElement::gl2(const Rational& a, const Rational& b, const Rational& c,
                                         const Rational& d) {
  return from_blocks({Block::two_by_two(a, b, c, d)});
}

StructuredElement StructuredElement::unipotent(Matrix n) {
  size_t r = n.size();
  if (r == 0) throw DomainError("empty matrix");
  for (size_t i = 0; i < r; ++i) {
    if (n[i].size() != r) throw DomainError("unipotent matrix must be square");
    for (size_t j = 0; j <= i; ++j)
      if (n[i][j] != (i == j ? 1 : 0))
        throw DomainError("unipotent element must be upper triangular with unit diagonal");
  }
  StructuredElement e;
  e.rank_ = static_cast<int>(r);
  e.unipotent_ = std::move(n);
  return e;
}

StructuredElement StructuredElement::from_blocks(std::vector<Block> blocks) {
  if (blocks.empty()) throw DomainError("element needs at least one block");
  StructuredElement e;
  for (const auto& b : blocks) e.rank_ += b.size;
  e.blocks_ = std::move(blocks);
  return e;
}

StructuredElement StructuredElement::block_diagonal(const std::vector<StructuredElement>& parts) {
  std::vector<Block> blocks;
  for (const auto& p : parts) {
    if (p.is_unipotent()) throw UnsupportedDomainError("unipotent parts cannot be block-concatenated");
    blocks.insert(blocks.end(), p.blocks_.begin(), p.blocks_.end());
  }
  return from_blocks(std::move(blocks));
}

const Matrix& StructuredElement::unipotent_matrix() const {
  if (!unipotent_) throw DomainError("element is not unipotent");
  return *unipotent_;
}

bool StructuredElement::is_diagonal() const {
  if (unipotent_) return *unipotent_ == identity_matrix(rank_);
  for (const auto& b : blocks_)
    if (!b.is_diagonal()) return false;
  return true;
}

bool StructuredElement::is_central() const {
  if (!is_diagonal()) return false;
  auto d = diagonal();
  for (const auto& x : d)
    if (x != d[0]) return false;
  return true;
}

std::vector<Rational> StructuredElement::diagonal() const {
  if (unipotent_) {
    if (!is_diagonal()) throw DomainError("element is not diagonal");
    return std::vector<Rational>(static_cast<size_t>(rank_), Rational(1));
  }
  std::vector<Rational> out;
  for (const auto& b : blocks_) {
    auto d = b.diagonal();
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

std::vector<int> StructuredElement::block_sizes() const {
  if (unipotent_) return {rank_};
  std::vector<int> out;
  for (const auto& b : blocks_) out.push_back(b.size);
  return out;
}

Matrix StructuredElement::matrix() const {
  if (unipotent_) return *unipotent_;
  Matrix m = identity_matrix(rank_);
  size_t off = 0;
  for (const auto& b : blocks_) {
    Matrix bm = b.matrix();
    for (size_t i = 0; i < bm.size(); ++i)
      for (size_t j = 0; j < bm.size(); ++j) m[off + i][off + j] = bm[i][j];
    off += bm.size();
  }
  return m;
}

Rational StructuredElement::det() const {
  if (unipotent_) return 1;
  Rational d = 1;
  for (const auto& b : blocks_) d *= b.det();
  return d;
}

bool StructuredElement::in_even_torus(const LocalPlace& v) const {
  if (!is_diagonal()) return false;
  auto t = diagonal();
  for (size_t i = 0; i + 1 < t.size(); i += 2)
    if (!same_square_class(t[i], t[i + 1], v)) return false;
  return true;
}

bool StructuredElement::has_square_det(const LocalPlace& v) const { return same_square_class(det(), 1, v); }

namespace {

// Splits an element into per-position descriptors: for each starting index,
// either a diagonal entry or a non-diagonal 2x2 block.
struct Position {
  bool two_by_two = false;  // start of a non-diagonal 2x2 block
  bool second_half = false;
  Rational entry;           // diagonal entry when !two_by_two && !second_half
  Matrix block;
};

std::vector<Position> positions(const StructuredElement& e) {
  std::vector<Position> out;
  if (e.is_unipotent()) throw UnsupportedDomainError("unipotent elements have no block segments");
  for (const auto& b : e.blocks()) {
    if (b.is_diagonal()) {
      for (const auto& x : b.diagonal()) out.push_back({false, false, x, {}});
    } else {
      out.push_back({true, false, 0, b.matrix()});
      out.push_back({false, true, 0, {}});
    }
  }
  return out;
}

Matrix diag2(const Rational& a, const Rational& d) { return {{a, Rational(0)}, {Rational(0), d}}; }

}  // namespace

std::vector<SegmentPair> common_segments(const StructuredElement& g, const StructuredElement& h) {
  if (g.rank() != h.rank()) throw DomainError("rank mismatch");
  auto pg = positions(g);
  auto ph = positions(h);
  std::vector<SegmentPair> out;
  for (size_t i = 0; i < pg.size();) {
    bool wide = pg[i].two_by_two || ph[i].two_by_two;
    if (!wide) {
      if (pg[i].second_half || ph[i].second_half)
        throw UnsupportedDomainError("block structures do not align");
      out.push_back({{{pg[i].entry}}, {{ph[i].entry}}});
      ++i;
      continue;
    }
    auto side = [&](const std::vector<Position>& p) -> Matrix {
      if (p[i].two_by_two) return p[i].block;
      if (p[i].second_half || p[i + 1].two_by_two || p[i + 1].second_half)
        throw UnsupportedDomainError("block structures do not align");
      return diag2(p[i].entry, p[i + 1].entry);
    };
    out.push_back({side(pg), side(ph)});
    i += 2;
  }
  return out;
}

StructuredElement StructuredElement::operator*(const StructuredElement& o) const {
  if (rank_ != o.rank_) throw DomainError("rank mismatch");
  if (unipotent_ || o.unipotent_) {
    if (unipotent_ && o.unipotent_) return unipotent(matmul(*unipotent_, *o.unipotent_));
    const auto& other = unipotent_ ? o : *this;
    if (other.is_central()) {
      // central elements commute with everything; keep the unipotent class only for the identity
      if (other.diagonal()[0] == 1) return unipotent_ ? *this : o;
    }
    throw UnsupportedDomainError("products of unipotent and non-unipotent elements are not modelled");
  }
  if (blocks_.size() == 1 && o.blocks_.size() == 1 && blocks_[0].kind == Block::Kind::Scalar &&
      o.blocks_[0].kind == Block::Kind::Scalar)
    return central(blocks_[0].data[0] * o.blocks_[0].data[0], rank_);
  std::vector<Block> blocks;
  std::vector<Rational> pending;
  auto flush = [&] {
    if (!pending.empty()) blocks.push_back(Block::torus(std::move(pending)));
    pending.clear();
  };
  for (const auto& seg : common_segments(*this, o)) {
    Matrix m = matmul(seg.g, seg.h);
    if (m.size() == 1) {
      pending.push_back(m[0][0]);
    } else {
      flush();
      blocks.push_back(Block::two_by_two(m[0][0], m[0][1], m[1][0], m[1][1]));
    }
  }
  flush();
  return from_blocks(std::move(blocks));
}

StructuredElement StructuredElement::inverse() const {
  if (unipotent_) {
    // (I + M)^{-1} by back substitution
    size_t r = static_cast<size_t>(rank_);
    Matrix inv = identity_matrix(rank_);
    const Matrix& n = *unipotent_;
    for (size_t j = 0; j < r; ++j)
      for (size_t i = j; i-- > 0;) {
        Rational s = 0;
        for (size_t k = i + 1; k <= j; ++k) s += n[i][k] * inv[k][j];
        inv[i][j] = -s;
      }
    return unipotent(inv);
  }
  std::vector<Block> blocks;
  for (const auto& b : blocks_) {
    switch (b.kind) {
      case Block::Kind::Torus: {
        std::vector<Rational> d;
        for (const auto& x : b.data) d.push_back(1 / x);
        blocks.push_back(Block::torus(d));
        break;
      }
      case Block::Kind::Scalar: blocks.push_back(Block::scalar(1 / b.data[0], b.size)); break;
      default: {
        Rational det = b.det();
        blocks.push_back(Block::two_by_two(b.data[3] / det, -b.data[1] / det, -b.data[2] / det, b.data[0] / det));
      }
    }
  }
  return from_blocks(std::move(blocks));
}

std::string StructuredElement::to_string() const {
  if (unipotent_) {
    std::string s = "unip(" + std::to_string(rank_);
    for (size_t i = 0; i < unipotent_->size(); ++i)
      for (size_t j = i + 1; j < unipotent_->size(); ++j)
        if ((*unipotent_)[i][j] != 0)
          s += "; " + std::to_string(i + 1) + "," + std::to_string(j + 1) + ":" + metasym::to_string((*unipotent_)[i][j]);
    return s + ")";
  }
  if (blocks_.size() == 1) return blocks_[0].to_string();
  std::string s = "blocks[";
  for (size_t i = 0; i < blocks_.size(); ++i) s += (i ? ", " : "") + blocks_[i].to_string();
  return s + "]";
}

}  // namespace metasym
