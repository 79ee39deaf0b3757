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

#include <optional>
#include <string>
#include <vector>

#include "metasym/local_arith.hpp"
#include "metasym/rational.hpp"

namespace metasym {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(int n);
Matrix matmul(const Matrix& a, const Matrix& b);
Rational determinant(Matrix m);

/// One diagonal block of a structured element.
struct Block {
  enum class Kind { Torus, Scalar, SL2, GL2 };
  Kind kind = Kind::Torus;
  int size = 1;
  /// Torus: the diagonal entries; Scalar: {a}; SL2 / GL2: {a, b, c, d} row-major.
  std::vector<Rational> data;

  static Block torus(std::vector<Rational> entries);
  static Block scalar(const Rational& a, int m);
  /// SL2 when ad - bc == 1, GL2 otherwise.
  static Block two_by_two(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

  Rational det() const;
  bool is_diagonal() const;
  /// Only for diagonal blocks.
  std::vector<Rational> diagonal() const;
  Matrix matrix() const;
  std::string to_string() const;
};

/// An invertible rational matrix carrying the block structure it was built
/// with, or a unipotent upper triangular matrix.
class StructuredElement {
 public:
  static StructuredElement identity(int r);
  static StructuredElement torus(std::vector<Rational> entries);
  static StructuredElement central(const Rational& a, int r);
  static StructuredElement sl2(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
  static StructuredElement gl2(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
  static StructuredElement unipotent(Matrix n);
  /// Concatenates the blocks of each part (none may be unipotent).
  static StructuredElement block_diagonal(const std::vector<StructuredElement>& parts);
  static StructuredElement from_blocks(std::vector<Block> blocks);

  int rank() const { return rank_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  bool is_unipotent() const { return unipotent_.has_value(); }
  const Matrix& unipotent_matrix() const;
  /// Every block is diagonal (unipotent elements only if they are the identity).
  bool is_diagonal() const;
  /// A single Scalar block, or a diagonal with all entries equal.
  bool is_central() const;
  std::vector<Rational> diagonal() const;
  std::vector<int> block_sizes() const;

  Matrix matrix() const;
  Rational det() const;

  /// t_1/t_2, t_3/t_4, ... are squares at v.
  bool in_even_torus(const LocalPlace& v) const;
  /// det is a square at v.
  bool has_square_det(const LocalPlace& v) const;

  /// Product staying within the supported classes; UnsupportedDomainError otherwise.
  StructuredElement operator*(const StructuredElement& o) const;
  StructuredElement inverse() const;
  friend bool operator==(const StructuredElement& a, const StructuredElement& b) {
    return a.matrix() == b.matrix();
  }

  std::string to_string() const;

 private:
  StructuredElement() = default;
  int rank_ = 0;
  std::vector<Block> blocks_;
  std::optional<Matrix> unipotent_;
};

/// A common refinement of two block structures into 1x1 and 2x2 segments.
/// Diagonal blocks split freely; a non-diagonal 2x2 block on either side
/// forces a 2x2 segment, which the other side must fill with one block.
struct SegmentPair {
  Matrix g;
  Matrix h;
};
std::vector<SegmentPair> common_segments(const StructuredElement& g, const StructuredElement& h);

}  // namespace metasym
