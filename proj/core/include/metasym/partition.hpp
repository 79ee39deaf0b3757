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

namespace metasym {

/// A weakly decreasing list of nonnegative integers; trailing zeros are
/// significant only through length().
class Partition {
 public:
  Partition() = default;
  /// DomainError unless parts are nonnegative and weakly decreasing.
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  long operator[](size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// Number of nonzero parts.
  size_t length() const;
  long size() const;
  bool is_even() const;
  /// Parts padded with zeros (or trimmed of zeros) to exactly r entries.
  std::vector<long> padded(size_t r) const;
  std::string to_string() const;

  /// Equality ignores trailing zeros.
  friend bool operator==(const Partition& a, const Partition& b);

 private:
  std::vector<long> parts_;
};

/// True iff v is weakly decreasing and nonnegative.
bool is_dominant(const std::vector<long>& v);

/// All partitions of n with at most max_length parts, in reverse
/// lexicographic order.
std::vector<Partition> partitions_of(long n, size_t max_length);

/// All partitions of 2k into even parts with at most max_length parts.
std::vector<Partition> even_partitions_of(long two_k, size_t max_length);

}  // namespace metasym
