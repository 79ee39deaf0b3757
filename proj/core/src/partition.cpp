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

#include "metasym/partition.hpp"

#include <numeric>

#include "metasym/errors.hpp"

namespace metasym {

bool is_dominant(const std::vector<long>& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i > 0 && v[i] > v[i - 1]) return false;
  }
  return true;
}

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  if (!is_dominant(parts_)) throw DomainError("partition parts must be nonnegative and weakly decreasing");
}

size_t Partition::length() const {
  size_t n = 0;
  for (long x : parts_)
    if (x > 0) ++n;
  return n;
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

bool Partition::is_even() const {
  for (long x : parts_)
    if (x % 2 != 0) return false;
  return true;
}

std::vector<long> Partition::padded(size_t r) const {
  if (length() > r) throw DomainError("partition " + to_string() + " has more than " + std::to_string(r) + " parts");
  std::vector<long> out(r, 0);
  for (size_t i = 0; i < std::min(r, parts_.size()); ++i) out[i] = parts_[i];
  return out;
}

bool operator==(const Partition& a, const Partition& b) {
  size_t n = std::max(a.parts_.size(), b.parts_.size());
  return a.padded(n) == b.padded(n);
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

namespace {
void generate(long remaining, long max_part, size_t slots, std::vector<long>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (long part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    generate(remaining - part, part, slots - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(long n, size_t max_length) {
  if (n < 0) throw DomainError("cannot partition a negative number");
  std::vector<Partition> out;
  std::vector<long> cur;
  generate(n, n, max_length, cur, out);
  return out;
}

std::vector<Partition> even_partitions_of(long two_k, size_t max_length) {
  if (two_k % 2 != 0) return {};
  std::vector<Partition> out;
  for (const auto& mu : partitions_of(two_k / 2, max_length)) {
    std::vector<long> parts = mu.parts();
    for (auto& x : parts) x *= 2;
    out.emplace_back(std::move(parts));
  }
  return out;
}

}  // namespace metasym
