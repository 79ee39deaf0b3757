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

#include <chrono>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace metasym::cli {

enum class Status { Pass, Fail, Error, Skipped };

std::string to_string(Status s);

struct CheckCase {
  std::string id;
  std::string inputs;
  std::string expected;
  std::string got;
  Status status = Status::Pass;
  double elapsed_ms = 0;
};

struct CheckReport {
  std::string suite;
  std::vector<CheckCase> cases;

  size_t count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0 && count(Status::Error) == 0; }
  void append(const CheckReport& other);

  /// Runs body, which returns (got, passed), and records it. Library errors
  /// become Status::Error with the message as got.
  void run(const std::string& id, const std::string& inputs, const std::string& expected,
           const std::function<std::pair<std::string, bool>()>& body);
  void skip(const std::string& id, const std::string& inputs, const std::string& reason);

  /// Deterministic JSON; timings only when requested.
  std::string to_json(bool with_timings = false) const;
  void print_table(std::ostream& out) const;
};

}  // namespace metasym::cli
