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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "metasym_cli/report.hpp"

namespace metasym::cli {

/// Bad command line or unknown suite; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();

/// symbols, cocycles, weil, weilrep, symsq or all. UsageError otherwise.
CheckReport run_suite(const std::string& name, const SuiteConfig& config = {});

}  // namespace metasym::cli
