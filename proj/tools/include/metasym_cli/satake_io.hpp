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
#include <string_view>
#include <vector>

#include "metasym/symsq.hpp"

namespace metasym::cli {

struct SatakeEntry {
  long p;
  SatakeData data;
};

/// A JSON array of {"p": prime, "alphas": [...], "chi": value | "ramified",
/// "q": optional residue size (default p)}. Values are integers, fractions
/// or decimals, as strings or numbers. DataError names the line or the
/// offending entry and field.
std::vector<SatakeEntry> parse_satake(std::string_view text);
std::vector<SatakeEntry> ingest_satake(const std::string& path);

}  // namespace metasym::cli
