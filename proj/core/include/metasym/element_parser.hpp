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

#include <string_view>

#include "metasym/structured_element.hpp"

namespace metasym {

/// Parses the element expression language:
///
///   element := atom | "blocks[" atom ("," atom)* "]"
///   atom    := "torus(" q ("," q)* ")" | "diag(" ... ")"
///            | "central(" q "," r ")" | "id(" r ")"
///            | "sl2(" q "," q "," q "," q ")" | "gl2(" ... ")"
///            | "unip(" r (";" i "," j ":" q)* ")"
///
/// q is a rational ("3", "-2/5", "0.25"); indices in unip are 1-based.
/// Throws DomainError with the offending position on malformed input.
StructuredElement parse_element(std::string_view text);

}  // namespace metasym
