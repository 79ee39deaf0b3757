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

#include "metasym_cli/satake_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "metasym/errors.hpp"
#include "metasym/local_arith.hpp"

namespace metasym::cli {

namespace {

using nlohmann::json;

std::string where(size_t index, const std::string& field) {
  return "entry " + std::to_string(index) + ", field '" + field + "'";
}

Rational value_of(const json& v, size_t index, const std::string& field) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number()) return parse_rational(v.dump());
  } catch (const DataError& e) {
    throw DataError(where(index, field) + ": " + e.what());
  }
  throw DataError(where(index, field) + ": expected a number or a string");
}

}  // namespace

std::vector<SatakeEntry> parse_satake(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1;
    for (size_t i = 0; i < std::min(e.byte, text.size()); ++i)
      if (text[i] == '\n') ++line;
    throw DataError("line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_array()) throw DataError("top level must be an array of entries");
  std::vector<SatakeEntry> out;
  std::set<long> seen;
  for (size_t i = 0; i < doc.size(); ++i) {
    const json& e = doc[i];
    if (!e.is_object()) throw DataError("entry " + std::to_string(i) + ": expected an object");
    if (!e.contains("p") || !e["p"].is_number_integer()) throw DataError(where(i, "p") + ": missing or not an integer");
    long p = e["p"].get<long>();
    if (!is_prime(p)) throw DataError(where(i, "p") + ": " + std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) throw DataError(where(i, "p") + ": duplicate prime " + std::to_string(p));
    if (!e.contains("alphas") || !e["alphas"].is_array() || e["alphas"].empty())
      throw DataError(where(i, "alphas") + ": expected a nonempty array");
    std::vector<Rational> alphas;
    for (size_t k = 0; k < e["alphas"].size(); ++k) {
      std::string field = "alphas[" + std::to_string(k) + "]";
      Rational a = value_of(e["alphas"][k], i, field);
      if (a == 0) throw DataError(where(i, field) + ": Satake parameters must be nonzero");
      alphas.push_back(a);
    }
    std::optional<Rational> chi = Rational(1);
    if (e.contains("chi")) {
      if (e["chi"].is_string() && e["chi"].get<std::string>() == "ramified") {
        chi.reset();
      } else {
        chi = value_of(e["chi"], i, "chi");
        if (*chi == 0) throw DataError(where(i, "chi") + ": chi(varpi) must be nonzero");
      }
    }
    long q = p;
    if (e.contains("q")) {
      if (!e["q"].is_number_integer() || e["q"].get<long>() < 2) throw DataError(where(i, "q") + ": expected an integer >= 2");
      q = e["q"].get<long>();
    }
    out.push_back({p, SatakeData(std::move(alphas), q, chi)});
  }
  return out;
}

std::vector<SatakeEntry> ingest_satake(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_satake(buf.str());
}

}  // namespace metasym::cli
