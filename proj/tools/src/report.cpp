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

#include "metasym_cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "json.hpp"

#include "metasym/errors.hpp"

namespace metasym::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

size_t CheckReport::count(Status s) const {
  return static_cast<size_t>(std::count_if(cases.begin(), cases.end(), [s](const CheckCase& c) { return c.status == s; }));
}

void CheckReport::append(const CheckReport& other) { cases.insert(cases.end(), other.cases.begin(), other.cases.end()); }

void CheckReport::run(const std::string& id, const std::string& inputs, const std::string& expected,
                      const std::function<std::pair<std::string, bool>()>& body) {
  CheckCase c{suite + "/" + id, inputs, expected, "", Status::Pass, 0};
  auto start = std::chrono::steady_clock::now();
  try {
    auto [got, passed] = body();
    c.got = got;
    c.status = passed ? Status::Pass : Status::Fail;
  } catch (const Error& e) {
    c.got = e.what();
    c.status = Status::Error;
  }
  c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  cases.push_back(std::move(c));
}

void CheckReport::skip(const std::string& id, const std::string& inputs, const std::string& reason) {
  cases.push_back({suite + "/" + id, inputs, "", reason, Status::Skipped, 0});
}

std::string CheckReport::to_json(bool with_timings) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json jc{{"id", c.id}, {"inputs", c.inputs}, {"expected", c.expected}, {"got", c.got},
                              {"status", to_string(c.status)}};
    if (with_timings) jc["elapsed_ms"] = c.elapsed_ms;
    j["cases"].push_back(jc);
  }
  j["summary"] = {{"total", cases.size()},
                  {"pass", count(Status::Pass)},
                  {"fail", count(Status::Fail)},
                  {"error", count(Status::Error)},
                  {"skipped", count(Status::Skipped)}};
  return j.dump(2);
}

void CheckReport::print_table(std::ostream& out) const {
  size_t width = 4;
  for (const auto& c : cases) width = std::max(width, c.id.size());
  for (const auto& c : cases) {
    out << std::left << std::setw(8) << to_string(c.status) << std::setw(static_cast<int>(width) + 2) << c.id
        << std::right << std::setw(9) << std::fixed << std::setprecision(1) << c.elapsed_ms << " ms  " << c.got << "\n";
  }
  out << suite << ": " << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, " << count(Status::Error)
      << " error, " << count(Status::Skipped) << " skipped\n";
}

}  // namespace metasym::cli
