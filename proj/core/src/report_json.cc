// Copyright 2026 The sternbsd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "sternbsd/verify.h"

namespace sternbsd {
namespace {

// Ranges and counterexamples may contain commas; quote those fields.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_json(const VerificationReport& report, int indent) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["check"] = c.check;
    entry["range"] = c.range;
    entry["pass"] = c.pass;
    if (c.counterexample) {
      entry["counterexample"] = {{"input", c.counterexample->input},
                                 {"expected", c.counterexample->expected},
                                 {"actual", c.counterexample->actual}};
    } else {
      entry["counterexample"] = nullptr;
    }
    entry["cases"] = c.cases;
    entry["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(entry));
  }
  nlohmann::ordered_json doc;
  doc["pass"] = report.pass();
  doc["checks"] = std::move(checks);
  return doc.dump(indent);
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  for (const auto& c : report.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.check << "  [" << c.range << "]  "
       << c.cases << " cases  " << c.elapsed_ms << " ms\n";
    if (c.counterexample) {
      os << "     counterexample: " << c.counterexample->input
         << "  expected " << c.counterexample->expected << "  actual "
         << c.counterexample->actual << "\n";
    }
  }
  os << (report.pass() ? "overall: PASS" : "overall: FAIL") << "\n";
  return os.str();
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "check,range,pass,cases,elapsed_ms,input,expected,actual\n";
  for (const auto& c : report.checks) {
    os << c.check << ',' << csv_field(c.range) << ',' << (c.pass ? "true" : "false")
       << ',' << c.cases << ',' << c.elapsed_ms << ',';
    if (c.counterexample) {
      os << csv_field(c.counterexample->input) << ','
         << csv_field(c.counterexample->expected) << ','
         << csv_field(c.counterexample->actual);
    } else {
      os << ",,";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace sternbsd
