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

#include "cli.h"

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace sternbsd::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, Stern) {
  const CliRun r = run({"stern", "13"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "5\n");
  const auto doc = nlohmann::json::parse(run({"stern", "13", "--format", "json"}).out);
  EXPECT_EQ(doc["n"], 13);
  EXPECT_EQ(doc["stern"], 5);
}

TEST(CliTest, SternRejectsNegative) {
  const CliRun r = run({"stern", "-1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, EnumerateShortBsd) {
  const CliRun r = run({"enumerate", "short-bsd", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "10TT\n101\n11T\ncount: 3\n");
  EXPECT_EQ(run({"enumerate", "short-bsd", "8"}).out, "1000\ncount: 1\n");
  EXPECT_EQ(run({"enumerate", "short-bsd", "0"}).out, "count: 0\n");
  const auto doc = nlohmann::json::parse(
      run({"enumerate", "short-bsd", "5", "--format", "json"}).out);
  EXPECT_EQ(doc, nlohmann::json::parse(R"(["10TT","101","11T"])"));
  EXPECT_EQ(run({"enumerate", "short-bsd", "5", "--format", "csv"}).out,
            "representation\n10TT\n101\n11T\n");
}

TEST(CliTest, EnumerateFixedAndHyperbinary) {
  EXPECT_EQ(run({"enumerate", "fixed", "5", "3"}).out, "101\n11T\ncount: 2\n");
  EXPECT_EQ(run({"enumerate", "fixed", "5", "--i", "3"}).out,
            "101\n11T\ncount: 2\n");
  EXPECT_EQ(run({"enumerate", "hyperbinary", "4"}).out,
            "100\n12\n20\ncount: 3\n");
  EXPECT_EQ(run({"enumerate", "fixed", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"enumerate", "fixed", "9", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"enumerate", "hyperbinary", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"enumerate", "octal", "5"}).code, kExitUsage);
}

TEST(CliTest, CountMethodsAgree) {
  for (const char* method : {"closed-form", "recurrence", "enumerate", "all"}) {
    EXPECT_EQ(run({"count", "short-bsd", "5", "--method", method}).out, "3\n")
        << method;
    EXPECT_EQ(run({"count", "hyperbinary", "4", "--method", method}).out,
              "3\n")
        << method;
    EXPECT_EQ(
        run({"count", "fixed", "5", "--i", "3", "--method", method}).out,
        "2\n")
        << method;
  }
  EXPECT_EQ(run({"count", "short-bsd", "-5"}).out, "3\n");
  const auto doc = nlohmann::json::parse(
      run({"count", "short-bsd", "5", "--method", "all", "--format", "json"})
          .out);
  EXPECT_EQ(doc["count"], 3);
  EXPECT_EQ(doc["kind"], "short-bsd");
  EXPECT_EQ(run({"count", "short-bsd", "5", "--method", "guess"}).code,
            kExitUsage);
}

TEST(CliTest, CountClosedFormHandlesLargeInputs) {
  EXPECT_EQ(run({"count", "short-bsd", "1000000000000"}).code, kExitOk);
  EXPECT_EQ(run({"count", "hyperbinary", "9223372036854775807"}).code,
            kExitUsage);
}

TEST(CliTest, Map) {
  EXPECT_EQ(run({"map", "hb-to-bsd", "20"}).out, "11T\n");
  EXPECT_EQ(run({"map", "hb-to-bsd", "0"}).out, "1\n");
  EXPECT_EQ(run({"map", "bsd-to-hb", "101"}).out, "12\n");
  const CliRun bad = run({"map", "bsd-to-hb", "1T01"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("not short"), std::string::npos);
  EXPECT_EQ(run({"map", "bsd-to-hb", "abc"}).code, kExitUsage);
  EXPECT_EQ(run({"map", "sideways", "1"}).code, kExitUsage);
}

TEST(CliTest, Series) {
  EXPECT_EQ(run({"series", "lhs", "1"}).out, "1:1 2:1 3:1\n");
  EXPECT_EQ(run({"series", "rhs", "2"}).out, "1:1 2:1 3:2 4:1 5:2 6:1 7:1\n");
  const auto doc =
      nlohmann::json::parse(run({"series", "rhs", "1", "--format", "json"}).out);
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_EQ(doc[0]["exponent"], 1);
  EXPECT_EQ(doc[0]["coefficient"], 1);
  EXPECT_EQ(run({"series", "lhs", "21"}).code, kExitUsage);
  EXPECT_EQ(run({"series", "middle", "1"}).code, kExitUsage);
}

TEST(CliTest, TableSternColumn) {
  const CliRun r = run({"table", "--max", "13", "--columns", "stern",
                     "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "n,stern\n0,0\n1,1\n2,1\n3,2\n4,1\n5,3\n6,2\n7,3\n8,1\n9,4\n"
            "10,3\n11,5\n12,2\n13,5\n");
}

TEST(CliTest, TableColumnsAgree) {
  const auto doc =
      nlohmann::json::parse(run({"table", "--max", "64", "--format", "json"}).out);
  ASSERT_EQ(doc.size(), 65u);
  for (const auto& row : doc) {
    EXPECT_EQ(row["stern"], row["short_bsd"]) << row;
    EXPECT_EQ(row["stern"], row["hyperbinary_prev"]) << row;
  }
  EXPECT_EQ(doc[5]["widths"], nlohmann::json::parse("[3,4]"));
  EXPECT_EQ(doc[8]["widths"], nlohmann::json::parse("[4]"));
  EXPECT_EQ(run({"table", "--columns", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--max", "-1"}).code, kExitUsage);
}

TEST(CliTest, VerifyPassesAndReportsJson) {
  const CliRun r = run({"verify", "--check", "gf", "--max-M", "3", "--format",
                     "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["pass"], true);
  ASSERT_EQ(doc["checks"].size(), 1u);
  EXPECT_EQ(doc["checks"][0]["check"], "gf");
  EXPECT_EQ(doc["checks"][0]["range"], "0<=M<=3");
  EXPECT_TRUE(doc["checks"][0]["counterexample"].is_null());
}

TEST(CliTest, VerifyPlainAndCsv) {
  const CliRun plain = run({"verify", "--check", "monroe", "--max-i", "4"});
  EXPECT_EQ(plain.code, kExitOk);
  EXPECT_NE(plain.out.find("PASS monroe"), std::string::npos);
  const CliRun csv = run({"verify", "--check", "theorem1", "--check", "reznick",
                       "--max-n", "32", "--format", "csv"});
  EXPECT_EQ(csv.code, kExitOk);
  EXPECT_NE(csv.out.find("\ntheorem1,"), std::string::npos);
  EXPECT_NE(csv.out.find("\nreznick,"), std::string::npos);
}

TEST(CliTest, VerifyRejectsBadArguments) {
  EXPECT_EQ(run({"verify", "--check", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--check", "monroe", "--max-i", "40"}).code,
            kExitUsage);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"stern"}).code, kExitUsage);
  EXPECT_EQ(run({"stern", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"stern", "5", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace sternbsd::cli
