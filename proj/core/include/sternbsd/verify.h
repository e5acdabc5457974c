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

#ifndef STERNBSD_VERIFY_H_
#define STERNBSD_VERIFY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sternbsd/count_value.h"

namespace sternbsd {

// The Stern evaluator used by the checks. Replaceable so tests can inject a
// faulty implementation and confirm the checks catch it.
using SternFn = std::function<CountValue(std::int64_t)>;

struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;

  friend bool operator==(const Counterexample&,
                         const Counterexample&) = default;
};

struct CheckResult {
  std::string check;
  std::string range;
  bool pass = true;
  std::optional<Counterexample> counterexample;  // set iff !pass
  std::uint64_t cases = 0;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  // True iff every check passed. An empty report passes.
  bool pass() const;
  const CheckResult* find(std::string_view check) const;
};

// Check names, as accepted by VerifyConfig::checks and the CLI.
inline constexpr std::string_view kTheorem1 = "theorem1";
inline constexpr std::string_view kTheorem2 = "theorem2";
inline constexpr std::string_view kTheorem3 = "theorem3";
inline constexpr std::string_view kMonroe = "monroe";
inline constexpr std::string_view kStolarskyDilcher = "stolarsky";
inline constexpr std::string_view kGfIdentity = "gf";
inline constexpr std::string_view kReznick = "reznick";

const std::vector<std::string_view>& all_check_names();

// Largest widths the exhaustive fixed-width and series checks accept.
inline constexpr int kMaxMonroeWidth = 12;
inline constexpr int kMaxGfOrder = 12;

struct VerifyConfig {
  std::int64_t theorem1_max_n = 4096;
  std::int64_t theorem2_max_n = 4096;
  std::int64_t theorem3_max_n = 1024;
  std::int64_t reznick_max_n = 4096;
  int monroe_max_i = 10;
  int stolarsky_max_i = 8;
  int stolarsky_max_j = 8;
  int gf_max_M = 8;

  // Checks to run, in this order. Empty means all of them.
  std::vector<std::string> checks;

  // Stop after the first failing check instead of running the rest.
  bool fail_fast = false;
  // Run the selected checks concurrently. Report order is unchanged.
  bool parallel = false;

  SternFn stern;  // defaults to sternbsd::stern when empty
};

// Each check walks its range in increasing order and stops at the first
// failure, so the recorded counterexample is the smallest failing input.
// Precondition violations on the range arguments throw DomainError.

// |short BSD(n)| = s(n) = recurrence(n) for 0 <= n <= max_n.
CheckResult check_theorem1(std::int64_t max_n, const SternFn& stern = {});

// |short BSD(n)| = |hyperbinary(n - 1)| for 0 <= n <= max_n (taking zero
// hyperbinary representations of -1), plus: the bijection maps
// hyperbinary(n - 1) onto short BSD(n) and both round trips are identities.
CheckResult check_theorem2(std::int64_t max_n);

// |fixed(n, i+1)| - |fixed(n, i)| = |short BSD(n)| with i = binary_width(n),
// and every short representation of n has width i or i + 1, 1 <= n <= max_n.
CheckResult check_theorem3(std::int64_t max_n);

// |fixed(n, i)| = s(2^i - n) for 1 <= i <= max_i, 0 < n < 2^i.
// max_i must be in [1, kMaxMonroeWidth].
CheckResult check_monroe(int max_i, const SternFn& stern = {});

// s(2^(i+j) - n) = s(2^i - n) + s(n) s(2^j - 1) for 1 <= i <= max_i,
// 1 <= j <= max_j, 0 <= n <= 2^i.
CheckResult check_stolarsky_dilcher(int max_i, int max_j,
                                    const SternFn& stern = {});

// For 0 <= M <= max_M: lhs_finite(M) = rhs_finite(M); coefficients of q^n,
// 1 <= n <= 2^M, match the hyperbinary and short-BSD enumeration counts; and
// raising M to M + 1 changes neither side below q^(2^M + 1).
// max_M must be in [0, kMaxGfOrder].
CheckResult check_gf_identity(int max_M);

// |hyperbinary(n)| = s(n + 1) for 0 <= n <= max_n.
CheckResult check_reznick(std::int64_t max_n, const SternFn& stern = {});

// Throws DomainError on an unknown check name.
VerificationReport run_all(const VerifyConfig& config = {});

std::string report_to_json(const VerificationReport& report, int indent = 2);
std::string report_to_text(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

}  // namespace sternbsd

#endif  // STERNBSD_VERIFY_H_
