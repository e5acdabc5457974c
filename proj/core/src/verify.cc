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

#include "sternbsd/verify.h"

#include <algorithm>
#include <chrono>
#include <future>
#include <optional>
#include <string>

#include "sternbsd/bijections.h"
#include "sternbsd/errors.h"
#include "sternbsd/representations.h"
#include "sternbsd/series.h"
#include "sternbsd/stern.h"

namespace sternbsd {
namespace {

using Clock = std::chrono::steady_clock;

// Accumulates one check's cases. The first call to fail() wins; callers stop
// iterating once failed() is true.
class CheckBuilder {
 public:
  CheckBuilder(std::string_view check, std::string range)
      : start_(Clock::now()) {
    result_.check = std::string(check);
    result_.range = std::move(range);
  }

  void pass_case() { ++result_.cases; }

  void fail(std::string input, std::string expected, std::string actual) {
    ++result_.cases;
    if (!result_.pass) return;
    result_.pass = false;
    result_.counterexample =
        Counterexample{std::move(input), std::move(expected), std::move(actual)};
  }

  // Records a pass or failure depending on `ok`. Returns ok.
  template <typename MakeCounterexample>
  bool expect(bool ok, MakeCounterexample make) {
    if (ok) {
      pass_case();
    } else {
      auto [input, expected, actual] = make();
      fail(std::move(input), std::move(expected), std::move(actual));
    }
    return ok;
  }

  bool failed() const { return !result_.pass; }

  CheckResult finish() {
    result_.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_)
            .count();
    return std::move(result_);
  }

 private:
  CheckResult result_;
  Clock::time_point start_;
};

SternFn resolve(const SternFn& stern) {
  if (stern) return stern;
  return [](std::int64_t n) { return sternbsd::stern(n); };
}

std::string n_input(std::int64_t n) { return "n=" + std::to_string(n); }

std::string join(const std::vector<SignedDigitString>& reps) {
  std::string out = "{";
  for (std::size_t k = 0; k < reps.size(); ++k) {
    if (k > 0) out += ",";
    out += format_bsd(reps[k]);
  }
  return out + "}";
}

void require_nonnegative(std::int64_t max_n, const char* check) {
  if (max_n < 0) {
    throw DomainError(std::string(check) + ": max_n must be nonnegative");
  }
}

// Bijection property for one n >= 1: hyperbinary(n - 1) maps onto
// short(n), and both compositions are identities.
bool check_bijection_at(std::int64_t n,
                        const std::vector<SignedDigitString>& shorts,
                        CheckBuilder& builder) {
  const auto hbs = enumerate_hyperbinary(n - 1);
  std::vector<SignedDigitString> image;
  image.reserve(hbs.size());
  for (const auto& h : hbs) {
    const auto b = hb_to_short_bsd(h);
    const auto back = short_bsd_to_hb(b);
    if (!builder.expect(back == h, [&] {
          return Counterexample{"n=" + std::to_string(n) + " h=" +
                                    format_hb(h),
                                "g(f(h))=" + format_hb(h),
                                "g(f(h))=" + format_hb(back)};
        })) {
      return false;
    }
    image.push_back(b);
  }
  std::sort(image.begin(), image.end());
  if (!builder.expect(image == shorts, [&] {
        return Counterexample{n_input(n), "f(HB(n-1))=" + join(shorts),
                              "f(HB(n-1))=" + join(image)};
      })) {
    return false;
  }
  for (const auto& b : shorts) {
    const auto back = hb_to_short_bsd(short_bsd_to_hb(b));
    if (!builder.expect(back == b, [&] {
          return Counterexample{
              "n=" + std::to_string(n) + " b=" + format_bsd(b),
              "f(g(b))=" + format_bsd(b), "f(g(b))=" + format_bsd(back)};
        })) {
      return false;
    }
  }
  return true;
}

CheckResult run_named(std::string_view name, const VerifyConfig& config) {
  if (name == kTheorem1) {
    return check_theorem1(config.theorem1_max_n, config.stern);
  }
  if (name == kTheorem2) return check_theorem2(config.theorem2_max_n);
  if (name == kTheorem3) return check_theorem3(config.theorem3_max_n);
  if (name == kMonroe) return check_monroe(config.monroe_max_i, config.stern);
  if (name == kStolarskyDilcher) {
    return check_stolarsky_dilcher(config.stolarsky_max_i,
                                   config.stolarsky_max_j, config.stern);
  }
  if (name == kGfIdentity) return check_gf_identity(config.gf_max_M);
  if (name == kReznick) return check_reznick(config.reznick_max_n, config.stern);
  throw DomainError("unknown check: " + std::string(name));
}

}  // namespace

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(std::string_view check) const {
  for (const auto& c : checks) {
    if (c.check == check) return &c;
  }
  return nullptr;
}

const std::vector<std::string_view>& all_check_names() {
  static const std::vector<std::string_view> names = {
      kTheorem1, kTheorem2,         kTheorem3,   kMonroe,
      kReznick,  kStolarskyDilcher, kGfIdentity,
  };
  return names;
}

CheckResult check_theorem1(std::int64_t max_n, const SternFn& stern) {
  require_nonnegative(max_n, "theorem1");
  const SternFn s = resolve(stern);
  CheckBuilder builder(kTheorem1, "0<=n<=" + std::to_string(max_n));
  for (std::int64_t n = 0; n <= max_n && !builder.failed(); ++n) {
    const CountValue expected = s(n);
    const CountValue enumerated{enumerate_short_bsd(n).size()};
    const CountValue recurrence = count_short_bsd_recurrence(n);
    builder.expect(enumerated == expected && recurrence == expected, [&] {
      return Counterexample{
          n_input(n), "s(n)=" + expected.to_string(),
          "enumerated=" + enumerated.to_string() +
              " recurrence=" + recurrence.to_string()};
    });
  }
  return builder.finish();
}

CheckResult check_theorem2(std::int64_t max_n) {
  require_nonnegative(max_n, "theorem2");
  CheckBuilder builder(kTheorem2, "0<=n<=" + std::to_string(max_n));
  for (std::int64_t n = 0; n <= max_n && !builder.failed(); ++n) {
    const auto shorts = enumerate_short_bsd(n);
    const std::size_t hb_prev = n == 0 ? 0 : enumerate_hyperbinary(n - 1).size();
    if (!builder.expect(shorts.size() == hb_prev, [&] {
          return Counterexample{n_input(n),
                                "f_HB(n-1)=" + std::to_string(hb_prev),
                                "short=" + std::to_string(shorts.size())};
        })) {
      break;
    }
    if (n >= 1) check_bijection_at(n, shorts, builder);
  }
  return builder.finish();
}

CheckResult check_theorem3(std::int64_t max_n) {
  require_nonnegative(max_n, "theorem3");
  CheckBuilder builder(kTheorem3, "1<=n<=" + std::to_string(max_n));
  for (std::int64_t n = 1; n <= max_n && !builder.failed(); ++n) {
    const int i = binary_width(n);
    const auto shorts = enumerate_short_bsd(n);
    for (const auto& r : shorts) {
      const auto w = static_cast<int>(r.width());
      if (!builder.expect(w == i || w == i + 1, [&] {
            return Counterexample{n_input(n) + " r=" + format_bsd(r),
                                  "width in {" + std::to_string(i) + "," +
                                      std::to_string(i + 1) + "}",
                                  "width=" + std::to_string(w)};
          })) {
        break;
      }
    }
    if (builder.failed()) break;
    // The enumerator only searches widths i and i + 1, so probe the next two
    // widths directly for short strings it would have missed.
    for (int w = i + 2; w <= std::min(i + 3, kMaxWidth); ++w) {
      for (const auto& r : enumerate_bsd_fixed(n, w)) {
        if (r.has_nonzero_leading() && is_short(r)) {
          builder.fail(n_input(n) + " r=" + format_bsd(r),
                       "width in {" + std::to_string(i) + "," +
                           std::to_string(i + 1) + "}",
                       "width=" + std::to_string(w));
          break;
        }
      }
      if (builder.failed()) break;
    }
    if (builder.failed()) break;
    const std::size_t wide = enumerate_bsd_fixed(n, i + 1).size();
    const std::size_t narrow = enumerate_bsd_fixed(n, i).size();
    builder.expect(wide == narrow + shorts.size(), [&] {
      return Counterexample{
          n_input(n) + " i=" + std::to_string(i),
          "short=" + std::to_string(shorts.size()),
          "fixed(n,i+1)=" + std::to_string(wide) +
              " fixed(n,i)=" + std::to_string(narrow)};
    });
  }
  return builder.finish();
}

CheckResult check_monroe(int max_i, const SternFn& stern) {
  if (max_i < 1 || max_i > kMaxMonroeWidth) {
    throw DomainError("monroe: max_i must be in [1, " +
                      std::to_string(kMaxMonroeWidth) + "]");
  }
  const SternFn s = resolve(stern);
  CheckBuilder builder(kMonroe,
                       "1<=i<=" + std::to_string(max_i) + ",0<n<2^i");
  for (int i = 1; i <= max_i && !builder.failed(); ++i) {
    const std::int64_t top = std::int64_t{1} << i;
    for (std::int64_t n = 1; n < top && !builder.failed(); ++n) {
      const CountValue expected = s(top - n);
      const CountValue actual{enumerate_bsd_fixed(n, i).size()};
      builder.expect(actual == expected, [&] {
        return Counterexample{n_input(n) + " i=" + std::to_string(i),
                              "s(2^i-n)=" + expected.to_string(),
                              "fixed(n,i)=" + actual.to_string()};
      });
    }
  }
  return builder.finish();
}

CheckResult check_stolarsky_dilcher(int max_i, int max_j,
                                    const SternFn& stern) {
  if (max_i < 1 || max_j < 1 || max_i + max_j > 62) {
    throw DomainError(
        "stolarsky: need max_i, max_j >= 1 and max_i + max_j <= 62");
  }
  const SternFn s = resolve(stern);
  CheckBuilder builder(kStolarskyDilcher,
                       "1<=i<=" + std::to_string(max_i) +
                           ",1<=j<=" + std::to_string(max_j) + ",0<=n<=2^i");
  for (int i = 1; i <= max_i && !builder.failed(); ++i) {
    const std::int64_t pi = std::int64_t{1} << i;
    for (int j = 1; j <= max_j && !builder.failed(); ++j) {
      const std::int64_t pj = std::int64_t{1} << j;
      const CountValue s_j = s(pj - 1);
      for (std::int64_t n = 0; n <= pi && !builder.failed(); ++n) {
        const CountValue lhs = s(pi * pj - n);
        const CountValue rhs = s(pi - n) + s(n) * s_j;
        builder.expect(lhs == rhs, [&] {
          return Counterexample{
              n_input(n) + " i=" + std::to_string(i) +
                  " j=" + std::to_string(j),
              "s(2^i-n)+s(n)s(2^j-1)=" + rhs.to_string(),
              "s(2^(i+j)-n)=" + lhs.to_string()};
        });
      }
    }
  }
  return builder.finish();
}

CheckResult check_gf_identity(int max_M) {
  if (max_M < 0 || max_M > kMaxGfOrder) {
    throw DomainError("gf: max_M must be in [0, " +
                      std::to_string(kMaxGfOrder) + "]");
  }
  CheckBuilder builder(kGfIdentity, "0<=M<=" + std::to_string(max_M));
  const std::int64_t top = std::int64_t{1} << max_M;
  std::vector<CountValue> hb_counts(static_cast<std::size_t>(top) + 1);
  std::vector<CountValue> short_counts(static_cast<std::size_t>(top) + 1);
  for (std::int64_t n = 1; n <= top; ++n) {
    hb_counts[n] = CountValue{enumerate_hyperbinary(n - 1).size()};
    short_counts[n] = CountValue{enumerate_short_bsd(n).size()};
  }

  SparseSeries prev_lhs;
  SparseSeries prev_rhs;
  for (int M = 0; M <= max_M && !builder.failed(); ++M) {
    const SparseSeries lhs = lhs_finite(M);
    const SparseSeries rhs = rhs_finite(M);
    const std::string at_m = "M=" + std::to_string(M);
    if (!builder.expect(lhs == rhs, [&] {
          const auto e = *first_difference(lhs, rhs);
          return Counterexample{at_m + " q^" + std::to_string(e),
                                "lhs=" + lhs.coefficient(e).to_string(),
                                "rhs=" + rhs.coefficient(e).to_string()};
        })) {
      break;
    }
    if (!builder.expect(!rhs.min_exponent() || *rhs.min_exponent() >= 1, [&] {
          return Counterexample{at_m, "min exponent >= 1",
                                "min exponent " +
                                    std::to_string(*rhs.min_exponent())};
        })) {
      break;
    }
    // Raising the order from M - 1 to M leaves every coefficient below
    // q^(2^(M-1) + 1) untouched.
    if (M >= 1) {
      const std::int64_t floor = (std::int64_t{1} << (M - 1)) + 1;
      const auto tail = [&](const char* side, std::optional<std::int64_t> k) {
        return builder.expect(!k || *k >= floor, [&] {
          return Counterexample{at_m + " " + side,
                                "first change at q^k, k>=" +
                                    std::to_string(floor),
                                "k=" + std::to_string(*k)};
        });
      };
      if (!tail("lhs", first_difference(lhs, prev_lhs)) ||
          !tail("rhs", first_difference(rhs, prev_rhs))) {
        break;
      }
    }
    const std::int64_t limit = std::int64_t{1} << M;
    for (std::int64_t n = 1; n <= limit && !builder.failed(); ++n) {
      builder.expect(lhs.coefficient(n) == hb_counts[n], [&] {
        return Counterexample{at_m + " " + n_input(n),
                              "f_HB(n-1)=" + hb_counts[n].to_string(),
                              "lhs coeff=" + lhs.coefficient(n).to_string()};
      });
      if (builder.failed()) break;
      builder.expect(rhs.coefficient(n) == short_counts[n], [&] {
        return Counterexample{at_m + " " + n_input(n),
                              "short=" + short_counts[n].to_string(),
                              "rhs coeff=" + rhs.coefficient(n).to_string()};
      });
    }
    prev_lhs = lhs;
    prev_rhs = rhs;
  }
  return builder.finish();
}

CheckResult check_reznick(std::int64_t max_n, const SternFn& stern) {
  require_nonnegative(max_n, "reznick");
  const SternFn s = resolve(stern);
  CheckBuilder builder(kReznick, "0<=n<=" + std::to_string(max_n));
  for (std::int64_t n = 0; n <= max_n && !builder.failed(); ++n) {
    const CountValue expected = s(n + 1);
    const CountValue actual{enumerate_hyperbinary(n).size()};
    builder.expect(actual == expected, [&] {
      return Counterexample{n_input(n), "s(n+1)=" + expected.to_string(),
                            "f_HB(n)=" + actual.to_string()};
    });
  }
  return builder.finish();
}

VerificationReport run_all(const VerifyConfig& config) {
  std::vector<std::string> names = config.checks;
  if (names.empty()) {
    for (auto name : all_check_names()) names.emplace_back(name);
  }
  for (const auto& name : names) {
    if (std::find(all_check_names().begin(), all_check_names().end(), name) ==
        all_check_names().end()) {
      throw DomainError("unknown check: " + name);
    }
  }

  VerificationReport report;
  if (config.parallel) {
    std::vector<std::future<CheckResult>> pending;
    pending.reserve(names.size());
    for (const auto& name : names) {
      pending.push_back(std::async(std::launch::async, [&config, name] {
        return run_named(name, config);
      }));
    }
    for (auto& f : pending) report.checks.push_back(f.get());
    return report;
  }
  for (const auto& name : names) {
    report.checks.push_back(run_named(name, config));
    if (config.fail_fast && !report.checks.back().pass) break;
  }
  return report;
}

}  // namespace sternbsd
