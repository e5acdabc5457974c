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

#include "sternbsd/representations.h"

#include <algorithm>
#include <bit>
#include <iterator>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "sternbsd/errors.h"

namespace sternbsd {
namespace {

// Horner evaluation from the top digit. If any prefix value overflows, the
// full value does too, since the remaining tail is smaller than the shift.
template <typename Digit>
std::int64_t evaluate(std::span<const Digit> digits) {
  std::int64_t value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (__builtin_mul_overflow(value, 2, &value) ||
        __builtin_add_overflow(value, digit_value(*it), &value)) {
      throw OverflowError("digit string value exceeds 64-bit range");
    }
  }
  return value;
}

constexpr std::int64_t max_magnitude(int width) {
  return (std::int64_t{1} << width) - 1;
}

std::int64_t magnitude(std::int64_t n) { return n < 0 ? -n : n; }

void check_fixed_domain(std::int64_t n, int width) {
  if (width < 1 || width > kMaxWidth) {
    throw DomainError("width must be in [1, " + std::to_string(kMaxWidth) +
                      "], got " + std::to_string(width));
  }
  if (n < -max_magnitude(width) || n > max_magnitude(width)) {
    throw DomainError("|" + std::to_string(n) + "| exceeds 2^" +
                      std::to_string(width) +
                      " - 1; no BSD string of that width reaches it");
  }
}

// Depth-first over digit positions from the least significant. `residual` is
// the value the digits at positions pos.. must still produce, divided by
// 2^pos. Parity fixes the digit when the residual is even and leaves two
// choices when it is odd; branches whose residual can no longer be reached by
// the remaining positions are cut.
class FixedWidthSearch {
 public:
  FixedWidthSearch(int width, bool nonzero_leading,
                   std::vector<SignedDigitString>& out)
      : width_(width), nonzero_leading_(nonzero_leading), out_(out) {
    digits_.resize(static_cast<std::size_t>(width));
  }

  void run(std::int64_t target) { visit(target, 0); }

 private:
  void visit(std::int64_t residual, int pos) {
    if (pos == width_) {
      if (residual == 0) out_.emplace_back(digits_);
      return;
    }
    const std::int64_t bound = max_magnitude(width_ - pos - 1);
    for (int d = -1; d <= 1; ++d) {
      if (((residual - d) & 1) != 0) continue;
      if (d == 0 && nonzero_leading_ && pos == width_ - 1) continue;
      const std::int64_t next = (residual - d) / 2;
      if (next < -bound || next > bound) continue;
      digits_[static_cast<std::size_t>(pos)] = static_cast<SignedDigit>(d);
      visit(next, pos + 1);
    }
  }

  int width_;
  bool nonzero_leading_;
  std::vector<SignedDigit> digits_;
  std::vector<SignedDigitString>& out_;
};

void hyperbinary_search(std::int64_t residual, std::vector<HyperDigit>& digits,
                        std::vector<HyperbinaryString>& out) {
  // Stopping at a zero residual keeps the leading digit nonzero.
  if (residual == 0) {
    out.emplace_back(digits);
    return;
  }
  for (int d = 0; d <= 2; ++d) {
    if (((residual - d) & 1) != 0 || residual - d < 0) continue;
    digits.push_back(static_cast<HyperDigit>(d));
    hyperbinary_search((residual - d) / 2, digits, out);
    digits.pop_back();
  }
}

CountValue short_bsd_recurrence(
    std::int64_t n, std::unordered_map<std::int64_t, CountValue>& memo) {
  static constexpr std::uint64_t kBase[] = {0, 1, 1, 2, 1, 3};
  if (n <= 5) return CountValue{kBase[n]};
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const std::int64_t k = n / 2;
  CountValue result = short_bsd_recurrence(k, memo);
  if (n % 2 == 1) result += short_bsd_recurrence(k + 1, memo);
  memo.emplace(n, result);
  return result;
}

CountValue fixed_count(std::int64_t n, int width,
                       std::map<std::pair<std::int64_t, int>, CountValue>&
                           memo) {
  if (n < -max_magnitude(width) || n > max_magnitude(width)) {
    return CountValue{0};
  }
  if (width == 0) return CountValue{1};  // n == 0 here
  const auto key = std::make_pair(n, width);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  CountValue total{0};
  for (int d = -1; d <= 1; ++d) {
    if (((n - d) & 1) == 0) total += fixed_count((n - d) / 2, width - 1, memo);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

std::int64_t value_bsd(const SignedDigitString& r) {
  return evaluate(r.digits());
}

std::int64_t value_hb(const HyperbinaryString& h) {
  return evaluate(h.digits());
}

bool is_short(const SignedDigitString& r) {
  if (r.empty()) throw DomainError("is_short: empty digit string");
  if (!r.is_canonical()) {
    throw DomainError("is_short: leading digit of " + format_bsd(r) +
                      " is zero");
  }
  if (r.width() == 1) return true;
  const int top = digit_value(r.leading());
  const int next = digit_value(r.digit(r.width() - 2));
  return top + next != 0;
}

SignedDigitString negate(const SignedDigitString& r) {
  std::vector<SignedDigit> digits;
  digits.reserve(r.width());
  for (SignedDigit d : r.digits()) {
    digits.push_back(static_cast<SignedDigit>(-digit_value(d)));
  }
  return SignedDigitString(std::move(digits));
}

int binary_width(std::int64_t n) {
  if (n < 1) {
    throw DomainError("binary_width: n must be positive, got " +
                      std::to_string(n));
  }
  return std::bit_width(static_cast<std::uint64_t>(n));
}

std::vector<SignedDigitString> enumerate_short_bsd(std::int64_t n) {
  if (n < -kMaxShortMagnitude || n > kMaxShortMagnitude) {
    throw DomainError("enumerate_short_bsd: |n| too large: " +
                      std::to_string(n));
  }
  std::vector<SignedDigitString> out;
  if (n == 0) return out;
  if (n < 0) {
    for (const auto& r : enumerate_short_bsd(-n)) out.push_back(negate(r));
    std::sort(out.begin(), out.end());
    return out;
  }
  const int i = binary_width(n);
  std::vector<SignedDigitString> candidates;
  for (int width : {i, i + 1}) {
    FixedWidthSearch(width, /*nonzero_leading=*/true, candidates).run(n);
  }
  std::copy_if(candidates.begin(), candidates.end(), std::back_inserter(out),
               [](const SignedDigitString& r) { return is_short(r); });
  std::sort(out.begin(), out.end());
  return out;
}

CountValue count_short_bsd_recurrence(std::int64_t n) {
  if (n == std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("count_short_bsd_recurrence: |n| not representable");
  }
  std::unordered_map<std::int64_t, CountValue> memo;
  return short_bsd_recurrence(magnitude(n), memo);
}

std::vector<SignedDigitString> enumerate_bsd_fixed(std::int64_t n,
                                                   int width) {
  check_fixed_domain(n, width);
  std::vector<SignedDigitString> out;
  FixedWidthSearch(width, /*nonzero_leading=*/false, out).run(n);
  std::sort(out.begin(), out.end());
  return out;
}

CountValue count_bsd_fixed_recurrence(std::int64_t n, int width) {
  check_fixed_domain(n, width);
  std::map<std::pair<std::int64_t, int>, CountValue> memo;
  return fixed_count(n, width, memo);
}

std::vector<HyperbinaryString> enumerate_hyperbinary(std::int64_t n) {
  if (n < 0) {
    throw DomainError("hyperbinary representations need n >= 0, got " +
                      std::to_string(n));
  }
  if (n == 0) return {HyperbinaryString(std::vector{HyperDigit::kZero})};
  std::vector<HyperbinaryString> out;
  std::vector<HyperDigit> digits;
  hyperbinary_search(n, digits, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sternbsd
