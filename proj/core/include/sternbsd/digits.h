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

#ifndef STERNBSD_DIGITS_H_
#define STERNBSD_DIGITS_H_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sternbsd {

// A binary signed digit. Rendered as 'T', '0', '1'.
enum class SignedDigit : std::int8_t { kMinusOne = -1, kZero = 0, kOne = 1 };

// A hyperbinary digit. Rendered as '0', '1', '2'.
enum class HyperDigit : std::uint8_t { kZero = 0, kOne = 1, kTwo = 2 };

constexpr int digit_value(SignedDigit d) { return static_cast<int>(d); }
constexpr int digit_value(HyperDigit d) { return static_cast<int>(d); }

char to_char(SignedDigit d);
char to_char(HyperDigit d);

// Throw ParseError on characters outside the alphabet.
SignedDigit signed_digit_from_char(char c);
HyperDigit hyper_digit_from_char(char c);

namespace internal {

// Shared storage for the two digit-string types. Digits are stored little
// endian: digit(j) is the coefficient of 2^j. Ordering compares the
// most-significant-first rendering lexicographically by digit value, so for
// signed digits T < 0 < 1 and a proper prefix sorts first.
template <typename Digit>
class DigitString {
 public:
  DigitString() = default;
  explicit DigitString(std::vector<Digit> little_endian)
      : digits_(std::move(little_endian)) {}

  // Digits listed most significant first, as they are written: {1, 0, -1}
  // builds [10T].
  static DigitString from_msf(std::initializer_list<int> msf) {
    std::vector<Digit> digits;
    digits.reserve(msf.size());
    for (auto it = std::rbegin(msf); it != std::rend(msf); ++it) {
      digits.push_back(static_cast<Digit>(*it));
    }
    return DigitString(std::move(digits));
  }

  std::span<const Digit> digits() const { return digits_; }
  std::size_t width() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }

  Digit digit(std::size_t j) const { return digits_.at(j); }
  Digit leading() const { return digits_.back(); }

  // Largest index whose digit is nonzero is the top one.
  bool has_nonzero_leading() const {
    return !digits_.empty() && digit_value(digits_.back()) != 0;
  }

  DigitString trimmed() const {
    auto digits = digits_;
    while (!digits.empty() && digit_value(digits.back()) == 0) {
      digits.pop_back();
    }
    return DigitString(std::move(digits));
  }

  friend bool operator==(const DigitString&, const DigitString&) = default;

  friend std::strong_ordering operator<=>(const DigitString& a,
                                          const DigitString& b) {
    return std::lexicographical_compare_three_way(
        a.digits_.rbegin(), a.digits_.rend(), b.digits_.rbegin(),
        b.digits_.rend(), [](Digit x, Digit y) {
          return digit_value(x) <=> digit_value(y);
        });
  }

 private:
  std::vector<Digit> digits_;
};

}  // namespace internal

// A finite binary signed-digit (BSD) representation. Canonical strings have a
// nonzero leading digit; the empty string is the canonical form of 0.
class SignedDigitString : public internal::DigitString<SignedDigit> {
 public:
  using DigitString::DigitString;
  SignedDigitString(DigitString base) : DigitString(std::move(base)) {}

  bool is_canonical() const { return empty() || has_nonzero_leading(); }
};

// A hyperbinary representation. Canonical strings have a nonzero leading
// digit, except the single digit [0], which is the canonical form of 0.
class HyperbinaryString : public internal::DigitString<HyperDigit> {
 public:
  using DigitString::DigitString;
  HyperbinaryString(DigitString base) : DigitString(std::move(base)) {}

  bool is_canonical() const {
    return has_nonzero_leading() ||
           (width() == 1 && leading() == HyperDigit::kZero);
  }
};

// Text is most significant first, e.g. "10T1". Parsing keeps leading zeros so
// that format(parse(t)) == t. Empty text or a foreign character throws
// ParseError.
SignedDigitString parse_bsd(std::string_view text);
std::string format_bsd(const SignedDigitString& r);

HyperbinaryString parse_hb(std::string_view text);
std::string format_hb(const HyperbinaryString& h);

std::ostream& operator<<(std::ostream& os, const SignedDigitString& r);
std::ostream& operator<<(std::ostream& os, const HyperbinaryString& h);

}  // namespace sternbsd

#endif  // STERNBSD_DIGITS_H_
