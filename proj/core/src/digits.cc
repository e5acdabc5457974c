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

#include "sternbsd/digits.h"

#include <string>

#include "sternbsd/errors.h"

namespace sternbsd {
namespace {

template <typename Digit, typename FromChar>
std::vector<Digit> parse_digits(std::string_view text, FromChar from_char,
                                const char* what) {
  if (text.empty()) {
    throw ParseError(std::string("empty ") + what + " digit string");
  }
  std::vector<Digit> digits;
  digits.reserve(text.size());
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    digits.push_back(from_char(*it));
  }
  return digits;
}

template <typename Digit>
std::string format_digits(std::span<const Digit> digits) {
  std::string out;
  out.reserve(digits.size());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    out.push_back(to_char(*it));
  }
  return out;
}

}  // namespace

char to_char(SignedDigit d) {
  switch (d) {
    case SignedDigit::kMinusOne:
      return 'T';
    case SignedDigit::kZero:
      return '0';
    case SignedDigit::kOne:
      return '1';
  }
  return '?';
}

char to_char(HyperDigit d) {
  return static_cast<char>('0' + static_cast<int>(d));
}

SignedDigit signed_digit_from_char(char c) {
  switch (c) {
    case 'T':
      return SignedDigit::kMinusOne;
    case '0':
      return SignedDigit::kZero;
    case '1':
      return SignedDigit::kOne;
    default:
      throw ParseError(std::string("invalid signed digit '") + c +
                       "' (expected one of T, 0, 1)");
  }
}

HyperDigit hyper_digit_from_char(char c) {
  if (c < '0' || c > '2') {
    throw ParseError(std::string("invalid hyperbinary digit '") + c +
                     "' (expected one of 0, 1, 2)");
  }
  return static_cast<HyperDigit>(c - '0');
}

SignedDigitString parse_bsd(std::string_view text) {
  return SignedDigitString(
      parse_digits<SignedDigit>(text, signed_digit_from_char, "BSD"));
}

std::string format_bsd(const SignedDigitString& r) {
  return format_digits(r.digits());
}

HyperbinaryString parse_hb(std::string_view text) {
  return HyperbinaryString(
      parse_digits<HyperDigit>(text, hyper_digit_from_char, "hyperbinary"));
}

std::string format_hb(const HyperbinaryString& h) {
  return format_digits(h.digits());
}

std::ostream& operator<<(std::ostream& os, const SignedDigitString& r) {
  return os << '[' << format_bsd(r) << ']';
}

std::ostream& operator<<(std::ostream& os, const HyperbinaryString& h) {
  return os << '[' << format_hb(h) << ']';
}

}  // namespace sternbsd
