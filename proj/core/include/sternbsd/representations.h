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

#ifndef STERNBSD_REPRESENTATIONS_H_
#define STERNBSD_REPRESENTATIONS_H_

#include <cstdint>
#include <vector>

#include "sternbsd/count_value.h"
#include "sternbsd/digits.h"

namespace sternbsd {

// Largest fixed width accepted by the enumerators; 2^62 - 1 still fits the
// signed 64-bit residual arithmetic.
inline constexpr int kMaxWidth = 62;

// Largest |n| accepted by enumerate_short_bsd, so that width i + 1 stays
// within kMaxWidth.
inline constexpr std::int64_t kMaxShortMagnitude = (std::int64_t{1} << 61) - 1;

// Exact value sum_j digit(j) * 2^j. Throws OverflowError if it does not fit
// in int64.
std::int64_t value_bsd(const SignedDigitString& r);
std::int64_t value_hb(const HyperbinaryString& h);

// A canonical, nonempty BSD string is short when its two top positions are
// neither (1, T) nor (T, 1). Single-digit strings are short. The test is on
// adjacent positions, so [10TT] is short. Throws DomainError on empty or
// non-canonical input.
bool is_short(const SignedDigitString& r);

// Digit-wise negation, 1 <-> T.
SignedDigitString negate(const SignedDigitString& r);

// floor(log2 n) + 1 for n >= 1: the digit count of n in standard binary.
int binary_width(std::int64_t n);

// Every canonical short BSD representation of n, sorted. Only widths i and
// i + 1 (i = binary_width(|n|)) can hold one, so the search is limited to
// those. Empty for n = 0; negative n yields the negations of the results for
// -n. Throws DomainError when |n| > kMaxShortMagnitude.
std::vector<SignedDigitString> enumerate_short_bsd(std::int64_t n);

// Counts short BSD representations of |n| with the halving recurrence
// f(2k) = f(k), f(2k+1) = f(k) + f(k+1) seeded with f(0..5) = 0,1,1,2,1,3.
// Independent of stern() and of enumeration.
CountValue count_short_bsd_recurrence(std::int64_t n);

// Every width-`width` BSD string (leading zeros kept) whose value is n,
// sorted. Throws DomainError unless 1 <= width <= kMaxWidth and
// |n| <= 2^width - 1.
std::vector<SignedDigitString> enumerate_bsd_fixed(std::int64_t n, int width);

// |enumerate_bsd_fixed(n, width)| by digit dynamic programming over the
// lowest digit, without materializing the strings. Same domain.
CountValue count_bsd_fixed_recurrence(std::int64_t n, int width);

// Every canonical hyperbinary representation of n, sorted; {[0]} for n = 0.
// Throws DomainError for n < 0.
std::vector<HyperbinaryString> enumerate_hyperbinary(std::int64_t n);

}  // namespace sternbsd

#endif  // STERNBSD_REPRESENTATIONS_H_
