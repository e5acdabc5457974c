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

#include "sternbsd/bijections.h"

#include <vector>

#include "sternbsd/errors.h"
#include "sternbsd/representations.h"

namespace sternbsd {

SignedDigitString hb_to_short_bsd(const HyperbinaryString& h) {
  if (!h.is_canonical()) {
    throw DomainError("hb_to_short_bsd: " + format_hb(h) +
                      " is not a canonical hyperbinary string");
  }
  if (h.width() == 1 && h.leading() == HyperDigit::kZero) {
    return SignedDigitString(std::vector{SignedDigit::kOne});
  }
  std::vector<SignedDigit> digits;
  digits.reserve(h.width() + 1);
  for (HyperDigit d : h.digits()) {
    digits.push_back(static_cast<SignedDigit>(digit_value(d) - 1));
  }
  digits.push_back(SignedDigit::kOne);
  return SignedDigitString(std::move(digits));
}

HyperbinaryString short_bsd_to_hb(const SignedDigitString& b) {
  if (b.empty() || !b.is_canonical()) {
    throw DomainError("short_bsd_to_hb: input must be canonical and nonempty");
  }
  if (b.leading() != SignedDigit::kOne) {
    throw DomainError("short_bsd_to_hb: " + format_bsd(b) +
                      " is not positive");
  }
  if (!is_short(b)) {
    throw DomainError("short_bsd_to_hb: input not short: " + format_bsd(b));
  }
  if (b.width() == 1) {
    return HyperbinaryString(std::vector{HyperDigit::kZero});
  }
  const auto digits = b.digits();
  std::vector<HyperDigit> out;
  out.reserve(digits.size() - 1);
  for (auto it = digits.begin(); it + 1 != digits.end(); ++it) {
    out.push_back(static_cast<HyperDigit>(digit_value(*it) + 1));
  }
  return HyperbinaryString(std::move(out));
}

}  // namespace sternbsd
