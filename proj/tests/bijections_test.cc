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

#include <algorithm>

#include "gtest/gtest.h"
#include "sternbsd/errors.h"
#include "sternbsd/representations.h"

namespace sternbsd {
namespace {

TEST(HbToShortBsdTest, Examples) {
  EXPECT_EQ(hb_to_short_bsd(parse_hb("0")), parse_bsd("1"));
  EXPECT_EQ(hb_to_short_bsd(parse_hb("20")), parse_bsd("11T"));
  EXPECT_EQ(hb_to_short_bsd(parse_hb("100")), parse_bsd("10TT"));
  EXPECT_EQ(hb_to_short_bsd(parse_hb("12")), parse_bsd("101"));
}

TEST(HbToShortBsdTest, RejectsNonCanonical) {
  EXPECT_THROW(hb_to_short_bsd(parse_hb("012")), DomainError);
  EXPECT_THROW(hb_to_short_bsd(parse_hb("00")), DomainError);
  EXPECT_THROW(hb_to_short_bsd(HyperbinaryString()), DomainError);
}

TEST(ShortBsdToHbTest, Examples) {
  EXPECT_EQ(short_bsd_to_hb(parse_bsd("1")), parse_hb("0"));
  EXPECT_EQ(short_bsd_to_hb(parse_bsd("101")), parse_hb("12"));
  EXPECT_EQ(short_bsd_to_hb(parse_bsd("10TT")), parse_hb("100"));
  EXPECT_EQ(short_bsd_to_hb(parse_bsd("11T")), parse_hb("20"));
}

TEST(ShortBsdToHbTest, RejectsOutsideDomain) {
  EXPECT_THROW(short_bsd_to_hb(parse_bsd("1T01")), DomainError);  // not short
  EXPECT_THROW(short_bsd_to_hb(parse_bsd("01")), DomainError);
  EXPECT_THROW(short_bsd_to_hb(SignedDigitString()), DomainError);
  EXPECT_THROW(short_bsd_to_hb(parse_bsd("T")), DomainError);  // negative
  EXPECT_THROW(short_bsd_to_hb(parse_bsd("T0T")), DomainError);
}

TEST(BijectionTest, ValueShiftShortnessAndRoundTrip) {
  for (std::int64_t n = 0; n <= 1024; ++n) {
    for (const auto& h : enumerate_hyperbinary(n)) {
      const SignedDigitString b = hb_to_short_bsd(h);
      ASSERT_EQ(value_bsd(b), n + 1) << format_hb(h);
      ASSERT_TRUE(b.is_canonical());
      ASSERT_TRUE(is_short(b)) << format_hb(h);
      ASSERT_EQ(short_bsd_to_hb(b), h);
    }
    for (const auto& b : enumerate_short_bsd(n + 1)) {
      const HyperbinaryString h = short_bsd_to_hb(b);
      ASSERT_EQ(value_hb(h), n);
      ASSERT_TRUE(h.is_canonical());
      ASSERT_EQ(hb_to_short_bsd(h), b);
    }
  }
}

TEST(BijectionTest, ImageIsExactlyTheShortRepresentations) {
  for (std::int64_t n = 0; n <= 1024; ++n) {
    std::vector<SignedDigitString> image;
    for (const auto& h : enumerate_hyperbinary(n)) {
      image.push_back(hb_to_short_bsd(h));
    }
    std::sort(image.begin(), image.end());
    ASSERT_EQ(image, enumerate_short_bsd(n + 1)) << n;
  }
}

}  // namespace
}  // namespace sternbsd
