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

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "sternbsd/errors.h"

namespace sternbsd {
namespace {

TEST(DigitsTest, ParseIsMostSignificantFirst) {
  const SignedDigitString r = parse_bsd("10T1");
  ASSERT_EQ(r.width(), 4u);
  EXPECT_EQ(r.digit(0), SignedDigit::kOne);
  EXPECT_EQ(r.digit(1), SignedDigit::kMinusOne);
  EXPECT_EQ(r.digit(2), SignedDigit::kZero);
  EXPECT_EQ(r.digit(3), SignedDigit::kOne);
  EXPECT_EQ(r, SignedDigitString::from_msf({1, 0, -1, 1}));
}

TEST(DigitsTest, ParseErrors) {
  EXPECT_THROW(parse_bsd("abc"), ParseError);
  EXPECT_THROW(parse_bsd(""), ParseError);
  EXPECT_THROW(parse_bsd("102"), ParseError);
  EXPECT_THROW(parse_bsd("t"), ParseError);
  EXPECT_THROW(parse_hb("1T"), ParseError);
  EXPECT_THROW(parse_hb(""), ParseError);
  EXPECT_THROW(parse_hb("3"), ParseError);
}

TEST(DigitsTest, FormatRoundTripKeepsLeadingZeros) {
  for (const char* text : {"0", "01", "1T", "0T10", "TTT", "1000"}) {
    EXPECT_EQ(format_bsd(parse_bsd(text)), text);
  }
  for (const char* text : {"0", "012", "20", "222"}) {
    EXPECT_EQ(format_hb(parse_hb(text)), text);
  }
}

TEST(DigitsTest, Canonical) {
  EXPECT_TRUE(SignedDigitString().is_canonical());
  EXPECT_TRUE(parse_bsd("T0").is_canonical());
  EXPECT_FALSE(parse_bsd("01").is_canonical());
  EXPECT_FALSE(parse_bsd("0").is_canonical());
  EXPECT_EQ(parse_bsd("001T").trimmed(), parse_bsd("1T"));
  EXPECT_TRUE(SignedDigitString(parse_bsd("000").trimmed()).empty());

  EXPECT_TRUE(parse_hb("0").is_canonical());
  EXPECT_TRUE(parse_hb("20").is_canonical());
  EXPECT_FALSE(parse_hb("00").is_canonical());
  EXPECT_FALSE(parse_hb("012").is_canonical());
  EXPECT_FALSE(HyperbinaryString().is_canonical());
}

TEST(DigitsTest, OrderIsDigitValueMostSignificantFirst) {
  std::vector<SignedDigitString> reps = {parse_bsd("11T"), parse_bsd("101"),
                                         parse_bsd("10TT")};
  std::sort(reps.begin(), reps.end());
  EXPECT_EQ(reps, (std::vector<SignedDigitString>{
                      parse_bsd("10TT"), parse_bsd("101"), parse_bsd("11T")}));

  EXPECT_LT(parse_bsd("T"), parse_bsd("0"));
  EXPECT_LT(parse_bsd("0"), parse_bsd("1"));
  EXPECT_LT(parse_bsd("1"), parse_bsd("10"));  // prefix first
  EXPECT_LT(parse_hb("100"), parse_hb("12"));
  EXPECT_LT(parse_hb("12"), parse_hb("20"));
}

TEST(DigitsTest, CharConversions) {
  EXPECT_EQ(to_char(SignedDigit::kMinusOne), 'T');
  EXPECT_EQ(to_char(HyperDigit::kTwo), '2');
  for (char c : {'T', '0', '1'}) EXPECT_EQ(to_char(signed_digit_from_char(c)), c);
  for (char c : {'0', '1', '2'}) EXPECT_EQ(to_char(hyper_digit_from_char(c)), c);
}

}  // namespace
}  // namespace sternbsd
