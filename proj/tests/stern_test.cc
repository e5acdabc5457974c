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

#include "sternbsd/stern.h"

#include <cstdint>
#include <limits>

#include "gtest/gtest.h"
#include "oracle.h"
#include "sternbsd/errors.h"

namespace sternbsd {
namespace {

TEST(SternTest, ListedPrefix) {
  const std::uint64_t expected[] = {0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5};
  for (std::int64_t n = 0; n < 14; ++n) {
    EXPECT_EQ(stern(n).value(), expected[n]) << "n=" << n;
  }
}

TEST(SternTest, Examples) {
  EXPECT_EQ(stern(0), CountValue{0});
  EXPECT_EQ(stern(5), CountValue{3});
  EXPECT_EQ(stern(13), CountValue{5});
}

TEST(SternTest, PairExamples) {
  EXPECT_EQ(stern_pair(0), std::make_pair(CountValue{0}, CountValue{1}));
  EXPECT_EQ(stern_pair(5), std::make_pair(CountValue{3}, CountValue{2}));
  EXPECT_EQ(stern_pair(13), std::make_pair(CountValue{5}, CountValue{3}));
}

TEST(SternTest, NegativeIndexIsDomainError) {
  EXPECT_THROW(stern(-1), DomainError);
  EXPECT_THROW(stern_pair(-7), DomainError);
}

TEST(SternTest, Recurrence) {
  for (std::int64_t n = 0; n <= 5000; ++n) {
    ASSERT_EQ(stern(2 * n), stern(n)) << n;
    ASSERT_EQ(stern(2 * n + 1), stern(n) + stern(n + 1)) << n;
  }
}

TEST(SternTest, PairIsConsecutive) {
  for (std::int64_t n = 0; n <= 5000; ++n) {
    ASSERT_EQ(stern_pair(n), std::make_pair(stern(n), stern(n + 1))) << n;
  }
}

TEST(SternTest, PowersOfTwo) {
  for (int k = 0; k < 63; ++k) {
    EXPECT_EQ(stern(std::int64_t{1} << k), CountValue{1}) << k;
  }
}

TEST(SternTest, MatchesNaiveRecursion) {
  for (std::int64_t n = 0; n <= (1 << 16); ++n) {
    ASSERT_EQ(stern(n).value(), oracle::stern(n)) << n;
  }
}

TEST(SternTest, LargeIndicesFit) {
  // s(n) for n < 2^63 is bounded by a Fibonacci number near 2^44.
  const std::int64_t max = std::numeric_limits<std::int64_t>::max();
  EXPECT_NO_THROW(stern(max));
  // 0b1010...10 maximises s over its bit length.
  const std::int64_t alternating = 0x2AAAAAAAAAAAAAAA;
  EXPECT_EQ(stern(alternating).value(), oracle::stern(alternating));
}

TEST(CountValueTest, CheckedArithmetic) {
  const CountValue big{std::numeric_limits<std::uint64_t>::max()};
  EXPECT_THROW(big + CountValue{1}, OverflowError);
  EXPECT_THROW(big * CountValue{2}, OverflowError);
  EXPECT_EQ(big * CountValue{1}, big);
  EXPECT_EQ(CountValue{6} * CountValue{7}, CountValue{42});
  EXPECT_LT(CountValue{1}, CountValue{2});
}

}  // namespace
}  // namespace sternbsd
