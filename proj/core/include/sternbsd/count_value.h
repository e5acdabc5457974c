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

#ifndef STERNBSD_COUNT_VALUE_H_
#define STERNBSD_COUNT_VALUE_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "sternbsd/errors.h"

namespace sternbsd {

// An exact nonnegative count. Addition and multiplication are checked and
// throw OverflowError instead of wrapping.
class CountValue {
 public:
  constexpr CountValue() = default;
  constexpr explicit CountValue(std::uint64_t value) : value_(value) {}

  constexpr std::uint64_t value() const { return value_; }

  CountValue& operator+=(CountValue other) {
    if (__builtin_add_overflow(value_, other.value_, &value_)) {
      throw OverflowError("CountValue addition overflow");
    }
    return *this;
  }

  CountValue& operator*=(CountValue other) {
    if (__builtin_mul_overflow(value_, other.value_, &value_)) {
      throw OverflowError("CountValue multiplication overflow");
    }
    return *this;
  }

  friend CountValue operator+(CountValue a, CountValue b) { return a += b; }
  friend CountValue operator*(CountValue a, CountValue b) { return a *= b; }

  friend constexpr bool operator==(CountValue, CountValue) = default;
  friend constexpr auto operator<=>(CountValue, CountValue) = default;

  std::string to_string() const { return std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, CountValue c) {
    return os << c.value_;
  }

 private:
  std::uint64_t value_ = 0;
};

}  // namespace sternbsd

#endif  // STERNBSD_COUNT_VALUE_H_
