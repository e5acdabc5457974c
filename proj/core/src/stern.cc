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

#include <bit>
#include <string>

#include "sternbsd/errors.h"

namespace sternbsd {

std::pair<CountValue, CountValue> stern_pair(std::int64_t n) {
  if (n < 0) {
    throw DomainError("stern: index must be nonnegative, got " +
                      std::to_string(n));
  }
  // Invariant: (lo, hi) = (s(m), s(m+1)) for the prefix m of n's bits read so
  // far. Appending bit 0 maps m -> 2m, bit 1 maps m -> 2m+1.
  CountValue lo{0};
  CountValue hi{1};
  const auto bits = static_cast<std::uint64_t>(n);
  for (int b = std::bit_width(bits) - 1; b >= 0; --b) {
    if ((bits >> b) & 1U) {
      lo = lo + hi;
    } else {
      hi = lo + hi;
    }
  }
  return {lo, hi};
}

CountValue stern(std::int64_t n) { return stern_pair(n).first; }

}  // namespace sternbsd
