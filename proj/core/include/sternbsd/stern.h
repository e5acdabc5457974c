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

#ifndef STERNBSD_STERN_H_
#define STERNBSD_STERN_H_

#include <cstdint>
#include <utility>

#include "sternbsd/count_value.h"

namespace sternbsd {

// Stern's diatomic sequence: s(0) = 0, s(1) = 1, s(2n) = s(n),
// s(2n+1) = s(n) + s(n+1). O(log n). Throws DomainError for n < 0.
CountValue stern(std::int64_t n);

// Returns (s(n), s(n+1)) by folding the binary digits of n, most significant
// first, into the consecutive pair. Throws DomainError for n < 0.
std::pair<CountValue, CountValue> stern_pair(std::int64_t n);

}  // namespace sternbsd

#endif  // STERNBSD_STERN_H_
