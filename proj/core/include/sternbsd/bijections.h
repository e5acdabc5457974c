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

#ifndef STERNBSD_BIJECTIONS_H_
#define STERNBSD_BIJECTIONS_H_

#include "sternbsd/digits.h"

namespace sternbsd {

// Maps a canonical hyperbinary representation of n to a short BSD
// representation of n + 1: prepend a 1 and subtract 1 from every original
// digit (position-wise, no carries). [0] maps to [1].
// Throws DomainError on non-canonical input.
SignedDigitString hb_to_short_bsd(const HyperbinaryString& h);

// Inverse of hb_to_short_bsd: drop the leading 1 and add 1 to every remaining
// digit. [1] maps to [0]. Throws DomainError unless b is canonical, short and
// positive.
HyperbinaryString short_bsd_to_hb(const SignedDigitString& b);

}  // namespace sternbsd

#endif  // STERNBSD_BIJECTIONS_H_
