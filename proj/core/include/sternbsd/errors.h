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

#ifndef STERNBSD_ERRORS_H_
#define STERNBSD_ERRORS_H_

#include <stdexcept>

namespace sternbsd {

// Raised when an argument lies outside an operation's mathematical domain,
// e.g. a negative Stern index or a non-canonical digit string.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when exact integer arithmetic would exceed its 64-bit backing store.
// Counts are never allowed to wrap.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Raised for malformed textual input (digit strings, integers).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sternbsd

#endif  // STERNBSD_ERRORS_H_
