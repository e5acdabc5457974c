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

#ifndef STERNBSD_SERIES_H_
#define STERNBSD_SERIES_H_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sternbsd/count_value.h"

namespace sternbsd {

// A Laurent polynomial in q with nonnegative integer coefficients, stored
// sparsely as exponent -> coefficient. Zero coefficients are never stored, so
// two series are equal exactly when their term maps are.
class SparseSeries {
 public:
  using Terms = std::map<std::int64_t, CountValue>;

  SparseSeries() = default;

  // {{exponent, coefficient}, ...}; zero coefficients are dropped and repeated
  // exponents accumulate.
  SparseSeries(std::initializer_list<std::pair<std::int64_t, std::uint64_t>>
                   terms);

  static SparseSeries monomial(std::int64_t exponent,
                               CountValue coefficient = CountValue{1});

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  CountValue coefficient(std::int64_t exponent) const;
  std::optional<std::int64_t> min_exponent() const;
  std::optional<std::int64_t> max_exponent() const;

  // Space separated "exponent:coefficient" pairs in ascending exponent order.
  std::string to_string() const;

  SparseSeries& operator+=(const SparseSeries& other);

  friend SparseSeries operator+(SparseSeries a, const SparseSeries& b) {
    return a += b;
  }
  friend SparseSeries operator*(const SparseSeries& a, const SparseSeries& b);
  friend bool operator==(const SparseSeries&, const SparseSeries&) = default;

 private:
  void add_term(std::int64_t exponent, CountValue coefficient);

  Terms terms_;
};

SparseSeries series_add(const SparseSeries& a, const SparseSeries& b);
SparseSeries series_mul(const SparseSeries& a, const SparseSeries& b);

// Stored coefficient of q^exponent, or zero.
CountValue coefficient(const SparseSeries& s, std::int64_t exponent);

// Smallest exponent at which a and b disagree, or nullopt when equal.
std::optional<std::int64_t> first_difference(const SparseSeries& a,
                                             const SparseSeries& b);

// Largest M accepted by lhs_finite/rhs_finite. Both sides have about 2^(M+1)
// terms, so this is a memory bound.
inline constexpr int kMaxSeriesOrder = 20;

// q * prod_{n=0}^{M-1} (1 + q^(2^n) + q^(2*2^n)): the hyperbinary side, whose
// coefficient of q^k counts hyperbinary representations of k - 1.
SparseSeries lhs_finite(int M);

// q + sum_{N=1}^{M} [prod_{i=0}^{N-2} (1 + q^(2^i) + q^(-2^i))]
//                   * (1 + q^(2^(N-1))) * q^(2^N):
// the short-BSD side, where term N collects representations whose leading
// term is 2^N and the missing q^(-2^(N-1)) excludes a leading 1T.
SparseSeries rhs_finite(int M);

}  // namespace sternbsd

#endif  // STERNBSD_SERIES_H_
