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

#include "sternbsd/series.h"

#include <algorithm>
#include <sstream>

#include "sternbsd/errors.h"

namespace sternbsd {
namespace {

void check_order(int M, const char* what) {
  if (M < 0 || M > kMaxSeriesOrder) {
    throw DomainError(std::string(what) + ": M must be in [0, " +
                      std::to_string(kMaxSeriesOrder) + "], got " +
                      std::to_string(M));
  }
}

std::int64_t pow2(int k) { return std::int64_t{1} << k; }

}  // namespace

SparseSeries::SparseSeries(
    std::initializer_list<std::pair<std::int64_t, std::uint64_t>> terms) {
  for (const auto& [exponent, coefficient] : terms) {
    add_term(exponent, CountValue{coefficient});
  }
}

SparseSeries SparseSeries::monomial(std::int64_t exponent,
                                    CountValue coefficient) {
  SparseSeries s;
  s.add_term(exponent, coefficient);
  return s;
}

void SparseSeries::add_term(std::int64_t exponent, CountValue coefficient) {
  if (coefficient == CountValue{0}) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) it->second += coefficient;
}

CountValue SparseSeries::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? CountValue{0} : it->second;
}

std::optional<std::int64_t> SparseSeries::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<std::int64_t> SparseSeries::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::string SparseSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [exponent, coefficient] : terms_) {
    if (!first) os << ' ';
    os << exponent << ':' << coefficient;
    first = false;
  }
  return os.str();
}

SparseSeries& SparseSeries::operator+=(const SparseSeries& other) {
  for (const auto& [exponent, coefficient] : other.terms_) {
    add_term(exponent, coefficient);
  }
  return *this;
}

SparseSeries operator*(const SparseSeries& a, const SparseSeries& b) {
  SparseSeries product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::int64_t exponent;
      if (__builtin_add_overflow(ea, eb, &exponent)) {
        throw OverflowError("series exponent overflow");
      }
      product.add_term(exponent, ca * cb);
    }
  }
  return product;
}

SparseSeries series_add(const SparseSeries& a, const SparseSeries& b) {
  return a + b;
}

SparseSeries series_mul(const SparseSeries& a, const SparseSeries& b) {
  return a * b;
}

CountValue coefficient(const SparseSeries& s, std::int64_t exponent) {
  return s.coefficient(exponent);
}

std::optional<std::int64_t> first_difference(const SparseSeries& a,
                                             const SparseSeries& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end()) return ia->first;
    if (ia == a.terms().end()) return ib->first;
    if (ia->first != ib->first) return std::min(ia->first, ib->first);
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

SparseSeries lhs_finite(int M) {
  check_order(M, "lhs_finite");
  SparseSeries result = SparseSeries::monomial(1);
  for (int n = 0; n < M; ++n) {
    result = result * SparseSeries{{0, 1}, {pow2(n), 1}, {2 * pow2(n), 1}};
  }
  return result;
}

SparseSeries rhs_finite(int M) {
  check_order(M, "rhs_finite");
  SparseSeries result = SparseSeries::monomial(1);
  // Running product over the free positions 0..N-2.
  SparseSeries free_digits = SparseSeries::monomial(0);
  for (int N = 1; N <= M; ++N) {
    const std::int64_t below = pow2(N - 1);
    result += free_digits * SparseSeries{{pow2(N), 1}, {pow2(N) + below, 1}};
    free_digits = free_digits * SparseSeries{{-below, 1}, {0, 1}, {below, 1}};
  }
  return result;
}

}  // namespace sternbsd
