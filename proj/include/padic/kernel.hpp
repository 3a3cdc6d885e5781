/* Copyright (C) 2026 The padic-diaphony authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

// Closed-form reproducing kernel K_p(x,y) = 1 + theta_p(x,y), where theta_p
// depends only on the position of the first differing digit of x and y.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "padic/arith.hpp"
#include "padic/padic.hpp"

namespace padic {

inline void require_same_base(const DigitVector& x, const DigitVector& y) {
  if (x.base() != y.base()) {
    fail(ErrorCode::BaseMismatch,
         "bases " + std::to_string(x.base()) + " and " + std::to_string(y.base()));
  }
}

/// 1-based index of the first digit where x and y differ, with implicit
/// trailing zeros; nullopt when x == y.
inline std::optional<std::size_t> first_difference(const DigitVector& x, const DigitVector& y) {
  const auto a = x.digits();
  const auto b = y.digits();
  const auto common = std::min(a.size(), b.size());
  const auto [ia, ib] = std::mismatch(a.begin(), a.begin() + common, b.begin());
  if (ia != a.begin() + common) return static_cast<std::size_t>(ia - a.begin()) + 1;
  // One is a prefix of the other. The longer one is canonical, so it has a
  // nonzero digit somewhere past the common part unless the lengths agree.
  const auto longer = a.size() > b.size() ? a : b;
  for (std::size_t j = common; j < longer.size(); ++j) {
    if (longer[j] != 0) return j + 1;
  }
  return std::nullopt;
}

/// theta_p(x,y) = p if x = y, else p - p^{1-i0}(p+1) with i0 the first
/// differing digit.
inline ExactRational theta(const DigitVector& x, const DigitVector& y) {
  require_same_base(x, y);
  const BigInt p = x.base();
  const auto i0 = first_difference(x, y);
  if (!i0) return ExactRational(p);
  return ExactRational(p) -
         ExactRational(p + 1, boost::multiprecision::pow(p, static_cast<unsigned>(*i0 - 1)));
}

/// K(x,y) = prod_i (1 + theta_{p_i}(x_i, y_i)).
inline ExactRational kernel_point(const Point& x, const Point& y, const PrimeBases& bases) {
  require_compatible(x, bases);
  require_compatible(y, bases);
  ExactRational k = 1;
  for (std::size_t i = 0; i < bases.size(); ++i) k *= 1 + theta(x[i], y[i]);
  return k;
}

/// Double-precision values of 1 + theta_p indexed by first differing digit,
/// for the fast kernel path. Entry 0 holds the diagonal value 1 + p.
class KernelTable {
 public:
  KernelTable(std::uint32_t p, std::size_t max_digits) : values_(max_digits + 1) {
    const double pd = p;
    values_[0] = 1.0 + pd;
    double scale = 1.0;  // p^{1-i0}
    for (std::size_t i0 = 1; i0 <= max_digits; ++i0) {
      values_[i0] = 1.0 + pd - scale * (pd + 1.0);
      scale /= pd;
    }
  }

  double operator()(const DigitVector& x, const DigitVector& y) const {
    const auto i0 = first_difference(x, y);
    return values_[i0.value_or(0)];
  }

 private:
  std::vector<double> values_;
};

}  // namespace padic
