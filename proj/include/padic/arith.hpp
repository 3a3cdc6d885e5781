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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "padic/error.hpp"

namespace padic {

/// Exact rational number in lowest terms with positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using u128 = unsigned __int128;

inline double to_double(const ExactRational& q) { return q.convert_to<double>(); }

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeBase, std::to_string(p) + " is not prime");
}

/// The first `count` primes in increasing order.
inline std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 2; out.size() < count; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

/// base^exp, or nullopt when the result does not fit in 64 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    r *= base;
  }
  return r;
}

inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::nullopt;
  return a * b;
}

/// floor(log_p k) for k >= 1, by repeated division.
inline unsigned digit_level(std::uint64_t k, std::uint64_t p) {
  unsigned t = 0;
  while (k >= p) {
    k /= p;
    ++t;
  }
  return t;
}

/// Base-p digits of n, least significant first. Zero has no digits.
inline std::vector<std::uint32_t> integer_digits(std::uint64_t n, std::uint64_t p) {
  std::vector<std::uint32_t> out;
  while (n > 0) {
    out.push_back(static_cast<std::uint32_t>(n % p));
    n /= p;
  }
  return out;
}

}  // namespace padic
