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

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "padic/padic.hpp"

namespace padic {

/// Accepts a list of bases iff it is nonempty, every entry is prime and the
/// entries are pairwise distinct.
inline PrimeBases validate_bases(const std::vector<std::int64_t>& raw) {
  if (raw.empty()) fail(ErrorCode::EmptyBases, "at least one base is required");
  std::vector<std::uint32_t> primes;
  primes.reserve(raw.size());
  for (auto v : raw) {
    if (v < 2 || v > std::numeric_limits<std::uint32_t>::max() || !is_prime(static_cast<std::uint64_t>(v))) {
      fail(ErrorCode::NonPrimeBase, std::to_string(v) + " is not prime");
    }
    for (auto q : primes) {
      if (static_cast<std::int64_t>(q) == v) fail(ErrorCode::DuplicateBase, "base " + std::to_string(v) + " repeated");
    }
    primes.push_back(static_cast<std::uint32_t>(v));
  }
  return PrimeBases(std::move(primes));
}

/// x_n = (phi_{p_1}(n), ..., phi_{p_s}(n)).
inline Point halton_point(std::uint64_t n, const PrimeBases& bases) {
  bases.require_distinct();
  Point x;
  x.coords.reserve(bases.size());
  for (auto p : bases) x.coords.push_back(DigitVector(p, integer_digits(n, p)));
  return x;
}

/// Points start, start+1, ..., start+count-1 of the Halton sequence.
inline std::vector<Point> halton_stream(std::uint64_t count, const PrimeBases& bases,
                                        std::uint64_t start = 0) {
  if (count == 0) fail(ErrorCode::InvalidArgument, "count must be positive");
  if (count - 1 > std::numeric_limits<std::uint64_t>::max() - start) {
    fail(ErrorCode::CountOverflow, "start + count exceeds the 64-bit index range");
  }
  bases.require_distinct();
  std::vector<Point> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(halton_point(start + i, bases));
  return out;
}

}  // namespace padic
