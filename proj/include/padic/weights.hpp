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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "padic/arith.hpp"
#include "padic/padic.hpp"

namespace padic {

/// g = (g_1..g_s), g_i >= 1. Spans the index box 0 <= k_i < p_i^{g_i}.
class TruncationBox {
 public:
  TruncationBox(std::initializer_list<unsigned> g) : TruncationBox(std::vector(g)) {}
  explicit TruncationBox(std::vector<unsigned> g) : g_(std::move(g)) {
    if (g_.empty()) fail(ErrorCode::InvalidArgument, "truncation box must be nonempty");
    for (auto gi : g_) {
      if (gi < 1) fail(ErrorCode::InvalidArgument, "truncation box entries must be >= 1");
    }
  }

  std::size_t size() const noexcept { return g_.size(); }
  unsigned operator[](std::size_t i) const { return g_[i]; }
  const std::vector<unsigned>& values() const noexcept { return g_; }

  friend bool operator==(const TruncationBox&, const TruncationBox&) = default;

 private:
  std::vector<unsigned> g_;
};

inline void require_same_dim(const PrimeBases& bases, const TruncationBox& g) {
  if (g.size() != bases.size()) {
    fail(ErrorCode::DimensionMismatch, "box of dimension " + std::to_string(g.size()) +
                                           " against " + std::to_string(bases.size()) + " bases");
  }
}

/// rho_p(0) = 1, rho_p(k) = p^{-2t} for p^t <= k < p^{t+1}.
inline ExactRational rho(std::uint64_t k, std::uint32_t p) {
  require_prime(p);
  if (k == 0) return 1;
  const auto t = digit_level(k, p);
  return ExactRational(1, boost::multiprecision::pow(BigInt(p), 2 * t));
}

inline double rho_double(std::uint64_t k, std::uint32_t p) {
  if (k == 0) return 1.0;
  return std::pow(static_cast<double>(p), -2.0 * digit_level(k, p));
}

inline ExactRational rho_vec(const IndexVector& k, const PrimeBases& bases) {
  if (k.size() != bases.size()) {
    fail(ErrorCode::DimensionMismatch, "index of dimension " + std::to_string(k.size()) +
                                           " against " + std::to_string(bases.size()) + " bases");
  }
  ExactRational r = 1;
  for (std::size_t i = 0; i < k.size(); ++i) r *= rho(k[i], bases[i]);
  return r;
}

/// sigma_p = prod (p_i + 1).
inline std::uint64_t sigma(const PrimeBases& bases) {
  std::uint64_t s = 1;
  for (auto p : bases) {
    const auto next = checked_mul(s, std::uint64_t(p) + 1);
    if (!next) fail(ErrorCode::InvalidArgument, "sigma exceeds 64 bits");
    s = *next;
  }
  return s;
}

/// sigma_p(g) = prod (p_i + 1 - p_i^{1-g_i}), the weight mass of the box.
inline ExactRational sigma_g(const PrimeBases& bases, const TruncationBox& g) {
  require_same_dim(bases, g);
  ExactRational s = 1;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const BigInt p = bases[i];
    s *= ExactRational(p + 1) - ExactRational(1, boost::multiprecision::pow(p, g[i] - 1));
  }
  return s;
}

/// Number of index vectors in the box, prod p_i^{g_i}; nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> box_cardinality(const PrimeBases& bases, const TruncationBox& g) {
  require_same_dim(bases, g);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const auto side = checked_pow(bases[i], g[i]);
    if (!side) return std::nullopt;
    const auto next = checked_mul(total, *side);
    if (!next) return std::nullopt;
    total = *next;
  }
  return total;
}

}  // namespace padic
