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

// Exact base-p digit arithmetic: the Monna map and its inverse on finite
// expansions, p-adic functions gamma_k and base-p Walsh functions with
// phases kept as exact rationals.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "padic/arith.hpp"
#include "padic/error.hpp"

namespace padic {

/// A coordinate in [0,1) as a finite base-p expansion x = d_1/p + d_2/p^2 + ...
/// Canonical: trailing zero digits are trimmed, so zero is the empty list and
/// equality is structural.
class DigitVector {
 public:
  explicit DigitVector(std::uint32_t base, std::vector<std::uint32_t> digits = {})
      : base_(base), digits_(std::move(digits)) {
    require_prime(base_);
    for (auto d : digits_) {
      if (d >= base_) {
        fail(ErrorCode::InvalidDigit,
             "digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
      }
    }
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
  }

  std::uint32_t base() const noexcept { return base_; }
  std::span<const std::uint32_t> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool is_zero() const noexcept { return digits_.empty(); }

  /// Digit x_j (1-based); zero past the stored length.
  std::uint32_t digit(std::size_t j) const noexcept {
    return j >= 1 && j <= digits_.size() ? digits_[j - 1] : 0;
  }

  /// x = numerator / base^size(), exactly.
  BigInt numerator() const {
    BigInt a = 0;
    for (auto d : digits_) a = a * base_ + d;
    return a;
  }

  ExactRational value() const {
    BigInt den = boost::multiprecision::pow(BigInt(base_), static_cast<unsigned>(digits_.size()));
    return ExactRational(numerator(), den);
  }

  double to_double() const {
    double v = 0.0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = (v + *it) / base_;
    return v;
  }

  friend bool operator==(const DigitVector&, const DigitVector&) = default;

 private:
  std::uint32_t base_;
  std::vector<std::uint32_t> digits_;
};

/// Unit-modulus complex number e^{2 pi i num/den} held as a reduced rational
/// phase in [0,1). Denominators are powers of a prime (or products of such
/// once phases of different bases are added).
class PhaseRational {
 public:
  PhaseRational() = default;
  PhaseRational(std::uint64_t num, std::uint64_t den) : num_(num % den), den_(den) {
    const auto g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }
  double turns() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::complex<double> value() const {
    return std::polar(1.0, 2.0 * std::numbers::pi * turns());
  }

  /// Sum mod 1, i.e. the product of the two unit complex numbers.
  friend PhaseRational operator+(const PhaseRational& a, const PhaseRational& b) {
    const auto g = std::gcd(a.den_, b.den_);
    const auto den = checked_mul(a.den_ / g, b.den_);
    if (!den) fail(ErrorCode::PhaseOverflow, "phase denominator exceeds 64 bits");
    const u128 num = u128(a.num_) * (*den / a.den_) + u128(b.num_) * (*den / b.den_);
    return PhaseRational(static_cast<std::uint64_t>(num % *den), *den);
  }

  friend bool operator==(const PhaseRational&, const PhaseRational&) = default;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Per-coordinate prime bases p_1..p_s. Only primality is enforced here; the
/// Halton and Weyl-sum bound operations additionally require distinct bases.
class PrimeBases {
 public:
  PrimeBases(std::initializer_list<std::uint32_t> primes) : PrimeBases(std::vector(primes)) {}
  explicit PrimeBases(std::vector<std::uint32_t> primes) : primes_(std::move(primes)) {
    if (primes_.empty()) fail(ErrorCode::EmptyBases, "at least one base is required");
    for (auto p : primes_) require_prime(p);
  }

  std::size_t size() const noexcept { return primes_.size(); }
  std::uint32_t operator[](std::size_t i) const { return primes_[i]; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }
  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }

  std::uint32_t max() const { return *std::max_element(primes_.begin(), primes_.end()); }

  bool pairwise_distinct() const {
    for (std::size_t i = 0; i < primes_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (primes_[i] == primes_[j]) return false;
    return true;
  }

  void require_distinct() const {
    for (std::size_t i = 0; i < primes_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (primes_[i] == primes_[j])
          fail(ErrorCode::DuplicateBase, "base " + std::to_string(primes_[i]) + " repeated");
  }

  friend bool operator==(const PrimeBases&, const PrimeBases&) = default;

 private:
  std::vector<std::uint32_t> primes_;
};

/// A point of [0,1)^s; coordinate i is expanded in its own base.
struct Point {
  std::vector<DigitVector> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  const DigitVector& operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const Point&, const Point&) = default;
};

/// k = (k_1..k_s), index of the s-dimensional function gamma_k and weight rho(k).
using IndexVector = std::vector<std::uint64_t>;

/// Checks that `x` lives in [0,1)^s with coordinate i in base bases[i].
inline void require_compatible(const Point& x, const PrimeBases& bases) {
  if (x.dim() != bases.size()) {
    fail(ErrorCode::DimensionMismatch, "point of dimension " + std::to_string(x.dim()) +
                                           " against " + std::to_string(bases.size()) + " bases");
  }
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].base() != bases[i]) {
      fail(ErrorCode::BaseMismatch, "coordinate " + std::to_string(i) + " has base " +
                                        std::to_string(x[i].base()) + ", expected " +
                                        std::to_string(bases[i]));
    }
  }
}

/// Radical inverse: reflects the base-p digits of n about the radix point.
inline DigitVector monna(std::uint64_t n, std::uint32_t p) {
  require_prime(p);
  return DigitVector(p, integer_digits(n, p));
}

/// Inverse of the Monna map on finite expansions: sum_j d_j p^{j-1}.
inline std::uint64_t monna_inverse(const DigitVector& x) {
  std::uint64_t n = 0;
  const auto digits = x.digits();
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    const auto scaled = checked_mul(n, x.base());
    if (!scaled || *scaled > std::numeric_limits<std::uint64_t>::max() - *it) {
      fail(ErrorCode::CountOverflow, "integer image exceeds 64 bits");
    }
    n = *scaled + *it;
  }
  return n;
}

/// Number of base-p digits that cover a double mantissa: ceil(53 ln 2 / ln p).
inline unsigned default_depth(std::uint32_t p) {
  return static_cast<unsigned>(std::ceil(53.0 * std::numbers::ln2 / std::log(static_cast<double>(p))));
}

/// Truncating base-p expansion of a double: repeatedly y <- p*y, d_j = floor(y),
/// y <- y - d_j, for j = 1..depth. Only the multiplication can round (never
/// for p = 2); the subtraction is exact since d_j <= y < 2 d_j once d_j >= 1.
/// A double that is the nearest neighbour of a p-adic rational, like 1/3 in
/// base 3, therefore ingests as that rational.
inline DigitVector float_to_digits(double x, std::uint32_t p, unsigned depth) {
  require_prime(p);
  if (!(x >= 0.0 && x < 1.0)) fail(ErrorCode::OutOfUnitInterval, std::to_string(x));
  if (depth == 0) fail(ErrorCode::InvalidArgument, "depth must be positive");
  std::vector<std::uint32_t> digits;
  digits.reserve(depth);
  const double base = p;
  double y = x;
  for (unsigned j = 0; j < depth && y != 0.0; ++j) {
    y *= base;
    const double d = std::min(std::floor(y), base - 1.0);
    y -= d;
    digits.push_back(static_cast<std::uint32_t>(d));
  }
  return DigitVector(p, std::move(digits));
}

inline DigitVector float_to_digits(double x, std::uint32_t p) {
  return float_to_digits(x, p, default_depth(p));
}

/// Phase of the k-th p-adic function at x, p = x.base():
/// gamma_k(x) = e(phi_p(k) * phi_p^+(x)). With k = kappa_0 + ... + kappa_a p^a
/// the phase is (K' * Z mod p^{a+1}) / p^{a+1}, where K' = p^{a+1} phi_p(k) is
/// the digit reversal of k and Z = x_1 + x_2 p + ... + x_{a+1} p^a. Digits of x
/// beyond position a+1 do not contribute.
inline PhaseRational gamma_phase(std::uint64_t k, const DigitVector& x) {
  if (k == 0) return {};
  const std::uint64_t p = x.base();
  const auto kappa = integer_digits(k, p);
  const auto modulus = checked_pow(p, static_cast<unsigned>(kappa.size()));
  if (!modulus) fail(ErrorCode::PhaseOverflow, "p^(a+1) exceeds 64 bits for k = " + std::to_string(k));

  std::uint64_t reversed = 0;
  for (auto d : kappa) reversed = reversed * p + d;
  std::uint64_t z = 0;
  for (std::size_t j = kappa.size(); j >= 1; --j) z = z * p + x.digit(j);

  const auto m = static_cast<std::uint64_t>((u128(reversed) * z) % *modulus);
  return PhaseRational(m, *modulus);
}

/// Base-p Walsh function: phase (kappa_0 x_1 + ... + kappa_a x_{a+1} mod p) / p.
inline PhaseRational walsh_phase(std::uint64_t k, const DigitVector& x) {
  const std::uint64_t p = x.base();
  std::uint64_t acc = 0;
  std::size_t j = 1;
  for (; k > 0; k /= p, ++j) acc = (acc + (k % p) * x.digit(j)) % p;
  return PhaseRational(acc, p);
}

/// gamma_k(x) = prod_i gamma_{k_i}(x_i).
inline std::complex<double> gamma_vec(const IndexVector& k, const Point& x, const PrimeBases& bases) {
  require_compatible(x, bases);
  if (k.size() != bases.size()) {
    fail(ErrorCode::DimensionMismatch, "index of dimension " + std::to_string(k.size()) +
                                           " against " + std::to_string(bases.size()) + " bases");
  }
  double turns = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    turns += gamma_phase(k[i], x[i]).turns();
  }
  turns -= std::floor(turns);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

}  // namespace padic
