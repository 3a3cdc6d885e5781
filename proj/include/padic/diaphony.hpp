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

// The p-adic diaphony of a finite point set, computed two ways:
//
//   kernel:   F_N^2 = (-1 + N^{-2} sum_{n,m} prod_i (1 + theta_{p_i}(x_{n,i}, x_{m,i}))) / (sigma_p - 1)
//   spectral: the defining series restricted to the box 0 <= k_i < p_i^{g_i},
//             which is a lower bound on F_N^2, plus the analytic weight mass
//             of the remaining indices, which gives an upper bound.
//
// Also the worst-case error identity, the bound on F_N^2 for Halton prefixes
// and an exhaustive check of the Weyl sum bound behind it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padic/arith.hpp"
#include "padic/halton.hpp"
#include "padic/kernel.hpp"
#include "padic/padic.hpp"
#include "padic/parallel.hpp"
#include "padic/summation.hpp"
#include "padic/weights.hpp"

namespace padic {

enum class Method { Kernel, Spectral };
enum class KernelMode { Fast, Exact };

inline const char* to_string(Method m) { return m == Method::Kernel ? "kernel" : "spectral"; }

struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;
};

struct DiaphonyReport {
  std::uint64_t n_points = 0;
  double f = 0.0;
  double f_squared = 0.0;
  Method method = Method::Kernel;
  /// Bounds on F_N^2 (spectral only).
  std::optional<Enclosure> enclosure;
  std::optional<TruncationBox> box;
  /// Amount by which the raw F_N^2 fell outside [0,1] and was clamped.
  double clamped = 0.0;
};

struct BoundReport {
  double c = 0.0;
  double d = 0.0;
  double bound_f_squared = 0.0;
};

struct LemmaReport {
  TruncationBox box;
  double worst_ratio = 0.0;
  IndexVector worst_index;
  std::uint64_t violations = 0;
  std::uint64_t checked = 0;
};

struct ComputeOptions {
  unsigned workers = default_workers();
  /// Largest admissible number of index vectors in a truncation box.
  std::uint64_t enumeration_cap = std::uint64_t{1} << 22;
};

/// Ratio |S(k)| * ||sum_j phi_{p_j}(k_j)|| above this counts as a violation.
inline constexpr double kLemmaTolerance = 1.0 + 1e-9;

namespace detail {

inline void require_points(std::span<const Point> points, const PrimeBases& bases) {
  if (points.empty()) fail(ErrorCode::InvalidArgument, "at least one point is required");
  for (const auto& x : points) require_compatible(x, bases);
}

inline DiaphonyReport make_report(std::uint64_t n, double raw_f_squared, Method method) {
  DiaphonyReport r;
  r.n_points = n;
  r.method = method;
  r.f_squared = std::clamp(raw_f_squared, 0.0, 1.0);
  r.clamped = std::abs(raw_f_squared - r.f_squared);
  r.f = std::sqrt(r.f_squared);
  return r;
}

inline double square(double x) { return x * x; }

}  // namespace detail

/// S(k) = sum_n gamma_k(x_n), compensated.
inline std::complex<double> weyl_sum(std::span<const Point> points, const IndexVector& k,
                                     const PrimeBases& bases) {
  detail::require_points(points, bases);
  CompensatedComplexSum s;
  for (const auto& x : points) s += gamma_vec(k, x, bases);
  return s.value();
}

// ---------------------------------------------------------------------------
// Kernel method

/// R_j = sum_{m<j} K(x_j, x_m) in double precision, one compensated sum per row.
inline std::vector<double> kernel_row_sums(std::span<const Point> points, const PrimeBases& bases,
                                           const ComputeOptions& opts = {}) {
  detail::require_points(points, bases);
  const auto s = bases.size();
  std::vector<KernelTable> tables;
  tables.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    std::size_t longest = 0;
    for (const auto& x : points) longest = std::max(longest, x[i].size());
    tables.emplace_back(bases[i], longest);
  }

  const std::size_t n = points.size();
  std::vector<double> rows(n, 0.0);
  constexpr std::size_t kBlock = 32;
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  parallel_tasks(blocks, opts.workers, [&](std::size_t b) {
    const auto last = std::min(n, (b + 1) * kBlock);
    for (std::size_t j = b * kBlock; j < last; ++j) {
      CompensatedSum row;
      for (std::size_t m = 0; m < j; ++m) {
        double k = 1.0;
        for (std::size_t i = 0; i < s && k != 0.0; ++i) k *= tables[i](points[j][i], points[m][i]);
        row += k;
      }
      rows[j] = row.value();
    }
  });
  return rows;
}

/// Unclamped F_N^2 for every prefix N = 1..points.size(), fast kernel path.
/// Uses sum_{n,m<N} K = N sigma_p + 2 sum_{j<N} R_j.
inline std::vector<double> kernel_prefix_f_squared(std::span<const Point> points,
                                                   const PrimeBases& bases,
                                                   const ComputeOptions& opts = {}) {
  const auto rows = kernel_row_sums(points, bases, opts);
  const double sig = static_cast<double>(sigma(bases));
  std::vector<double> out;
  out.reserve(rows.size());
  CompensatedSum total;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    total += sig;
    total += 2.0 * rows[j];
    const double n = static_cast<double>(j + 1);
    out.push_back((total.value() / (n * n) - 1.0) / (sig - 1.0));
  }
  return out;
}

inline std::vector<DiaphonyReport> diaphony_kernel_prefixes(std::span<const Point> points,
                                                            const PrimeBases& bases,
                                                            const ComputeOptions& opts = {}) {
  const auto raw = kernel_prefix_f_squared(points, bases, opts);
  std::vector<DiaphonyReport> out;
  out.reserve(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) {
    out.push_back(detail::make_report(j + 1, raw[j], Method::Kernel));
  }
  return out;
}

/// Exact F_N^2 from the closed-form kernel: every K(x_n, x_m) is an exact
/// rational and the double sum is accumulated without rounding.
inline ExactRational diaphony_kernel_exact_squared(std::span<const Point> points,
                                                   const PrimeBases& bases,
                                                   const ComputeOptions& opts = {}) {
  detail::require_points(points, bases);
  const std::size_t n = points.size();
  std::vector<ExactRational> rows(n);
  parallel_tasks(n, opts.workers, [&](std::size_t j) {
    ExactRational row = 0;
    for (std::size_t m = 0; m < n; ++m) row += kernel_point(points[j], points[m], bases);
    rows[j] = row;
  });
  ExactRational total = 0;
  for (const auto& r : rows) total += r;
  const ExactRational nn = ExactRational(BigInt(n) * n);
  return (total / nn - 1) / (ExactRational(BigInt(sigma(bases))) - 1);
}

inline DiaphonyReport diaphony_kernel(std::span<const Point> points, const PrimeBases& bases,
                                      KernelMode mode = KernelMode::Fast,
                                      const ComputeOptions& opts = {}) {
  if (mode == KernelMode::Exact) {
    return detail::make_report(points.size(),
                               to_double(diaphony_kernel_exact_squared(points, bases, opts)),
                               Method::Kernel);
  }
  return detail::make_report(points.size(), kernel_prefix_f_squared(points, bases, opts).back(),
                             Method::Kernel);
}

// ---------------------------------------------------------------------------
// Spectral enumeration

struct GammaPhase {
  PhaseRational operator()(std::uint64_t k, const DigitVector& x) const { return gamma_phase(k, x); }
};

struct WalshPhase {
  PhaseRational operator()(std::uint64_t k, const DigitVector& x) const { return walsh_phase(k, x); }
};

/// Enumerates every nonzero k in the box 0 <= k_i < p_i^{g_i} and calls
///   visitor(k, rho(k), terms)
/// with terms[n] = prod_i e(phase(k_i, x_{n,i})). Phases are computed exactly
/// and mapped onto a table of p_i^{g_i}-th roots of unity.
///
/// The index range is cut into a fixed number of contiguous chunks, each with
/// its own copy of `prototype`; the copies are returned in enumeration order,
/// so merging them front to back gives a result that does not depend on the
/// worker count.
template <class PhaseFn, class Visitor>
std::vector<Visitor> visit_weyl_terms(std::span<const Point> points, const PrimeBases& bases,
                                      const TruncationBox& box, PhaseFn phase,
                                      const Visitor& prototype, const ComputeOptions& opts = {}) {
  detail::require_points(points, bases);
  require_same_dim(bases, box);
  const auto total = box_cardinality(bases, box);
  if (!total || *total > opts.enumeration_cap) {
    fail(ErrorCode::BoxTooLarge, "box exceeds the enumeration cap of " +
                                     std::to_string(opts.enumeration_cap) + " indices");
  }

  const std::size_t s = bases.size();
  const std::size_t n = points.size();
  std::vector<std::uint64_t> side(s);
  for (std::size_t i = 0; i < s; ++i) side[i] = *checked_pow(bases[i], box[i]);

  // The dimension with the fewest indices is enumerated innermost; its rows
  // are reused for every outer index, so they are tabulated once.
  std::vector<std::size_t> order(s);
  for (std::size_t i = 0; i < s; ++i) order[i] = i;
  const auto inner_it = std::min_element(order.begin(), order.end(),
                                         [&](auto a, auto b) { return side[a] < side[b]; });
  std::rotate(inner_it, inner_it + 1, order.end());
  const std::size_t inner = order.back();

  std::vector<std::vector<std::complex<double>>> roots(s);
  std::vector<std::vector<double>> weights(s);
  for (std::size_t i = 0; i < s; ++i) {
    roots[i].resize(side[i]);
    weights[i].resize(side[i]);
    for (std::uint64_t j = 0; j < side[i]; ++j) {
      roots[i][j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                        static_cast<double>(side[i]));
      weights[i][j] = rho_double(j, bases[i]);
    }
  }

  auto fill_row = [&](std::size_t dim, std::uint64_t k, std::span<std::complex<double>> row) {
    for (std::size_t m = 0; m < n; ++m) {
      const auto ph = phase(k, points[m][dim]);
      if (side[dim] % ph.denominator() != 0) {
        fail(ErrorCode::PhaseOverflow, "phase denominator does not divide the root table size");
      }
      row[m] = roots[dim][ph.numerator() * (side[dim] / ph.denominator())];
    }
  };

  constexpr std::uint64_t kInnerTableLimit = std::uint64_t{1} << 24;
  const bool tabulate_inner = s > 1 && side[inner] * n <= kInnerTableLimit;
  std::vector<std::complex<double>> inner_table;
  if (tabulate_inner) {
    inner_table.resize(side[inner] * n);
    for (std::uint64_t k = 0; k < side[inner]; ++k) {
      fill_row(inner, k, std::span(inner_table).subspan(k * n, n));
    }
  }

  constexpr std::uint64_t kChunks = 256;
  const std::uint64_t chunks = std::min<std::uint64_t>(kChunks, *total);
  std::vector<Visitor> results(chunks, prototype);

  parallel_tasks(chunks, opts.workers, [&](std::size_t c) {
    const std::uint64_t begin = *total * c / chunks;
    const std::uint64_t end = *total * (c + 1) / chunks;
    Visitor& visitor = results[c];

    // digit[d] is the index along dimension order[d]; order.back() varies fastest.
    std::vector<std::uint64_t> digit(s);
    {
      std::uint64_t rest = begin;
      for (std::size_t d = s; d-- > 0;) {
        digit[d] = rest % side[order[d]];
        rest /= side[order[d]];
      }
    }

    // level[d][m] = prod_{d' <= d} gamma along the outer dimensions.
    const std::size_t outer = s - 1;
    std::vector<std::vector<std::complex<double>>> level(outer, std::vector<std::complex<double>>(n));
    std::vector<std::complex<double>> row(n), terms(n);
    auto rebuild = [&](std::size_t from) {
      for (std::size_t d = from; d < outer; ++d) {
        fill_row(order[d], digit[d], row);
        for (std::size_t m = 0; m < n; ++m) level[d][m] = d == 0 ? row[m] : level[d - 1][m] * row[m];
      }
    };
    rebuild(0);

    IndexVector k(s);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (idx != begin) {
        std::size_t d = s - 1;
        while (++digit[d] == side[order[d]]) {
          digit[d] = 0;
          --d;
        }
        if (d < outer) rebuild(d);
      }
      if (idx == 0) continue;  // k = 0

      std::span<const std::complex<double>> inner_row;
      if (tabulate_inner) {
        inner_row = std::span<const std::complex<double>>(inner_table).subspan(digit[s - 1] * n, n);
      } else {
        fill_row(inner, digit[s - 1], row);
        inner_row = row;
      }
      if (outer == 0) {
        std::copy(inner_row.begin(), inner_row.end(), terms.begin());
      } else {
        for (std::size_t m = 0; m < n; ++m) terms[m] = level[outer - 1][m] * inner_row[m];
      }

      double weight = 1.0;
      for (std::size_t d = 0; d < s; ++d) {
        k[order[d]] = digit[d];
        weight *= weights[order[d]][digit[d]];
      }
      visitor(std::span<const std::uint64_t>(k), weight,
              std::span<const std::complex<double>>(terms));
    }
  });
  return results;
}

namespace detail {

/// Accumulates sum_k rho(k) |S_N(k)|^2, for the final N or for every prefix.
class SpectralAccumulator {
 public:
  SpectralAccumulator(std::size_t n, bool prefixes) : acc_(prefixes ? n : 1), prefixes_(prefixes) {}

  void operator()(std::span<const std::uint64_t>, double weight,
                  std::span<const std::complex<double>> terms) {
    CompensatedComplexSum s;
    if (prefixes_) {
      for (std::size_t m = 0; m < terms.size(); ++m) {
        s += terms[m];
        acc_[m] += weight * std::norm(s.value());
      }
    } else {
      for (auto t : terms) s += t;
      acc_[0] += weight * std::norm(s.value());
    }
  }

  void merge(const SpectralAccumulator& other) {
    for (std::size_t m = 0; m < acc_.size(); ++m) acc_[m].merge(other.acc_[m]);
  }

  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(acc_.size());
    for (const auto& a : acc_) out.push_back(a.value());
    return out;
  }

 private:
  std::vector<CompensatedSum> acc_;
  bool prefixes_;
};

template <class PhaseFn>
std::vector<double> spectral_sums(std::span<const Point> points, const PrimeBases& bases,
                                  const TruncationBox& box, PhaseFn phase, bool prefixes,
                                  const ComputeOptions& opts) {
  auto parts = visit_weyl_terms(points, bases, box, phase,
                                SpectralAccumulator(points.size(), prefixes), opts);
  SpectralAccumulator total(points.size(), prefixes);
  for (const auto& p : parts) total.merge(p);
  return total.values();
}

inline DiaphonyReport spectral_report(std::uint64_t n, double weighted_sum, double sig,
                                      double tail, const TruncationBox& box) {
  const double lower = weighted_sum / (static_cast<double>(n) * static_cast<double>(n)) / (sig - 1.0);
  auto r = make_report(n, lower, Method::Spectral);
  r.enclosure = Enclosure{lower, lower + tail};
  r.box = box;
  return r;
}

}  // namespace detail

/// sum_{k in box, k != 0} rho(k) |sum_n w_k(x_n)|^2 for the function system
/// selected by `phase` (gamma_phase or walsh_phase). Not normalized.
template <class PhaseFn = GammaPhase>
double truncated_spectral_sum(std::span<const Point> points, const PrimeBases& bases,
                              const TruncationBox& box, PhaseFn phase = {},
                              const ComputeOptions& opts = {}) {
  return detail::spectral_sums(points, bases, box, phase, false, opts).front();
}

/// Weight mass of the indices outside the box, normalized:
/// (sigma_p - sigma_p(g)) / (sigma_p - 1).
inline ExactRational spectral_tail(const PrimeBases& bases, const TruncationBox& box) {
  const ExactRational sig = ExactRational(BigInt(sigma(bases)));
  return (sig - sigma_g(bases, box)) / (sig - 1);
}

/// Truncated series T(g) as f_squared, with lower = T(g) <= F_N^2 <= T(g) + tail = upper.
inline DiaphonyReport diaphony_spectral(std::span<const Point> points, const PrimeBases& bases,
                                        const TruncationBox& box, const ComputeOptions& opts = {}) {
  const double sum = truncated_spectral_sum(points, bases, box, GammaPhase{}, opts);
  return detail::spectral_report(points.size(), sum, static_cast<double>(sigma(bases)),
                                 to_double(spectral_tail(bases, box)), box);
}

/// diaphony_spectral for every prefix N = 1..points.size() in one enumeration.
inline std::vector<DiaphonyReport> diaphony_spectral_prefixes(std::span<const Point> points,
                                                              const PrimeBases& bases,
                                                              const TruncationBox& box,
                                                              const ComputeOptions& opts = {}) {
  const auto sums = detail::spectral_sums(points, bases, box, GammaPhase{}, true, opts);
  const double sig = static_cast<double>(sigma(bases));
  const double tail = to_double(spectral_tail(bases, box));
  std::vector<DiaphonyReport> out;
  out.reserve(sums.size());
  for (std::size_t j = 0; j < sums.size(); ++j) {
    out.push_back(detail::spectral_report(j + 1, sums[j], sig, tail, box));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Worst-case error and bounds

/// Worst-case integration error of the equal-weight rule: sqrt(sigma_p - 1) F_N.
inline double worst_case_error(const DiaphonyReport& report, const PrimeBases& bases) {
  return std::sqrt(static_cast<double>(sigma(bases)) - 1.0) * report.f;
}

/// F_N^2 <= c (ln N)^s / N^2 + d / N^2 for Halton prefixes, with
/// c = (pi^2/3) prod_j (1 + 2 p_j^2 / ln p_j) / (sigma_p - 1) and d = 2 s max p_i.
inline BoundReport theorem1_bound(const PrimeBases& bases, std::uint64_t n_points) {
  bases.require_distinct();
  if (n_points == 0) fail(ErrorCode::InvalidArgument, "N must be positive");
  double prod = 1.0;
  for (auto p : bases) {
    const double pd = p;
    prod *= 1.0 + 2.0 * pd * pd / std::log(pd);
  }
  BoundReport r;
  r.c = prod * (std::numbers::pi * std::numbers::pi / 3.0) / (static_cast<double>(sigma(bases)) - 1.0);
  r.d = 2.0 * static_cast<double>(bases.size()) * bases.max();
  const double n = static_cast<double>(n_points);
  r.bound_f_squared =
      r.c * std::pow(std::log(n), static_cast<double>(bases.size())) / (n * n) + r.d / (n * n);
  return r;
}

/// 1 / || sum_j phi_{p_j}(k_j) ||, the Weyl sum bound for Halton prefixes.
inline double lemma_bound(const IndexVector& k, const PrimeBases& bases) {
  if (k.size() != bases.size()) {
    fail(ErrorCode::DimensionMismatch, "index of dimension " + std::to_string(k.size()) +
                                           " against " + std::to_string(bases.size()) + " bases");
  }
  bases.require_distinct();
  if (std::all_of(k.begin(), k.end(), [](auto v) { return v == 0; })) {
    fail(ErrorCode::ZeroIndex, "k must be nonzero");
  }
  ExactRational sum = 0;
  for (std::size_t j = 0; j < k.size(); ++j) sum += monna(k[j], bases[j]).value();
  // Each phi lies in [0,1), so the integer part is below s.
  const ExactRational frac =
      sum - ExactRational(BigInt(boost::multiprecision::numerator(sum) /
                                 boost::multiprecision::denominator(sum)));
  const ExactRational dist = std::min(frac, ExactRational(1) - frac);
  return to_double(1 / dist);
}

namespace detail {

/// Tracks max |S(k)| * ||sum_j phi_{p_j}(k_j)|| over the enumerated indices.
/// The distance to the nearest integer is computed over the common
/// denominator D = prod_j p_j^{g_j}, so it is exact until the final division.
class LemmaVisitor {
 public:
  LemmaVisitor(const std::vector<std::vector<std::uint64_t>>* scaled,
               const std::vector<std::uint64_t>* cofactor, std::uint64_t denominator)
      : scaled_(scaled), cofactor_(cofactor), denominator_(denominator) {}

  void operator()(std::span<const std::uint64_t> k, double,
                  std::span<const std::complex<double>> terms) {
    CompensatedComplexSum s;
    for (auto t : terms) s += t;
    u128 r = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
      r = (r + u128((*scaled_)[j][k[j]]) * (*cofactor_)[j]) % denominator_;
    }
    const auto residue = static_cast<std::uint64_t>(r);
    const auto nearest = std::min(residue, denominator_ - residue);
    const double ratio = std::abs(s.value()) * static_cast<double>(nearest) /
                         static_cast<double>(denominator_);
    ++checked_;
    // residue == 0 would put sum phi in Z, which distinct primes exclude.
    if (ratio > kLemmaTolerance || residue == 0) ++violations_;
    if (worst_index_.empty() || ratio > worst_ratio_) {
      worst_ratio_ = ratio;
      worst_index_.assign(k.begin(), k.end());
    }
  }

  void merge(const LemmaVisitor& other) {
    checked_ += other.checked_;
    violations_ += other.violations_;
    if (!other.worst_index_.empty() && (worst_index_.empty() || other.worst_ratio_ > worst_ratio_)) {
      worst_ratio_ = other.worst_ratio_;
      worst_index_ = other.worst_index_;
    }
  }

  double worst_ratio() const { return worst_ratio_; }
  const IndexVector& worst_index() const { return worst_index_; }
  std::uint64_t violations() const { return violations_; }
  std::uint64_t checked() const { return checked_; }

 private:
  const std::vector<std::vector<std::uint64_t>>* scaled_;
  const std::vector<std::uint64_t>* cofactor_;
  std::uint64_t denominator_;
  double worst_ratio_ = 0.0;
  IndexVector worst_index_;
  std::uint64_t violations_ = 0;
  std::uint64_t checked_ = 0;
};

}  // namespace detail

/// Compares |S(k)| against 1/||sum_j phi_{p_j}(k_j)|| for every nonzero k in
/// the box, over the first `n_points` Halton points.
inline LemmaReport verify_lemma(std::uint64_t n_points, const PrimeBases& bases,
                                const TruncationBox& box, const ComputeOptions& opts = {}) {
  bases.require_distinct();
  require_same_dim(bases, box);
  const auto total = box_cardinality(bases, box);
  if (!total || *total > opts.enumeration_cap) {
    fail(ErrorCode::BoxTooLarge, "box exceeds the enumeration cap of " +
                                     std::to_string(opts.enumeration_cap) + " indices");
  }
  const auto points = halton_stream(n_points, bases);

  // phi_p(k) * p^g as an integer, for every k < p^g.
  const std::size_t s = bases.size();
  std::vector<std::vector<std::uint64_t>> scaled(s);
  std::vector<std::uint64_t> cofactor(s);
  for (std::size_t j = 0; j < s; ++j) {
    const std::uint64_t side = *checked_pow(bases[j], box[j]);
    cofactor[j] = *total / side;
    scaled[j].resize(side);
    for (std::uint64_t k = 0; k < side; ++k) {
      const auto x = monna(k, bases[j]);
      scaled[j][k] = x.numerator().convert_to<std::uint64_t>() *
                     *checked_pow(bases[j], box[j] - static_cast<unsigned>(x.size()));
    }
  }

  auto parts = visit_weyl_terms(std::span<const Point>(points), bases, box, GammaPhase{},
                                detail::LemmaVisitor(&scaled, &cofactor, *total), opts);
  detail::LemmaVisitor merged(&scaled, &cofactor, *total);
  for (const auto& p : parts) merged.merge(p);

  return LemmaReport{box, merged.worst_ratio(), merged.worst_index(), merged.violations(),
                     merged.checked()};
}

}  // namespace padic
