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
// Command-line front end: Halton generation, diaphony, the Halton bound,
// prefix sweeps and the exhaustive Weyl sum check, as CSV or JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "padic_diaphony.hpp"

namespace {

using nlohmann::json;
using namespace padic;

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2, kResourceCap = 3 };

struct RunConfig {
  std::vector<std::int64_t> bases;
  std::optional<unsigned> dim;
  std::uint64_t count = 1;
  std::string method = "kernel";
  std::string mode = "fast";
  std::vector<unsigned> box;
  std::uint64_t start = 0;
  std::string format = "csv";
  unsigned workers = default_workers();
  std::uint64_t cap = std::uint64_t{1} << 22;
  std::string output;
  std::uint64_t from = 1;
  std::uint64_t to = 1;
  std::string step = "1";
};

/// Raised for bad flag values; the message names the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fraction(const DigitVector& x) {
  const BigInt den = boost::multiprecision::pow(BigInt(x.base()), static_cast<unsigned>(x.size()));
  return x.numerator().str() + "/" + den.str();
}

template <class T>
std::string join(const std::vector<T>& v, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? std::string(1, sep) : "") << v[i];
  return os.str();
}

PrimeBases resolve_bases(const RunConfig& cfg) {
  if (cfg.dim) {
    if (*cfg.dim == 0) throw UsageError("--dim: must be at least 1");
    const auto primes = first_primes(*cfg.dim);
    return PrimeBases(primes);
  }
  if (cfg.bases.empty()) throw UsageError("--bases: one of --bases or --dim is required");
  try {
    return validate_bases(cfg.bases);
  } catch (const Error& e) {
    throw UsageError(std::string("--bases: ") + e.what());
  }
}

TruncationBox resolve_box(const RunConfig& cfg, const PrimeBases& bases) {
  if (cfg.box.empty()) throw UsageError("--g: required for this command");
  if (cfg.box.size() != bases.size()) {
    throw UsageError("--g: expected " + std::to_string(bases.size()) + " entries, got " +
                     std::to_string(cfg.box.size()));
  }
  try {
    return TruncationBox(cfg.box);
  } catch (const Error& e) {
    throw UsageError(std::string("--g: ") + e.what());
  }
}

json config_echo(const RunConfig& cfg, const PrimeBases& bases) {
  json j;
  j["bases"] = std::vector<std::uint32_t>(bases.begin(), bases.end());
  j["count"] = cfg.count;
  j["start"] = cfg.start;
  j["workers"] = cfg.workers;
  if (!cfg.box.empty()) j["g"] = cfg.box;
  return j;
}

ComputeOptions options(const RunConfig& cfg) { return {.workers = cfg.workers, .enumeration_cap = cfg.cap}; }

int cmd_halton(const RunConfig& cfg, std::ostream& out) {
  const auto bases = resolve_bases(cfg);
  std::vector<Point> points;
  try {
    points = halton_stream(cfg.count, bases, cfg.start);
  } catch (const Error& e) {
    throw UsageError(std::string("--count/--start: ") + e.what());
  }
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::uint64_t i = 0; i < points.size(); ++i) {
      json coords = json::array();
      for (const auto& x : points[i].coords) {
        coords.push_back({{"fraction", fraction(x)}, {"decimal", x.to_double()}});
      }
      rows.push_back({{"n", cfg.start + i}, {"coords", coords}});
    }
    out << json{{"command", "halton"}, {"config", config_echo(cfg, bases)}, {"points", rows}}.dump(2)
        << "\n";
    return kOk;
  }
  out << "n";
  for (std::size_t i = 1; i <= bases.size(); ++i) out << ",x" << i << ",x" << i << "_decimal";
  out << "\n";
  for (std::uint64_t i = 0; i < points.size(); ++i) {
    out << cfg.start + i;
    for (const auto& x : points[i].coords) out << "," << fraction(x) << "," << decimal(x.to_double());
    out << "\n";
  }
  return kOk;
}

int cmd_diaphony(const RunConfig& cfg, std::ostream& out) {
  const auto bases = resolve_bases(cfg);
  std::vector<Point> points;
  try {
    points = halton_stream(cfg.count, bases, cfg.start);
  } catch (const Error& e) {
    throw UsageError(std::string("--count/--start: ") + e.what());
  }
  DiaphonyReport report;
  if (cfg.method == "spectral") {
    report = diaphony_spectral(points, bases, resolve_box(cfg, bases), options(cfg));
  } else {
    report = diaphony_kernel(points, bases, cfg.mode == "exact" ? KernelMode::Exact : KernelMode::Fast,
                             options(cfg));
  }
  if (report.clamped > 0.0) {
    std::cerr << "note: F^2 clamped into [0,1] by " << decimal(report.clamped) << "\n";
  }
  const double wce = worst_case_error(report, bases);
  if (cfg.format == "json") {
    json j{{"command", "diaphony"},
           {"config", config_echo(cfg, bases)},
           {"N", report.n_points},
           {"method", to_string(report.method)},
           {"F", report.f},
           {"F2", report.f_squared},
           {"worst_case_error", wce}};
    if (report.enclosure) {
      j["lower_F2"] = report.enclosure->lower;
      j["upper_F2"] = report.enclosure->upper;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "N,method,F,F2,worst_case_error,lower_F2,upper_F2\n";
  out << report.n_points << "," << to_string(report.method) << "," << decimal(report.f) << ","
      << decimal(report.f_squared) << "," << decimal(wce) << ",";
  if (report.enclosure) out << decimal(report.enclosure->lower) << "," << decimal(report.enclosure->upper);
  else out << ",";
  out << "\n";
  return kOk;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  const auto bases = resolve_bases(cfg);
  if (cfg.count == 0) throw UsageError("--count: must be positive");
  const auto b = theorem1_bound(bases, cfg.count);
  const double bound_f = std::sqrt(b.bound_f_squared);
  if (cfg.format == "json") {
    out << json{{"command", "bound"}, {"config", config_echo(cfg, bases)}, {"N", cfg.count},
                {"c", b.c}, {"d", b.d}, {"bound_F2", b.bound_f_squared}, {"bound_F", bound_f}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "N,c,d,bound_F2,bound_F\n";
  out << cfg.count << "," << decimal(b.c) << "," << decimal(b.d) << "," << decimal(b.bound_f_squared)
      << "," << decimal(bound_f) << "\n";
  return kOk;
}

std::vector<std::uint64_t> sweep_sizes(const RunConfig& cfg) {
  if (cfg.from < 1) throw UsageError("--from: must be at least 1");
  if (cfg.to < cfg.from) throw UsageError("--to: must not be below --from");
  std::vector<std::uint64_t> sizes;
  if (cfg.step == "pow2") {
    for (std::uint64_t n = 1; n <= cfg.to; n *= 2) {
      if (n >= cfg.from) sizes.push_back(n);
      if (n > cfg.to / 2) break;
    }
    return sizes;
  }
  std::uint64_t stride = 0;
  try {
    std::size_t used = 0;
    stride = std::stoull(cfg.step, &used);
    if (used != cfg.step.size() || cfg.step.front() == '-') stride = 0;
  } catch (const std::exception&) {
    stride = 0;
  }
  if (stride == 0) throw UsageError("--step: expected 'pow2' or a positive integer");
  for (std::uint64_t n = cfg.from; n <= cfg.to; n += stride) {
    sizes.push_back(n);
    if (cfg.to - n < stride) break;
  }
  return sizes;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto bases = resolve_bases(cfg);
  const auto sizes = sweep_sizes(cfg);
  if (sizes.empty()) throw UsageError("--from/--to: range contains no sample sizes");
  const auto points = halton_stream(sizes.back(), bases);
  const auto reports = diaphony_kernel_prefixes(points, bases, options(cfg));

  json rows = json::array();
  if (cfg.format != "json") out << "N,F,F2,bound_F2,ratio\n";
  for (auto n : sizes) {
    const auto& r = reports[n - 1];
    const auto b = theorem1_bound(bases, n);
    const double ratio = r.f_squared / b.bound_f_squared;
    if (cfg.format == "json") {
      rows.push_back({{"N", n}, {"F", r.f}, {"F2", r.f_squared}, {"bound_F2", b.bound_f_squared},
                      {"ratio", ratio}});
    } else {
      out << n << "," << decimal(r.f) << "," << decimal(r.f_squared) << ","
          << decimal(b.bound_f_squared) << "," << decimal(ratio) << "\n";
    }
  }
  if (cfg.format == "json") {
    auto echo = config_echo(cfg, bases);
    echo["from"] = cfg.from;
    echo["to"] = cfg.to;
    echo["step"] = cfg.step;
    out << json{{"command", "sweep"}, {"config", echo}, {"rows", rows}}.dump(2) << "\n";
  }
  return kOk;
}

int cmd_verify_lemma(const RunConfig& cfg, std::ostream& out) {
  const auto bases = resolve_bases(cfg);
  const auto box = resolve_box(cfg, bases);
  if (cfg.count == 0) throw UsageError("--count: must be positive");
  const auto r = verify_lemma(cfg.count, bases, box, options(cfg));
  if (cfg.format == "json") {
    out << json{{"command", "verify-lemma"}, {"config", config_echo(cfg, bases)}, {"N", cfg.count},
                {"worst_ratio", r.worst_ratio}, {"worst_index", r.worst_index},
                {"violations", r.violations}, {"checked", r.checked}}
               .dump(2)
        << "\n";
  } else {
    out << "N,g,worst_ratio,worst_index,violations,checked\n";
    out << cfg.count << "," << join(box.values(), ';') << "," << decimal(r.worst_ratio) << ","
        << join(r.worst_index, ';') << "," << r.violations << "," << r.checked << "\n";
  }
  return r.violations == 0 ? kOk : kViolation;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  auto* bases = cmd->add_option("--bases", cfg.bases, "Comma-separated prime bases, e.g. 2,3,5")
                    ->delimiter(',');
  auto* dim = cmd->add_option("--dim", cfg.dim, "Use the first s primes as bases");
  bases->excludes(dim);
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--out", cfg.output, "Output file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic diaphony of point sequences and the Halton sequence"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* halton = app.add_subcommand("halton", "Emit Halton points as exact fractions and decimals");
  add_common(halton, cfg);
  halton->add_option("--count", cfg.count, "Number of points")->required();
  halton->add_option("--start", cfg.start, "Index of the first point");

  auto* diaphony = app.add_subcommand("diaphony", "Diaphony of a Halton prefix");
  add_common(diaphony, cfg);
  diaphony->add_option("--count", cfg.count, "Number of points N")->required();
  diaphony->add_option("--start", cfg.start, "Index of the first point");
  diaphony->add_option("--method", cfg.method, "kernel or spectral")
      ->check(CLI::IsMember({"kernel", "spectral"}));
  diaphony->add_option("--mode", cfg.mode, "Kernel accumulation: fast or exact")
      ->check(CLI::IsMember({"fast", "exact"}));
  diaphony->add_option("--g", cfg.box, "Truncation box, one entry per dimension")->delimiter(',');
  diaphony->add_option("--cap", cfg.cap, "Largest admissible number of box indices");

  auto* bound = app.add_subcommand("bound", "Upper bound on F_N^2 for Halton prefixes");
  add_common(bound, cfg);
  bound->add_option("--count", cfg.count, "Number of points N")->required();

  auto* sweep = app.add_subcommand("sweep", "Diaphony against the bound for a range of N");
  add_common(sweep, cfg);
  sweep->add_option("--from", cfg.from, "Smallest N")->required();
  sweep->add_option("--to", cfg.to, "Largest N")->required();
  sweep->add_option("--step", cfg.step, "'pow2' or a positive stride");

  auto* lemma = app.add_subcommand("verify-lemma", "Check every Weyl sum in a box against its bound");
  add_common(lemma, cfg);
  lemma->add_option("--count", cfg.count, "Number of points N")->required();
  lemma->add_option("--g", cfg.box, "Truncation box, one entry per dimension")
      ->delimiter(',')
      ->required();
  lemma->add_option("--cap", cfg.cap, "Largest admissible number of box indices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      std::cerr << "--out: cannot open " << cfg.output << "\n";
      return kUsage;
    }
  }
  std::ostream& out = cfg.output.empty() ? std::cout : file;

  try {
    if (*halton) return cmd_halton(cfg, out);
    if (*diaphony) return cmd_diaphony(cfg, out);
    if (*bound) return cmd_bound(cfg, out);
    if (*sweep) return cmd_sweep(cfg, out);
    if (*lemma) return cmd_verify_lemma(cfg, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BoxTooLarge ? kResourceCap : kUsage;
  }
  return kUsage;
}
