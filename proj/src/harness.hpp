// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "params.hpp"
#include "table.hpp"

namespace symdpp {

struct SamplingOptions {
  std::uint64_t samples = 10000;  // per replicate
  int replicates = 1;
  std::uint64_t seed = 1;
  std::vector<int> anchors;  // pair counts are kept for these sites only
  int threads = 0;           // 0: SYMDPP_THREADS or hardware concurrency
  bool keep_indicators = false;
};

// Counts of one replicate over the positive lattice a = 1..n+k.
struct ReplicateCounts {
  std::vector<std::uint64_t> one;   // [a-1]
  std::vector<std::uint64_t> pair;  // [anchor][a-1], joint occupation with the anchor
  std::uint64_t digest = 0;
};

struct SampleBatch {
  EnsembleParams params;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  int replicates = 0;
  std::vector<int> anchors;
  std::vector<ReplicateCounts> reps;
  // Row per sample (replicate-major), filled only with keep_indicators.
  std::vector<std::vector<std::uint8_t>> indicators;
  std::uint64_t digest = 0;  // independent of thread scheduling
  double seconds = 0;

  int width() const { return params.n + params.k; }
  std::uint64_t total() const { return samples * static_cast<std::uint64_t>(replicates); }
  int anchor_slot(int a) const;
  // Pooled estimates over every replicate.
  double density(int a) const;
  double pair_density(int anchor, int a) const;
};

// Above this many n*k*samples the sampler refuses with Status::resource.
constexpr double kSamplingBudget = 1e11;
constexpr std::uint64_t kIndicatorBudget = 50'000'000;  // bytes

SampleBatch run_sampling(const EnsembleParams& prm, const SamplingOptions& opt);

struct KernelRatioRow {
  int j = 0;
  double q1 = 0, median = 0, q3 = 0;
  double whisker_lo = 0, whisker_hi = 0;
  double mean = 0, se = 0;    // across replicates
  double pooled = 0;          // from the pooled counts
  double k2_pooled = 0;       // raw K(i,j)^2 estimate, unclamped
  int sign = 1;               // taken from the CD kernel
  int clamped = 0;            // replicates whose K^2 estimate went negative
};

struct EmpiricalStats {
  int anchor = 0;
  std::vector<KernelRatioRow> rows;
  int warnings = 0;  // total clamped estimates
};

// Per replicate K^2(i,j) = rho(i) rho(j) - rho2(i,j), ratio sign * sqrt(K^2) / rho(i).
EmpiricalStats empirical_kernel_ratio(const SampleBatch& batch, int anchor, int j_lo, int j_hi);

// Quartiles by linear interpolation between order statistics.
double quantile_sorted(const std::vector<double>& v, double q);

struct Comparison {
  EnsembleParams params;
  int anchor = 0;
  double x = 0;    // anchor / K
  double rho = 0;  // limit density at x
  Table table;
  double sup_cd_sine = 0;
  bool has_empirical = false;
  double inside_fraction = 0;  // share of rows with the CD ratio inside the whiskers
  int warnings = 0;
};

// Columns j, delta, q1, median, q3, whisker_lo, whisker_hi, cd_ratio, sine_ratio.
// Without a batch the empirical columns are NaN.
Comparison compare_curves(const EnsembleParams& prm, int anchor, int radius, const SampleBatch* batch = nullptr);

// sup over |j - anchor| <= radius of |CD ratio - sine ratio|.
double sup_cd_sine(const EnsembleParams& prm, int anchor, int radius);

}  // namespace symdpp
