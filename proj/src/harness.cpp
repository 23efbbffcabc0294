// SPDX-License-Identifier: Apache-2.0
#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "asymptotics.hpp"
#include "combinatorics.hpp"
#include "error.hpp"
#include "kernel.hpp"
#include "parallel.hpp"

namespace symdpp {

int SampleBatch::anchor_slot(int a) const {
  for (size_t s = 0; s < anchors.size(); ++s)
    if (anchors[s] == a) return static_cast<int>(s);
  return -1;
}

double SampleBatch::density(int a) const {
  if (a < 1 || a > width()) fail(Status::domain, "site outside the lattice");
  std::uint64_t c = 0;
  for (const auto& r : reps) c += r.one[a - 1];
  return static_cast<double>(c) / static_cast<double>(total());
}

double SampleBatch::pair_density(int anchor, int a) const {
  int s = anchor_slot(anchor);
  if (s < 0) fail(Status::invalid_argument, "no pair counts were kept for this anchor");
  if (a < 1 || a > width()) fail(Status::domain, "site outside the lattice");
  std::uint64_t c = 0;
  for (const auto& r : reps) c += r.pair[static_cast<size_t>(s) * width() + a - 1];
  return static_cast<double>(c) / static_cast<double>(total());
}

SampleBatch run_sampling(const EnsembleParams& prm, const SamplingOptions& opt) {
  require_half(prm, "sampling");
  if (opt.samples < 1 || opt.replicates < 1) fail(Status::invalid_argument, "need at least one sample and one replicate");
  const int width = prm.n + prm.k;
  for (int a : opt.anchors)
    if (a < 1 || a > width) fail(Status::domain, "anchor outside the lattice");
  const double total = static_cast<double>(opt.samples) * opt.replicates;
  if (static_cast<double>(prm.n) * prm.k * total > kSamplingBudget)
    fail(Status::resource, "n*k*samples exceeds the sampling budget");
  if (opt.keep_indicators && total * width > static_cast<double>(kIndicatorBudget))
    fail(Status::resource, "indicator storage exceeds the memory budget");

  SampleBatch b;
  b.params = prm;
  b.seed = opt.seed;
  b.samples = opt.samples;
  b.replicates = opt.replicates;
  b.anchors = opt.anchors;
  b.reps.resize(opt.replicates);
  if (opt.keep_indicators) b.indicators.resize(static_cast<size_t>(total));

  const size_t na = opt.anchors.size();
  auto t0 = std::chrono::steady_clock::now();
  parallel_for(
      opt.replicates,
      [&](size_t r) {
        DiagramSampler sampler(prm);
        ReplicateCounts rc;
        rc.one.assign(width, 0);
        rc.pair.assign(na * width, 0);
        std::vector<int> coords;
        std::vector<std::uint8_t> ind(width);
        for (std::uint64_t s = 0; s < opt.samples; ++s) {
          const std::uint64_t idx = r * opt.samples + s;
          sampler.sample_particles(opt.seed, idx, coords);
          std::fill(ind.begin(), ind.end(), 0);
          std::uint64_t h = idx * 0x9e3779b97f4a7c15ULL;
          for (int a : coords) {
            ind[a - 1] = 1;
            ++rc.one[a - 1];
            h = mix64(h ^ static_cast<std::uint64_t>(a));
          }
          rc.digest += h;  // a sum, so replicate order does not matter
          for (size_t q = 0; q < na; ++q) {
            if (!ind[opt.anchors[q] - 1]) continue;
            std::uint64_t* row = &rc.pair[q * width];
            for (int a : coords) ++row[a - 1];
          }
          if (opt.keep_indicators) b.indicators[idx] = ind;
        }
        b.reps[r] = std::move(rc);
      },
      opt.threads);
  b.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& r : b.reps) b.digest += r.digest;
  return b;
}

double quantile_sorted(const std::vector<double>& v, double q) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  double pos = q * (v.size() - 1);
  size_t lo = static_cast<size_t>(std::floor(pos));
  size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - lo) * (v[hi] - v[lo]);
}

EmpiricalStats empirical_kernel_ratio(const SampleBatch& batch, int anchor, int j_lo, int j_hi) {
  const int width = batch.width();
  const int slot = batch.anchor_slot(anchor);
  if (slot < 0) fail(Status::invalid_argument, "no pair counts were kept for this anchor");
  j_lo = std::max(j_lo, 1);
  j_hi = std::min(j_hi, width);
  if (j_lo > j_hi) fail(Status::invalid_argument, "empty j range");

  CdKernel<double> kern(batch.params);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double N = static_cast<double>(batch.samples);
  EmpiricalStats st;
  st.anchor = anchor;
  for (int j = j_lo; j <= j_hi; ++j) {
    KernelRatioRow row;
    row.j = j;
    row.sign = kern(anchor, j) < 0 ? -1 : 1;
    std::vector<double> vals;
    vals.reserve(batch.reps.size());
    for (const auto& rc : batch.reps) {
      double ri = rc.one[anchor - 1] / N;
      if (ri <= 0) {
        vals.push_back(nan);
        continue;
      }
      if (j == anchor) {
        vals.push_back(1.0);
        continue;
      }
      double rj = rc.one[j - 1] / N;
      double r2 = rc.pair[static_cast<size_t>(slot) * width + j - 1] / N;
      double k2 = ri * rj - r2;
      if (k2 < 0) {
        ++row.clamped;
        k2 = 0;
      }
      vals.push_back(k2 > 0 ? row.sign * std::sqrt(k2) / ri : 0.0);
    }
    vals.erase(std::remove_if(vals.begin(), vals.end(), [](double v) { return std::isnan(v); }), vals.end());
    std::sort(vals.begin(), vals.end());
    row.q1 = quantile_sorted(vals, 0.25);
    row.median = quantile_sorted(vals, 0.5);
    row.q3 = quantile_sorted(vals, 0.75);
    // Tukey whiskers: extreme data within 1.5 IQR of the box
    double iqr = row.q3 - row.q1;
    row.whisker_lo = row.whisker_hi = nan;
    for (double v : vals) {
      if (v >= row.q1 - 1.5 * iqr) {
        row.whisker_lo = v;
        break;
      }
    }
    for (auto it = vals.rbegin(); it != vals.rend(); ++it) {
      if (*it <= row.q3 + 1.5 * iqr) {
        row.whisker_hi = *it;
        break;
      }
    }
    // never inside the box, as in the usual box-plot convention
    if (!vals.empty()) {
      row.whisker_lo = std::min(row.whisker_lo, row.q1);
      row.whisker_hi = std::max(row.whisker_hi, row.q3);
    }
    double sum = 0, sq = 0;
    for (double v : vals) sum += v;
    row.mean = vals.empty() ? nan : sum / vals.size();
    for (double v : vals) sq += (v - row.mean) * (v - row.mean);
    row.se = vals.size() > 1 ? std::sqrt(sq / (vals.size() - 1) / vals.size()) : nan;

    double ri = batch.density(anchor);
    if (j == anchor) {
      row.k2_pooled = ri * ri;
      row.pooled = 1;
    } else {
      row.k2_pooled = ri * batch.density(j) - batch.pair_density(anchor, j);
      row.pooled = ri <= 0 ? nan : row.k2_pooled > 0 ? row.sign * std::sqrt(row.k2_pooled) / ri : 0.0;
    }
    st.warnings += row.clamped;
    st.rows.push_back(row);
  }
  return st;
}

namespace {

double anchor_density(const EnsembleParams& prm, int anchor, double* x) {
  *x = static_cast<double>(anchor) / prm.K;
  bool bulk = false;
  double rho = limit_density(*x, prm.H_value(), &bulk);
  if (!bulk) fail(Status::region, "anchor is outside the bulk of the limit density");
  return rho;
}

}  // namespace

double sup_cd_sine(const EnsembleParams& prm, int anchor, int radius) {
  double x = 0;
  const double rho = anchor_density(prm, anchor, &x);
  CdKernel<long double> kern(prm);
  const int width = prm.n + prm.k;
  const long double kii = kern(anchor, anchor);
  double sup = 0;
  for (int j = std::max(1, anchor - radius); j <= std::min(width, anchor + radius); ++j) {
    double cd = static_cast<double>(kern(anchor, j) / kii);
    sup = std::max(sup, std::fabs(cd - sine_kernel(j - anchor, rho)));
  }
  return sup;
}

Comparison compare_curves(const EnsembleParams& prm, int anchor, int radius, const SampleBatch* batch) {
  const int width = prm.n + prm.k;
  if (anchor < 1 || anchor > width) fail(Status::domain, "anchor outside the lattice");
  if (radius < 0) fail(Status::invalid_argument, "negative radius");
  Comparison cmp;
  cmp.params = prm;
  cmp.anchor = anchor;
  cmp.rho = anchor_density(prm, anchor, &cmp.x);

  const int lo = std::max(1, anchor - radius), hi = std::min(width, anchor + radius);
  EmpiricalStats st;
  if (batch) {
    st = empirical_kernel_ratio(*batch, anchor, lo, hi);
    cmp.has_empirical = true;
    cmp.warnings = st.warnings;
  }
  CdKernel<long double> kern(prm);
  const long double kii = kern(anchor, anchor);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  cmp.table = Table({"j", "delta", "q1", "median", "q3", "whisker_lo", "whisker_hi", "cd_ratio", "sine_ratio"});
  int inside = 0;
  for (int j = lo; j <= hi; ++j) {
    double cd = static_cast<double>(kern(anchor, j) / kii);
    double sine = sine_kernel(j - anchor, cmp.rho);
    cmp.sup_cd_sine = std::max(cmp.sup_cd_sine, std::fabs(cd - sine));
    double q1 = nan, med = nan, q3 = nan, wl = nan, wh = nan;
    if (batch) {
      const auto& r = st.rows[j - lo];
      q1 = r.q1, med = r.median, q3 = r.q3, wl = r.whisker_lo, wh = r.whisker_hi;
      if (cd >= wl && cd <= wh) ++inside;
    }
    cmp.table.add({static_cast<std::int64_t>(j), static_cast<std::int64_t>(j - anchor), q1, med, q3, wl, wh, cd, sine});
  }
  if (batch) cmp.inside_fraction = static_cast<double>(inside) / (hi - lo + 1);

  auto& t = cmp.table;
  t.set_meta("n", static_cast<std::int64_t>(prm.n));
  t.set_meta("k", static_cast<std::int64_t>(prm.k));
  t.set_meta("K", static_cast<std::int64_t>(prm.K));
  t.set_meta("anchor", static_cast<std::int64_t>(anchor));
  t.set_meta("x_mapping", std::string("x = anchor / K"));
  t.set_meta("x", cmp.x);
  t.set_meta("rho", cmp.rho);
  t.set_meta("sup_cd_sine", cmp.sup_cd_sine);
  if (batch) {
    t.set_meta("seed", static_cast<std::int64_t>(batch->seed));
    t.set_meta("samples", static_cast<std::int64_t>(batch->samples));
    t.set_meta("replicates", static_cast<std::int64_t>(batch->replicates));
    t.set_meta("digest", std::to_string(batch->digest));
    t.set_meta("inside_fraction", cmp.inside_fraction);
    t.set_meta("clamped_estimates", static_cast<std::int64_t>(cmp.warnings));
    t.set_meta("sign_source", std::string("cd_kernel"));
  }
  t.set_meta("build", std::string(build_id()));
  return cmp;
}

}  // namespace symdpp
