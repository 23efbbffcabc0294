// SPDX-License-Identifier: Apache-2.0
#include "reports.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "asymptotics.hpp"
#include "combinatorics.hpp"
#include "error.hpp"
#include "kernel.hpp"
#include "measure.hpp"
#include "orthopoly.hpp"

namespace symdpp {

namespace {

using I = std::int64_t;

void tag(Table& t, const EnsembleParams& prm) {
  t.set_meta("n", static_cast<I>(prm.n));
  t.set_meta("k", static_cast<I>(prm.k));
  t.set_meta("K", static_cast<I>(prm.K));
  t.set_meta("p", prm.p.get_str());
  t.set_meta("build", std::string(build_id()));
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string pass_str(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

Table measure_table(const EnsembleParams& prm) {
  Table t({"diagram", "particles", "mu", "mu_value", "explicit_match"});
  tag(t, prm);
  mpq_class total = 0;
  for (const auto& [d, mu] : enumerate_measure(prm)) {
    auto pc = particle_coords(d);
    bool same = measure_explicit(pc, prm) == mu;
    total += mu;
    t.add({d.str(), join(pc.a), mu.get_str(), mu.get_d(), static_cast<I>(same)});
  }
  t.set_meta("total", total.get_str());
  return t;
}

Table samples_table(const EnsembleParams& prm, std::uint64_t seed, std::uint64_t count) {
  if (static_cast<double>(prm.n) * prm.k * static_cast<double>(count) > kSamplingBudget)
    fail(Status::resource, "n*k*samples exceeds the sampling budget");
  Table t({"index", "diagram", "particles"});
  tag(t, prm);
  t.set_meta("seed", static_cast<I>(seed));
  DiagramSampler s(prm);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto d = s.sample(seed, i);
    t.add({static_cast<I>(i), d.str(), join(particle_coords(d).a)});
  }
  return t;
}

Table density_table(const SampleBatch& batch) {
  Table t({"a", "rho_hat", "se", "exact"});
  tag(t, batch.params);
  t.set_meta("seed", static_cast<I>(batch.seed));
  t.set_meta("samples", static_cast<I>(batch.samples));
  t.set_meta("replicates", static_cast<I>(batch.replicates));
  t.set_meta("digest", std::to_string(batch.digest));
  CdKernel<double> kern(batch.params);
  const double N = static_cast<double>(batch.total());
  for (int a = 1; a <= batch.width(); ++a) {
    double r = batch.density(a);
    t.add({static_cast<I>(a), r, std::sqrt(r * (1 - r) / N), kern.density(a)});
  }
  return t;
}

Table polynomial_table(const EnsembleParams& prm, int max_m) {
  if (max_m < 0 || max_m > prm.K - 2) fail(Status::domain, "degree outside 0..K-2");
  Table t({"family", "m", "polynomial"});
  tag(t, prm);
  auto kt = monic_krawtchouk_table(max_m, prm);
  auto gt = symplectic_table(max_m, prm);
  for (int m = 0; m <= max_m; ++m) t.add({std::string("K"), static_cast<I>(m), poly_str(kt[m], "u")});
  for (int m = 0; m <= max_m; ++m) t.add({std::string("G"), static_cast<I>(m), poly_str(gt[m], "u")});
  return t;
}

Table table1_report(int K, int n, bool* all_match) {
  Table t({"family", "m", "printed", "computed", "status"});
  t.set_meta("K", static_cast<I>(K));
  t.set_meta("n", static_cast<I>(n));
  bool all = true;
  for (const auto& r : check_table1(K, n)) {
    all = all && r.match();
    t.add({std::string(1, r.family), static_cast<I>(r.m), poly_str(r.printed), poly_str(r.computed), pass_str(r.match())});
  }
  if (all_match) *all_match = all;
  return t;
}

Table kernel_table(const EnsembleParams& prm, int anchor) {
  const int w = prm.n + prm.k;
  CdKernel<long double> kern(prm);
  Table t(anchor == 0 ? std::vector<std::string>{"a", "b", "kernel"}
                      : std::vector<std::string>{"j", "delta", "kernel", "ratio"});
  tag(t, prm);
  if (anchor == 0) {
    auto km = kernel_matrix<long double>(prm);
    for (int a = 1; a <= w; ++a)
      for (int b = 1; b <= w; ++b) t.add({static_cast<I>(a), static_cast<I>(b), static_cast<double>(km.at(a, b))});
    t.set_meta("trace", static_cast<double>(km.trace()));
    t.set_meta("idempotence_residual", static_cast<double>(km.idempotence_residual()));
    return t;
  }
  if (anchor < 1 || anchor > w) fail(Status::domain, "anchor outside the lattice");
  const long double kii = kern(anchor, anchor);
  t.set_meta("anchor", static_cast<I>(anchor));
  for (int j = 1; j <= w; ++j) {
    long double v = kern(anchor, j);
    t.add({static_cast<I>(j), static_cast<I>(j - anchor), static_cast<double>(v), static_cast<double>(v / kii)});
  }
  return t;
}

Table asymptotic_table(const EnsembleParams& prm, char family, int m) {
  if (family != 'K' && family != 'G') fail(Status::invalid_argument, "family must be K or G");
  Table t({"site", "x", "exact_log_abs", "exact_sign", "log_envelope", "trig", "rel_err"});
  tag(t, prm);
  t.set_meta("family", std::string(1, family));
  t.set_meta("m", static_cast<I>(m));
  const int w = prm.K / 2;
  for (int s = -w + 1; s < w; ++s) {
    if (family == 'G' && s == 0) continue;
    AsymptoticCheck c;
    try {
      c = family == 'K' ? krawtchouk_check(s, m, prm) : symplectic_check(s, m, prm);
    } catch (const Error& e) {
      if (e.status() == Status::region) continue;  // outside the oscillatory zone
      throw;
    }
    t.add({static_cast<I>(s), static_cast<double>(s) / prm.K, static_cast<double>(c.exact_log_abs),
           static_cast<I>(c.exact_sign), static_cast<double>(c.approx.log_envelope), static_cast<double>(c.approx.trig),
           c.rel_err});
  }
  return t;
}

Table selftest_table(const EnsembleParams& prm, bool* all_pass) {
  Table t({"check", "value", "tolerance", "status"});
  tag(t, prm);
  bool all = true;
  auto row = [&](const std::string& name, double value, double tol, bool ok) {
    all = all && ok;
    t.add({name, value, tol, pass_str(ok)});
  };
  auto skip = [&](const std::string& name) { t.add({name, std::nan(""), std::nan(""), std::string("SKIP")}); };

  const auto diagrams = enumerate_measure(prm);
  mpq_class total = 0;
  int mismatches = 0;
  for (const auto& [d, mu] : diagrams) {
    total += mu;
    if (measure_explicit(particle_coords(d), prm) != mu) ++mismatches;
  }
  row("measure_total_is_one", std::fabs(mpq_class(total - 1).get_d()), 0, total == 1);
  row("measure_explicit_mismatches", mismatches, 0, mismatches == 0);

  if (2 * prm.n * prm.k <= 16) {
    auto rep = validate_bijection(prm);
    row("bijection", rep.ok() ? 1 : 0, 0, rep.ok());
  } else {
    skip("bijection");
  }
  if (diagrams.size() <= 5000) {
    double r = static_cast<double>(determinantal_check(prm));
    row("determinantal_identity", r, 1e-10, r <= 1e-10);
  } else {
    skip("determinantal_identity");
  }

  auto km = kernel_matrix<long double>(prm);
  double tr = std::fabs(static_cast<double>(km.trace()) - prm.n);
  double id = static_cast<double>(km.idempotence_residual());
  row("kernel_trace", tr, 1e-8, tr < 1e-8);
  row("kernel_idempotence", id, 1e-8, id < 1e-8);

  // the three-term recurrence up to M reads G_{M+1}, which needs K_{M+3}
  const int M = std::min(8, prm.K - 3);
  int bad = 0;
  for (int l = 0; l <= M; ++l)
    for (int m = 0; m < l; ++m)
      if (krawtchouk_orthogonality_check(l, m, prm) != 0) ++bad;
  row("krawtchouk_orthogonality", bad, 0, bad == 0);

  auto kt = monic_krawtchouk_table(M + 2, prm);
  auto gt = symplectic_table(M, prm);
  bad = 0;
  for (int m = 0; m <= M; ++m)
    if (!(christoffel_explicit(m, kt) == gt[m])) ++bad;
  row("christoffel_explicit", bad, 0, bad == 0);

  bad = 0;
  for (int m = 0; m + 2 <= prm.K; m += 2) {
    mpq_class want = -mpq_class((prm.K - m) * (m + 1)) / (4 * prm.n * prm.n);
    if (constant_term_ratio(m, prm) != want) ++bad;
  }
  row("constant_term_ratio", bad, 0, bad == 0);

  auto ns = norm_sequence(prm, M);
  auto ttr = ttr_from_polynomials(M, prm);
  bad = 0;
  for (int m = 0; m <= M; ++m) {
    if (ns.Lambda[m] != lambda_direct(gt[m], prm)) ++bad;
    if (ns.beta[m] != ttr.beta[m]) ++bad;
  }
  row("norm_recurrence", bad, 0, bad == 0);

  const int Mq = std::min(21, prm.K - 2);
  auto qr = qr_step(krawtchouk_jacobi<long double>(Mq, prm));
  auto ttq = ttr_from_polynomials(Mq - 1, prm);
  double worst = 0;
  for (int m = 0; m < Mq && m < qr.hat.size(); ++m) {
    long double b = static_cast<long double>(ttq.alpha[m].get_d());
    worst = std::max(worst, static_cast<double>(std::fabs(qr.hat.b[m] - b)));
    if (m >= 1 && m < static_cast<int>(qr.hat.a.size())) {
      long double beta = to_real<long double>(ttq.beta[m]);
      worst = std::max(worst, static_cast<double>(std::fabs(qr.hat.a[m] * qr.hat.a[m] - beta) / beta));
    }
  }
  row("qr_step_vs_recurrence", worst, 1e-12, worst <= 1e-12);

  const double H = prm.H_value(), edge = support_edge(H);
  worst = 0;
  for (int q = 1; q < 200; ++q) {
    double x = edge * q / 200.0;
    double lhs = std::cos(std::numbers::pi * limit_density(x, H));
    worst = std::max(worst, std::fabs(lhs - (1 - 4 * H) / std::sqrt(1 - 4 * x * x)));
  }
  row("limit_density_identity", worst, 1e-12, worst <= 1e-12);

  if (all_pass) *all_pass = all;
  return t;
}

}  // namespace symdpp
