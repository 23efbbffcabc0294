// SPDX-License-Identifier: Apache-2.0
#include "measure.hpp"

#include <functional>

#include "error.hpp"

namespace symdpp {

std::vector<mpq_class> ParticleConfig::squared_scaled() const {
  std::vector<mpq_class> y;
  for (int ai : a) {
    mpq_class v(ai * ai, n * n);
    v.canonicalize();
    y.push_back(v);
  }
  return y;
}

ParticleConfig particle_coords(const YoungDiagram& d) {
  ParticleConfig c;
  c.n = d.n;
  c.k = d.k;
  for (int i = 1; i <= d.n; ++i) c.a.push_back(d.row(i - 1) + d.n - i + 1);
  return c;
}

YoungDiagram diagram_from_particles(const ParticleConfig& c) {
  if (static_cast<int>(c.a.size()) != c.n) fail(Status::domain, "need exactly n particles");
  std::vector<int> rows;
  for (int i = 1; i <= c.n; ++i) {
    int ai = c.a[i - 1];
    if (ai < 1 || ai > c.n + c.k) fail(Status::domain, "particle outside 1..n+k");
    if (i > 1 && ai >= c.a[i - 2]) fail(Status::domain, "particles must strictly decrease");
    rows.push_back(ai - c.n + i - 1);
  }
  return make_diagram(rows, c.n, c.k);
}

mpz_class sp_dimension(const YoungDiagram& lambda, int rank) {
  if (static_cast<int>(lambda.rows.size()) > rank) fail(Status::domain, "diagram has more rows than the rank");
  mpq_class d = 1;
  for (int i = 1; i <= rank; ++i) {
    long li = lambda.row(i - 1) + rank - i + 1, mi = rank - i + 1;
    d *= mpq_class(li, mi);
    for (int j = i + 1; j <= rank; ++j) {
      long lj = lambda.row(j - 1) + rank - j + 1, mj = rank - j + 1;
      d *= mpq_class(mpz_class(li * li - lj * lj), mpz_class(mi * mi - mj * mj));
    }
  }
  d.canonicalize();
  if (d.get_den() != 1) fail(Status::numeric, "non-integral Weyl dimension");
  return d.get_num();
}

namespace {

void check_box(const YoungDiagram& lambda, const EnsembleParams& prm) {
  if (static_cast<int>(lambda.rows.size()) > prm.n || lambda.row(0) > prm.k)
    fail(Status::domain, "diagram does not fit the n x k box");
}

mpz_class fact(unsigned long v) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), v);
  return r;
}

}  // namespace

mpq_class measure_exact(const YoungDiagram& lambda, const EnsembleParams& prm) {
  require_half(prm, "measure_exact");
  check_box(lambda, prm);
  YoungDiagram lam = make_diagram(lambda.rows, prm.n, prm.k);
  mpz_class num = sp_dimension(lam, prm.n) * sp_dimension(complement_transpose(lam), prm.k);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 2ul * prm.n * prm.k);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

mpq_class measure_explicit(const ParticleConfig& c, const EnsembleParams& prm) {
  require_half(prm, "measure_explicit");
  if (c.n != prm.n || c.k != prm.k) fail(Status::domain, "particle configuration built for other parameters");
  diagram_from_particles(c);
  const int n = prm.n, k = prm.k;
  mpz_class num = 1, den = 1;
  for (int i = 1; i <= n; ++i) {
    den *= 2 * n + 2 - 2 * i;
    for (int j = i + 1; j <= n; ++j) den *= mpz_class((j - i) * (2 * n + 2 - i - j));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      mpz_class d = mpz_class(c.a[i]) * c.a[i] - mpz_class(c.a[j]) * c.a[j];
      num *= d * d;
    }
  for (int l = 1; l <= n; ++l) {
    long al = c.a[l - 1];
    num *= mpz_class(al * al) * fact(2 * k - 1 + 2 * l);
    den *= fact(k + n + al) * fact(k + n - al);
  }
  mpq_class r(num, den);
  r.canonicalize();
  // 2^{2n(1-k)}
  long e = 2l * n * (1 - k);
  mpz_class p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) r /= p2;
  else r *= p2;
  r.canonicalize();
  return r;
}

std::vector<std::pair<YoungDiagram, mpq_class>> enumerate_measure(const EnsembleParams& prm) {
  require_half(prm, "enumerate_measure");
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), prm.n + prm.k, prm.n);
  if (count > 1000000) fail(Status::resource, "too many diagrams to enumerate");
  std::vector<std::pair<YoungDiagram, mpq_class>> out;
  for (auto& lam : diagrams_in_box(prm.n, prm.k)) out.emplace_back(lam, measure_exact(lam, prm));
  return out;
}

std::uint64_t count_king_tableaux(const YoungDiagram& lambda, int rank) {
  if (static_cast<int>(lambda.rows.size()) > rank) return 0;
  std::vector<std::pair<int, int>> cells;
  for (size_t r = 0; r < lambda.rows.size(); ++r)
    for (int c = 0; c < lambda.rows[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::vector<std::vector<int>> fill(lambda.rows.size());
  for (size_t r = 0; r < lambda.rows.size(); ++r) fill[r].assign(lambda.rows[r], 0);
  std::uint64_t total = 0;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 2 * (r + 1) - 1;  // symplectic condition: entries in row r+1 are >= r+1
    if (c) lo = std::max(lo, fill[r][c - 1]);
    if (r) lo = std::max(lo, fill[r - 1][c] + 1);
    for (int x = lo; x <= 2 * rank; ++x) {
      fill[r][c] = x;
      rec(idx + 1);
    }
  };
  rec(0);
  return total;
}

}  // namespace symdpp
