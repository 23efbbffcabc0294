// SPDX-License-Identifier: Apache-2.0
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "asymptotics.hpp"
#include "combinatorics.hpp"
#include "error.hpp"
#include "harness.hpp"
#include "kernel.hpp"
#include "measure.hpp"
#include "reports.hpp"
#include "symdpp/symdpp.h"

struct symdpp_params {
  symdpp::EnsembleParams prm;
};

struct symdpp_kernel {
  std::unique_ptr<symdpp::CdKernel<long double>> k;
};

struct symdpp_batch {
  symdpp::SampleBatch b;
};

struct symdpp_table {
  symdpp::Table t;
};

namespace {

thread_local std::string g_last_error;

template <class F>
symdpp_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return SYMDPP_OK;
  } catch (const symdpp::Error& e) {
    g_last_error = e.what();
    return static_cast<symdpp_status>(e.status());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SYMDPP_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SYMDPP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return SYMDPP_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) symdpp::fail(symdpp::Status::invalid_argument, std::string(what) + " is null");
}

void copy_out(const std::string& s, char* buf, size_t len, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf) return;
  if (len < s.size() + 1) symdpp::fail(symdpp::Status::invalid_argument, "buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
}

void make_table(symdpp_table** out, symdpp::Table t) { *out = new symdpp_table{std::move(t)}; }

}  // namespace

extern "C" {

const char* symdpp_version(void) { return "0.1.0"; }

const char* symdpp_status_name(symdpp_status s) {
  if (s == SYMDPP_ERR_INTERNAL) return "internal";
  return symdpp::status_name(static_cast<symdpp::Status>(s));
}

const char* symdpp_last_error(void) { return g_last_error.c_str(); }

symdpp_status symdpp_params_create(int n, int k, long p_num, long p_den, symdpp_params** out) {
  return guard([&] {
    need(out, "out");
    if (p_den == 0) symdpp::fail(symdpp::Status::invalid_argument, "p denominator is zero");
    mpq_class p(p_num, p_den);
    p.canonicalize();
    *out = new symdpp_params{symdpp::EnsembleParams::make(n, k, p)};
  });
}

void symdpp_params_destroy(symdpp_params* p) { delete p; }

symdpp_status symdpp_params_get(const symdpp_params* p, int* n, int* k, int* K) {
  return guard([&] {
    need(p, "params");
    if (n) *n = p->prm.n;
    if (k) *k = p->prm.k;
    if (K) *K = p->prm.K;
  });
}

symdpp_status symdpp_sample_shape(const symdpp_params* p, uint64_t seed, uint64_t index, int* rows, size_t len) {
  return guard([&] {
    need(p, "params");
    need(rows, "rows");
    if (len < static_cast<size_t>(p->prm.n)) symdpp::fail(symdpp::Status::invalid_argument, "rows must hold n entries");
    auto d = symdpp::sample_diagram(p->prm, seed, index);
    for (int i = 0; i < p->prm.n; ++i) rows[i] = d.row(i);
  });
}

symdpp_status symdpp_measure(const symdpp_params* p, const int* rows, size_t nrows, double* value, char* exact,
                             size_t exact_len, size_t* needed) {
  return guard([&] {
    need(p, "params");
    if (nrows && !rows) symdpp::fail(symdpp::Status::invalid_argument, "rows is null");
    std::vector<int> r(rows, rows + nrows);
    for (size_t i = 1; i < r.size(); ++i)
      if (r[i] > r[i - 1]) symdpp::fail(symdpp::Status::structural, "row lengths must weakly decrease");
    for (int x : r)
      if (x < 0 || x > p->prm.k) symdpp::fail(symdpp::Status::domain, "row length outside 0..k");
    auto d = symdpp::make_diagram(r, p->prm.n, p->prm.k);
    mpq_class mu = symdpp::measure_exact(d, p->prm);
    if (value) *value = mu.get_d();
    copy_out(mu.get_str(), exact, exact_len, needed);
  });
}

symdpp_status symdpp_validate_bijection(const symdpp_params* p, int* ok) {
  return guard([&] {
    need(p, "params");
    need(ok, "ok");
    *ok = symdpp::validate_bijection(p->prm).ok() ? 1 : 0;
  });
}

symdpp_status symdpp_kernel_create(const symdpp_params* p, symdpp_kernel** out) {
  return guard([&] {
    need(p, "params");
    need(out, "out");
    *out = new symdpp_kernel{std::make_unique<symdpp::CdKernel<long double>>(p->prm)};
  });
}

void symdpp_kernel_destroy(symdpp_kernel* k) { delete k; }

symdpp_status symdpp_kernel_value(const symdpp_kernel* k, int a, int b, double* out) {
  return guard([&] {
    need(k, "kernel");
    need(out, "out");
    const int w = k->k->params().n + k->k->params().k;
    if (a < 1 || b < 1 || a > w || b > w) symdpp::fail(symdpp::Status::domain, "site outside the lattice");
    *out = static_cast<double>((*k->k)(a, b));
  });
}

symdpp_status symdpp_kernel_density(const symdpp_kernel* k, int a, double* out) {
  return guard([&] {
    need(k, "kernel");
    need(out, "out");
    *out = static_cast<double>(k->k->density(a));
  });
}

symdpp_status symdpp_limit_density(double x, double H, double* rho, int* in_support) {
  return guard([&] {
    need(rho, "rho");
    bool ok = false;
    *rho = symdpp::limit_density(x, H, &ok);
    if (in_support) *in_support = ok ? 1 : 0;
  });
}

symdpp_status symdpp_sine_kernel(int d, double rho, double* out) {
  return guard([&] {
    need(out, "out");
    *out = symdpp::sine_kernel(d, rho);
  });
}

symdpp_status symdpp_sampling_run(const symdpp_params* p, uint64_t samples, int replicates, uint64_t seed,
                                  const int* anchors, size_t n_anchors, int threads, symdpp_batch** out) {
  return guard([&] {
    need(p, "params");
    need(out, "out");
    if (n_anchors && !anchors) symdpp::fail(symdpp::Status::invalid_argument, "anchors is null");
    symdpp::SamplingOptions o;
    o.samples = samples;
    o.replicates = replicates;
    o.seed = seed;
    o.anchors.assign(anchors, anchors + n_anchors);
    o.threads = threads;
    *out = new symdpp_batch{symdpp::run_sampling(p->prm, o)};
  });
}

void symdpp_batch_destroy(symdpp_batch* b) { delete b; }

symdpp_status symdpp_batch_density(const symdpp_batch* b, int a, double* out) {
  return guard([&] {
    need(b, "batch");
    need(out, "out");
    *out = b->b.density(a);
  });
}

symdpp_status symdpp_batch_digest(const symdpp_batch* b, uint64_t* out) {
  return guard([&] {
    need(b, "batch");
    need(out, "out");
    *out = b->b.digest;
  });
}

symdpp_status symdpp_batch_seconds(const symdpp_batch* b, double* out) {
  return guard([&] {
    need(b, "batch");
    need(out, "out");
    *out = b->b.seconds;
  });
}

symdpp_status symdpp_table_measure(const symdpp_params* p, symdpp_table** out) {
  return guard([&] {
    need(p, "params");
    need(out, "out");
    make_table(out, symdpp::measure_table(p->prm));
  });
}

symdpp_status symdpp_table_samples(const symdpp_params* p, uint64_t seed, uint64_t count, symdpp_table** out) {
  return guard([&] {
    need(p, "params");
    need(out, "out");
    make_table(out, symdpp::samples_table(p->prm, seed, count));
  });
}

symdpp_status symdpp_table_density(const symdpp_batch* b, symdpp_table** out) {
  return guard([&] {
    need(b, "batch");
    need(out, "out");
    make_table(out, symdpp::density_table(b->b));
  });
}

symdpp_status symdpp_table_polynomials(const symdpp_params* p, int max_m, symdpp_table** out) {
  return guard([&] {
    need(p, "params");
    need(out, "out");
    make_table(out, symdpp::polynomial_table(p->prm, max_m));
  });
}

symdpp_status symdpp_table_check_table1(int K, int n, symdpp_table** out, int* all_match) {
  return guard([&] {
    need(out, "out");
    bool ok = false;
    make_table(out, symdpp::table1_report(K, n, &ok));
    if (all_match) *all_match = ok ? 1 : 0;
  });
}

symdpp_status symdpp_table_kernel(const symdpp_params* p, int anchor, symdpp_table** out) {
  return guard([&] {
    need(p, "params");
    need(out, "out");
    make_table(out, symdpp::kernel_table(p->prm, anchor));
  });
}

symdpp_status symdpp_table_asymptotic(const symdpp_params* p, char family, int m, symdpp_table** out) {
  return guard([&] {
    need(p, "params");
    need(out, "out");
    make_table(out, symdpp::asymptotic_table(p->prm, family, m));
  });
}

symdpp_status symdpp_table_selftest(const symdpp_params* p, symdpp_table** out, int* all_pass) {
  return guard([&] {
    need(p, "params");
    need(out, "out");
    bool ok = false;
    make_table(out, symdpp::selftest_table(p->prm, &ok));
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

symdpp_status symdpp_table_compare(const symdpp_params* p, const symdpp_batch* b, int anchor, int radius,
                                   symdpp_table** out) {
  return guard([&] {
    need(p, "params");
    need(out, "out");
    auto cmp = symdpp::compare_curves(p->prm, anchor, radius, b ? &b->b : nullptr);
    make_table(out, std::move(cmp.table));
  });
}

void symdpp_table_destroy(symdpp_table* t) { delete t; }

size_t symdpp_table_rows(const symdpp_table* t) { return t ? t->t.rows.size() : 0; }

size_t symdpp_table_columns(const symdpp_table* t) { return t ? t->t.columns.size() : 0; }

const char* symdpp_table_column_name(const symdpp_table* t, size_t col) {
  if (!t || col >= t->t.columns.size()) return nullptr;
  return t->t.columns[col].c_str();
}

symdpp_status symdpp_table_number(const symdpp_table* t, size_t row, size_t col, double* out) {
  return guard([&] {
    need(t, "table");
    need(out, "out");
    if (row >= t->t.rows.size() || col >= t->t.columns.size())
      symdpp::fail(symdpp::Status::invalid_argument, "cell outside the table");
    *out = t->t.number(row, static_cast<int>(col));
  });
}

symdpp_status symdpp_table_text(const symdpp_table* t, size_t row, size_t col, char* buf, size_t len, size_t* needed) {
  return guard([&] {
    need(t, "table");
    if (row >= t->t.rows.size() || col >= t->t.columns.size())
      symdpp::fail(symdpp::Status::invalid_argument, "cell outside the table");
    copy_out(symdpp::cell_text(t->t.rows[row][col]), buf, len, needed);
  });
}

symdpp_status symdpp_table_meta(const symdpp_table* t, const char* key, char* buf, size_t len, size_t* needed) {
  return guard([&] {
    need(t, "table");
    need(key, "key");
    const symdpp::Cell* c = t->t.find_meta(key);
    if (!c) symdpp::fail(symdpp::Status::invalid_argument, std::string("no metadata entry ") + key);
    copy_out(symdpp::cell_text(*c), buf, len, needed);
  });
}

symdpp_status symdpp_table_write(const symdpp_table* t, const char* format, const char* path, int precision) {
  return guard([&] {
    need(t, "table");
    std::string fmt = format ? format : "csv";
    if (fmt != "csv" && fmt != "json") symdpp::fail(symdpp::Status::invalid_argument, "format must be csv or json");
    if (precision < 1 || precision > 17) symdpp::fail(symdpp::Status::invalid_argument, "precision must be 1..17");
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (path) {
      file.open(path);
      if (!file) symdpp::fail(symdpp::Status::resource, std::string("cannot open ") + path);
      os = &file;
    }
    if (fmt == "csv")
      symdpp::write_csv(t->t, *os, precision);
    else
      symdpp::write_json(t->t, *os);
    os->flush();
    if (!*os) symdpp::fail(symdpp::Status::resource, "write failed");
  });
}

}  // extern "C"
