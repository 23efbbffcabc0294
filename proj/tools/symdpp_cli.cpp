// SPDX-License-Identifier: Apache-2.0
// Command-line front end over the C API.
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symdpp/symdpp.h"

namespace {

enum Exit { kOk = 0, kUsage = 2, kNumeric = 3, kResource = 4 };

struct Globals {
  int n = 2;
  int k = 2;
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;  // 0: the subcommand default
  int replicates = 0;
  int precision = 17;
  std::string format = "csv";
  std::string out;
};

int exit_for(symdpp_status s) {
  switch (s) {
    case SYMDPP_OK:
      return kOk;
    case SYMDPP_ERR_INVALID_ARGUMENT:
    case SYMDPP_ERR_DOMAIN:
    case SYMDPP_ERR_STRUCTURAL:
    case SYMDPP_ERR_REGION:
      return kUsage;
    case SYMDPP_ERR_RESOURCE:
      return kResource;
    default:
      return kNumeric;
  }
}

// Throws the exit code on failure so every command can chain calls.
void check(symdpp_status s) {
  if (s == SYMDPP_OK) return;
  std::fprintf(stderr, "error (%s): %s\n", symdpp_status_name(s), symdpp_last_error());
  throw exit_for(s);
}

struct Params {
  symdpp_params* p = nullptr;
  explicit Params(const Globals& g) { check(symdpp_params_create(g.n, g.k, 1, 2, &p)); }
  ~Params() { symdpp_params_destroy(p); }
};

struct TableHandle {
  symdpp_table* t = nullptr;
  ~TableHandle() { symdpp_table_destroy(t); }
};

struct BatchHandle {
  symdpp_batch* b = nullptr;
  ~BatchHandle() { symdpp_batch_destroy(b); }
};

void emit(const Globals& g, const symdpp_table* t) {
  check(symdpp_table_write(t, g.format.c_str(), g.out.empty() ? nullptr : g.out.c_str(), g.precision));
}

std::string meta(const symdpp_table* t, const char* key) {
  size_t need = 0;
  check(symdpp_table_meta(t, key, nullptr, 0, &need));
  std::string s(need, '\0');
  check(symdpp_table_meta(t, key, s.data(), s.size(), nullptr));
  s.pop_back();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random symplectic Young diagrams, their correlation kernel and its asymptotics"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--n", g.n, "rank n of the first group")->check(CLI::PositiveNumber);
  app.add_option("--k", g.k, "rank k of the second group")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--samples", g.samples, "samples (per replicate for batches)");
  app.add_option("--replicates", g.replicates, "number of replicates")->check(CLI::NonNegativeNumber);
  app.add_option("--precision", g.precision, "significant digits in CSV output")->check(CLI::Range(1, 17));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out, "output file (default stdout)");

  auto* sample = app.add_subcommand("sample", "draw diagrams, or a batch of one-point estimates with --batch");
  bool batch_mode = false;
  sample->add_flag("--batch", batch_mode, "aggregate --replicates x --samples draws into densities");

  app.add_subcommand("measure", "exact probabilities of every diagram in the box");

  auto* poly = app.add_subcommand("poly", "monic K_m and G_m tables");
  int max_m = -1;
  bool table1 = false;
  poly->add_option("--max-m", max_m, "largest degree (default min(6, K-2))");
  poly->add_flag("--check-table1", table1, "compare degrees 0..6 with the printed closed forms");

  auto* kernel = app.add_subcommand("kernel", "kernel matrix or the row through an anchor");
  int kernel_anchor = 0;
  kernel->add_option("--anchor", kernel_anchor, "anchor site; 0 prints the whole matrix");

  auto* asym = app.add_subcommand("asym", "asymptotic against exact polynomial values");
  std::string family = "K";
  int asym_m = -1;
  asym->add_option("--family", family, "K or G")->check(CLI::IsMember({"K", "G"}));
  asym->add_option("--m", asym_m, "degree (default 2n)");

  auto* compare = app.add_subcommand("compare", "empirical, CD and sine kernel ratios around an anchor");
  int anchor = -1, radius = 20;
  compare->add_option("--anchor", anchor, "anchor site (default (n+k)/2)");
  compare->add_option("--radius", radius, "half width of the j window")->check(CLI::NonNegativeNumber);

  app.add_subcommand("selftest", "exact identities at the given size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    Params prm(g);
    TableHandle tab;
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "sample") {
      if (batch_mode) {
        BatchHandle b;
        std::uint64_t samples = g.samples ? g.samples : 10000;
        int reps = g.replicates ? g.replicates : 1;
        check(symdpp_sampling_run(prm.p, samples, reps, g.seed, nullptr, 0, 0, &b.b));
        check(symdpp_table_density(b.b, &tab.t));
      } else {
        check(symdpp_table_samples(prm.p, g.seed, g.samples ? g.samples : 10, &tab.t));
      }
      emit(g, tab.t);
    } else if (cmd == "measure") {
      check(symdpp_table_measure(prm.p, &tab.t));
      emit(g, tab.t);
    } else if (cmd == "poly") {
      int n = 0, K = 0;
      check(symdpp_params_get(prm.p, &n, nullptr, &K));
      if (table1) {
        int ok = 0;
        check(symdpp_table_check_table1(K, n, &tab.t, &ok));
        emit(g, tab.t);
        return ok ? kOk : kNumeric;
      }
      check(symdpp_table_polynomials(prm.p, max_m >= 0 ? max_m : std::min(6, K - 2), &tab.t));
      emit(g, tab.t);
    } else if (cmd == "kernel") {
      check(symdpp_table_kernel(prm.p, kernel_anchor, &tab.t));
      emit(g, tab.t);
    } else if (cmd == "asym") {
      check(symdpp_table_asymptotic(prm.p, family[0], asym_m >= 0 ? asym_m : 2 * g.n, &tab.t));
      emit(g, tab.t);
    } else if (cmd == "compare") {
      if (anchor < 0) anchor = (g.n + g.k) / 2;
      BatchHandle b;
      if (g.samples > 0) {
        int reps = g.replicates ? g.replicates : 1;
        check(symdpp_sampling_run(prm.p, g.samples, reps, g.seed, &anchor, 1, 0, &b.b));
      }
      check(symdpp_table_compare(prm.p, b.b, anchor, radius, &tab.t));
      emit(g, tab.t);
      std::fprintf(stderr, "sup |cd - sine| = %s\n", meta(tab.t, "sup_cd_sine").c_str());
    } else if (cmd == "selftest") {
      int ok = 0;
      check(symdpp_table_selftest(prm.p, &tab.t, &ok));
      emit(g, tab.t);
      return ok ? kOk : kNumeric;
    }
  } catch (int code) {
    return code;
  }
  return kOk;
}
