// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "harness.hpp"
#include "params.hpp"
#include "table.hpp"

namespace symdpp {

// Tables behind the CLI subcommands. Each one carries its parameters as metadata.

// Every diagram in the box with its exact and explicit-formula probability.
Table measure_table(const EnsembleParams& prm);
// Shapes of `count` draws with sample indices 0..count-1.
Table samples_table(const EnsembleParams& prm, std::uint64_t seed, std::uint64_t count);
// Pooled one-point estimates next to the exact kernel diagonal.
Table density_table(const SampleBatch& batch);
// Monic K_m and G_m for m <= max_m in the variable u = i/n.
Table polynomial_table(const EnsembleParams& prm, int max_m);
// One row per printed entry; *all_match reports whether every row agrees.
Table table1_report(int K, int n, bool* all_match);
// anchor == 0: the whole matrix in long format; otherwise the row through the anchor.
Table kernel_table(const EnsembleParams& prm, int anchor);
// family 'K' (lattice j = -(n+k)..n+k) or 'G' (i != 0), degree m, oscillatory sites only.
Table asymptotic_table(const EnsembleParams& prm, char family, int m);
// Exact identities at these parameters; *all_pass ignores skipped rows.
Table selftest_table(const EnsembleParams& prm, bool* all_pass);

}  // namespace symdpp
