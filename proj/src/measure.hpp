// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "params.hpp"

namespace symdpp {

// a_i = lambda_i + n - i + 1, strictly decreasing, 1 <= a_n, a_1 <= n + k.
struct ParticleConfig {
  std::vector<int> a;
  int n = 0;
  int k = 0;

  // a_i^2 / n^2
  std::vector<mpq_class> squared_scaled() const;
};

ParticleConfig particle_coords(const YoungDiagram& d);
YoungDiagram diagram_from_particles(const ParticleConfig& c);

mpz_class sp_dimension(const YoungDiagram& lambda, int rank);

mpq_class measure_exact(const YoungDiagram& lambda, const EnsembleParams& prm);

// Closed product formula in the particle coordinates. The (2n+2-i-j)
// factor of the denominator runs over i <= j.
mpq_class measure_explicit(const ParticleConfig& c, const EnsembleParams& prm);

std::vector<std::pair<YoungDiagram, mpq_class>> enumerate_measure(const EnsembleParams& prm);

// Number of King tableaux of the given shape and rank, by brute force.
std::uint64_t count_king_tableaux(const YoungDiagram& lambda, int rank);

}  // namespace symdpp
