// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace symdpp {

// Parameters of the Sp(2n) x Sp(2k) ensemble. K = 2n + 2k, H = n/K.
struct EnsembleParams {
  int n = 1;
  int k = 1;
  int K = 4;
  mpq_class H{1, 4};
  mpq_class p{1, 2};

  static EnsembleParams make(int n, int k, const mpq_class& p = mpq_class(1, 2));

  bool half() const { return p == mpq_class(1, 2); }
  double p_value() const { return p.get_d(); }
  double H_value() const { return H.get_d(); }
  std::string describe() const;
};

// Throws unless p == 1/2; the combinatorial measure only exists there.
void require_half(const EnsembleParams& prm, const char* where);

}  // namespace symdpp
