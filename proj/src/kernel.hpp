// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <vector>

#include "measure.hpp"
#include "params.hpp"

namespace symdpp {

// W(i/n) on the symmetric lattice i = -(n+k)..(n+k) and Wt(i) = (i/n)^2 W(i/n).
class WeightFunction {
 public:
  explicit WeightFunction(const EnsembleParams& prm);
  const EnsembleParams& params() const { return prm_; }
  int half_width() const { return prm_.K / 2; }
  mpq_class exact(int i) const;
  long double value(int i) const;
  long double log_value(int i) const;
  long double tilde(int i) const;

 private:
  EnsembleParams prm_;
};

// Orthonormal G-polynomials times sqrt(Wt), psi_m(i) = g_m(i/n) sqrt(Wt(i)),
// tabulated on the positive lattice a = 1..n+k for m = 0..max_m.
template <class T>
struct PsiTable {
  int max_m = 0;
  int width = 0;             // n + k
  std::vector<T> ahat;       // sqrt(beta_m), index 0 unused
  std::vector<T> values;     // row-major [m][a-1]
  T at(int m, int a) const { return values[static_cast<std::size_t>(m) * width + (a - 1)]; }
};

template <class T>
PsiTable<T> psi_table(const EnsembleParams& prm, int max_m);

// Christoffel-Darboux kernel K(u, v) at u = i/n, v = j/n for integer i, j.
template <class T>
class CdKernel {
 public:
  explicit CdKernel(const EnsembleParams& prm);

  T operator()(int i, int j) const;
  T cd_form(int i, int j) const;
  T sum_form(int i, int j) const;
  T density(int a) const;

  // kappa_{2n-2} / kappa_{2n} with kappa_m = Lambda_m^{-1/2}
  T kappa_ratio() const { return kappa_ratio_; }
  const EnsembleParams& params() const { return prm_; }
  const PsiTable<T>& psi() const { return psi_; }

 private:
  T psi_at(int m, int i) const;
  void check(int i) const;

  EnsembleParams prm_;
  PsiTable<T> psi_;
  T kappa_ratio_;
};

template <class T>
struct KernelMatrix {
  EnsembleParams params;
  int size = 0;              // n + k; row r is the point u = (r+1)/n
  std::vector<T> values;     // row-major, symmetric
  T kappa_ratio = T(0);

  T at(int a, int b) const { return values[static_cast<std::size_t>(a - 1) * size + (b - 1)]; }
  T trace() const;
  // max |K^2 - K|
  T idempotence_residual() const;
  T symmetry_residual() const;
};

template <class T>
KernelMatrix<T> kernel_matrix(const EnsembleParams& prm);

// det[K(a_i, a_j)] over the particles of the configuration.
template <class T>
T kernel_determinant(const CdKernel<T>& kern, const ParticleConfig& c);

// max |det - mu| over every diagram in the box.
long double determinantal_check(const EnsembleParams& prm);

}  // namespace symdpp
