// SPDX-License-Identifier: Apache-2.0
#include "kernel.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "error.hpp"
#include "orthopoly.hpp"
#include "parallel.hpp"

namespace symdpp {

WeightFunction::WeightFunction(const EnsembleParams& prm) : prm_(prm) {}

mpq_class WeightFunction::exact(int i) const { return weight_exact(i, prm_); }

long double WeightFunction::log_value(int i) const {
  if (i < -half_width() || i > half_width()) fail(Status::domain, "lattice point outside the weight support");
  return log_weight(i, prm_);
}

long double WeightFunction::value(int i) const { return std::exp(log_value(i)); }

long double WeightFunction::tilde(int i) const {
  long double u = static_cast<long double>(i) / prm_.n;
  return u * u * value(i);
}

template <class T>
PsiTable<T> psi_table(const EnsembleParams& prm, int max_m) {
  require_half(prm, "psi_table");
  const int width = prm.n + prm.k;
  if (max_m < 0 || max_m >= prm.K) fail(Status::domain, "psi degree out of range");
  PsiTable<T> t;
  t.max_m = max_m;
  t.width = width;
  auto jac = symplectic_jacobi<T>(max_m, prm);
  t.ahat = jac.a;
  t.values.assign(static_cast<std::size_t>(max_m + 1) * width, T(0));
  const long double log_om = std::log(to_real<long double>(omega2(prm)));
  WeightFunction w(prm);
  for (int a = 1; a <= width; ++a) {
    long double u = static_cast<long double>(a) / prm.n;
    T u_t = static_cast<T>(u);
    T prev = T(0);
    T cur = static_cast<T>(std::exp(0.5L * (2 * std::log(u) + w.log_value(a) - log_om)));
    t.values[a - 1] = cur;
    for (int m = 0; m < max_m; ++m) {
      T next = (u_t * cur - (m > 0 ? t.ahat[m] * prev : T(0))) / t.ahat[m + 1];
      t.values[static_cast<std::size_t>(m + 1) * width + (a - 1)] = next;
      prev = cur;
      cur = next;
    }
  }
  return t;
}

template <class T>
CdKernel<T>::CdKernel(const EnsembleParams& prm) : prm_(prm) {
  require_half(prm, "CdKernel");
  psi_ = psi_table<T>(prm, 2 * prm.n);
  kappa_ratio_ = psi_.ahat[2 * prm.n] * psi_.ahat[2 * prm.n - 1];
}

template <class T>
void CdKernel<T>::check(int i) const {
  if (i < -(prm_.n + prm_.k) || i > prm_.n + prm_.k) fail(Status::domain, "point outside the lattice: " + std::to_string(i));
}

template <class T>
T CdKernel<T>::psi_at(int m, int i) const {
  // even polynomials against an even weight
  if (i == 0) return T(0);
  return psi_.at(m, i < 0 ? -i : i);
}

template <class T>
T CdKernel<T>::sum_form(int i, int j) const {
  check(i);
  check(j);
  T s = T(0);
  for (int l = 0; l < prm_.n; ++l) s += psi_at(2 * l, i) * psi_at(2 * l, j);
  return 2 * s;
}

template <class T>
T CdKernel<T>::cd_form(int i, int j) const {
  check(i);
  check(j);
  const int n = prm_.n;
  T u2 = T(i) * T(i) / (T(n) * T(n));
  T v2 = T(j) * T(j) / (T(n) * T(n));
  if (u2 == v2) fail(Status::domain, "CD ratio is singular at u^2 = v^2");
  T num = psi_at(2 * n, i) * psi_at(2 * n - 2, j) - psi_at(2 * n - 2, i) * psi_at(2 * n, j);
  return 2 * kappa_ratio_ * num / (u2 - v2);
}

template <class T>
T CdKernel<T>::operator()(int i, int j) const {
  check(i);
  check(j);
  T u2 = T(i) * T(i) / (T(prm_.n) * T(prm_.n));
  T v2 = T(j) * T(j) / (T(prm_.n) * T(prm_.n));
  T d = u2 > v2 ? u2 - v2 : v2 - u2;
  if (d < T(1e-8) * std::max(T(1), u2)) return sum_form(i, j);
  return cd_form(i, j);
}

template <class T>
T CdKernel<T>::density(int a) const {
  if (a < 1 || a > prm_.n + prm_.k) fail(Status::domain, "particle coordinate out of range");
  return sum_form(a, a);
}

template <class T>
T KernelMatrix<T>::trace() const {
  T s = T(0);
  for (int a = 1; a <= size; ++a) s += at(a, a);
  return s;
}

template <class T>
T KernelMatrix<T>::idempotence_residual() const {
  using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
  Mat m = Eigen::Map<const Mat>(values.data(), size, size);
  Mat r = m * m - m;
  return r.cwiseAbs().maxCoeff();
}

template <class T>
T KernelMatrix<T>::symmetry_residual() const {
  T worst = T(0);
  for (int a = 1; a <= size; ++a)
    for (int b = a + 1; b <= size; ++b) {
      T d = at(a, b) - at(b, a);
      worst = std::max(worst, d < 0 ? -d : d);
    }
  return worst;
}

template <class T>
KernelMatrix<T> kernel_matrix(const EnsembleParams& prm) {
  const int N = prm.n + prm.k;
  if (N > 4096) fail(Status::resource, "kernel_matrix limited to n + k <= 4096");
  CdKernel<T> kern(prm);
  KernelMatrix<T> km;
  km.params = prm;
  km.size = N;
  km.kappa_ratio = kern.kappa_ratio();
  km.values.assign(static_cast<std::size_t>(N) * N, T(0));
  parallel_for(N, [&](std::size_t r) {
    int a = static_cast<int>(r) + 1;
    for (int b = a; b <= N; ++b) {
      T v = kern(a, b);
      km.values[static_cast<std::size_t>(a - 1) * N + (b - 1)] = v;
      km.values[static_cast<std::size_t>(b - 1) * N + (a - 1)] = v;
    }
  });
  return km;
}

template <class T>
T kernel_determinant(const CdKernel<T>& kern, const ParticleConfig& c) {
  using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = static_cast<int>(c.a.size());
  Mat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) m(r, s) = kern(c.a[r], c.a[s]);
  return m.determinant();
}

long double determinantal_check(const EnsembleParams& prm) {
  CdKernel<long double> kern(prm);
  long double worst = 0;
  for (const auto& [d, mu] : enumerate_measure(prm)) {
    long double det = kernel_determinant(kern, particle_coords(d));
    worst = std::max(worst, std::fabs(det - to_real<long double>(mu)));
  }
  return worst;
}

template struct PsiTable<double>;
template struct PsiTable<long double>;
template PsiTable<double> psi_table<double>(const EnsembleParams&, int);
template PsiTable<long double> psi_table<long double>(const EnsembleParams&, int);
template class CdKernel<double>;
template class CdKernel<long double>;
template struct KernelMatrix<double>;
template struct KernelMatrix<long double>;
template KernelMatrix<double> kernel_matrix<double>(const EnsembleParams&);
template KernelMatrix<long double> kernel_matrix<long double>(const EnsembleParams&);
template double kernel_determinant<double>(const CdKernel<double>&, const ParticleConfig&);
template long double kernel_determinant<long double>(const CdKernel<long double>&, const ParticleConfig&);

}  // namespace symdpp
