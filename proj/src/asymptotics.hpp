// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "params.hpp"

namespace symdpp {

using cplx = std::complex<double>;

// f(t) = (1-mu) ln(t-p) + (g-1) ln t - g ln(1-t), principal logarithms.
cplx action(cplx t, double mu, double g, double p = 0.5);
cplx action_d1(cplx t, double mu, double g, double p = 0.5);
cplx action_d2(cplx t, double mu, double g, double p = 0.5);

// Lattice point i = (K/2)(1 - 2 mu) and degree m = g K.
inline double mu_of(int i, int K) { return 0.5 - static_cast<double>(i) / K; }
inline double g_of(int m, int K) { return static_cast<double>(m) / K; }

// g(1-g) - (mu-1/2)^2 at p = 1/2; positive in the oscillatory region.
double oscillatory_discriminant(double mu, double g);

// Margin kept away from the turning points.
constexpr double kRegionMargin = 1e-3;

struct SaddleData {
  cplx t0plus, t0minus;
  bool oscillatory = false;
  double disc = 0;  // g(1-g) - (mu-1/2)^2 at p = 1/2

  double chi = 0, tau = 0, gamma = 0, zeta1 = 0, zeta2 = 0, zeta1hat = 0, tauhat = 0;
  double sigma = 0;
  double argfpp = 0;         // principal arg f''(t0-) from direct evaluation
  double argfpp_closed = 0;  // the compact closed form, wrapped into (-pi, pi]
  double theta_sdp = 0;      // steepest-descent tangent angle at t0-
  double re_f = 0;           // Re f(t0+), closed form
  double im_f = 0;           // Im f(t0+), closed form
};

// Both roots of mu t^2 + (g - mu - p) t + (1 - g) p = 0.
SaddleData saddle_points(double mu, double g, double p = 0.5);

// All phase angles at p = 1/2; region error outside the oscillatory zone.
SaddleData phase_data(double mu, double g);

// The same angles written as arctan plus the step corrections (reference forms).
struct HeavisideAngles {
  double chi, tau, gamma, zeta1, zeta2;
};
HeavisideAngles heaviside_angles(double mu, double g);

// delta-hat(j; m) = (m-1) zeta2 + K zeta1hat - K mu gamma + 2 tauhat
double delta_hat(const SaddleData& sd, double mu, int m, int K);

struct AsymptoticValue {
  long double value = 0;     // envelope * trig
  long double log_envelope = 0;
  double trig = 0;           // oscillating factor; normalized to [-1, 1] for G
  double phase = 0;          // theta - delta-hat of the leading term
};

// Double-scaling approximation of the monic Krawtchouk value at u = j/n, p = 1/2.
AsymptoticValue krawtchouk_asymptotic(int j, int m, const EnsembleParams& prm);

// Two-sine approximation of G_m(i/n), m even, i != 0, p = 1/2. Each sine uses the
// phase at its own degree; the envelope is the K_{m+2} one at g = m/K.
AsymptoticValue symplectic_asymptotic(int i, int m, const EnsembleParams& prm);
// (K-m)/(m+2) * g/(1-g)
double symplectic_second_weight(int m, int K);

// Exact value against its approximation, compared in log space so large K does
// not overflow. rel_err = approx/exact - 1.
struct AsymptoticCheck {
  AsymptoticValue approx;
  long double exact_log_abs = 0;
  int exact_sign = 0;
  double rel_err = 0;
};
AsymptoticCheck krawtchouk_check(int j, int m, const EnsembleParams& prm);
AsymptoticCheck symplectic_check(int i, int m, const EnsembleParams& prm);

// rho(x) = arccos((1-4H)/sqrt(1-4x^2))/pi. Outside the arccos domain the density
// saturates at 0 (or 1 when the argument drops below -1) and *in_support is false.
double limit_density(double x, double H, bool* in_support = nullptr);
// x-coordinate where the arccos argument reaches 1.
double support_edge(double H);

double sine_kernel(int di, double rho);

// 2 arccot(x / sqrt(2H - 4H^2 - x^2))
double phase_increment_beta(double x, double H);
// Per-site phase step pi + arctan(2 sqrt(2H-4H^2-x^2)/(1-4H)), finite at H = 1/4.
double phase_step(double x, double H);
// Distance mod pi between phase_step and pi * limit_density.
double phase_density_residual(double x, double H);

double wrap_angle(double a);

}  // namespace symdpp
