// SPDX-License-Identifier: Apache-2.0
#include "asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "error.hpp"
#include "orthopoly.hpp"

namespace symdpp {

namespace {

constexpr double kPi = std::numbers::pi;

// Step function with theta(0) = 0.
double step(double x) { return x > 0 ? 1.0 : 0.0; }

void check_unit(double mu, double g) {
  if (!(mu > 0 && mu < 1)) fail(Status::domain, "mu must lie strictly inside (0, 1)");
  if (!(g > 0 && g < 1)) fail(Status::domain, "g must lie strictly inside (0, 1)");
}

void check_region(double mu, double g) {
  check_unit(mu, g);
  double d = oscillatory_discriminant(mu, g);
  if (d <= kRegionMargin)
    fail(Status::region, "outside the oscillatory region: g(1-g) - (mu-1/2)^2 = " + std::to_string(d));
}

}  // namespace

double wrap_angle(double a) {
  a = std::remainder(a, 2 * kPi);
  if (a <= -kPi) a += 2 * kPi;
  return a;
}

cplx action(cplx t, double mu, double g, double p) {
  return (1 - mu) * std::log(t - p) + (g - 1) * std::log(t) - g * std::log(1.0 - t);
}

cplx action_d1(cplx t, double mu, double g, double p) {
  return (1 - mu) / (t - p) + (g - 1) / t + g / (1.0 - t);
}

cplx action_d2(cplx t, double mu, double g, double p) {
  return -(1 - mu) / ((t - p) * (t - p)) - (g - 1) / (t * t) + g / ((1.0 - t) * (1.0 - t));
}

double oscillatory_discriminant(double mu, double g) { return g * (1 - g) - (mu - 0.5) * (mu - 0.5); }

SaddleData saddle_points(double mu, double g, double p) {
  if (mu <= 0 || mu >= 1) fail(Status::domain, "singular parameter: mu must lie in (0, 1)");
  if (g <= 0 || g >= 1) fail(Status::domain, "g must lie in (0, 1)");
  SaddleData sd;
  // mu t^2 + (g - mu - p) t + (1 - g) p = 0
  const double b = g - mu - p;
  const double c = (1 - g) * p;
  const double disc = b * b - 4 * mu * c;
  sd.disc = -disc;  // equals g(1-g) - (mu-1/2)^2 at p = 1/2
  if (disc < 0) {
    sd.oscillatory = true;
    double re = -b / (2 * mu), im = std::sqrt(-disc) / (2 * mu);
    sd.t0plus = {re, im};
    sd.t0minus = {re, -im};
  } else {
    double r = std::sqrt(disc);
    // stable pair of real roots
    double q = -0.5 * (b + std::copysign(r, b));
    double r1 = q / mu, r2 = q != 0 ? c / q : -b / (2 * mu);
    sd.t0plus = {std::max(r1, r2), 0};
    sd.t0minus = {std::min(r1, r2), 0};
  }
  return sd;
}

HeavisideAngles heaviside_angles(double mu, double g) {
  const double s = std::sqrt(oscillatory_discriminant(mu, g));
  HeavisideAngles h;
  h.chi = std::atan(s / (mu + 0.5 - g)) + kPi * step(g - 0.5 - mu);
  h.tau = -std::atan(s / (g + mu - 0.5)) - kPi * step(0.5 - g - mu);
  h.gamma = std::atan(s / (0.5 - g)) + kPi * step(g - 0.5);
  h.zeta1 = std::atan(s / (1.5 - g - mu)) + kPi * step(mu + g - 1.5);
  h.zeta2 = std::atan(s / (mu - 0.5)) + kPi * step(0.5 - mu);
  return h;
}

SaddleData phase_data(double mu, double g) {
  check_region(mu, g);
  SaddleData sd = saddle_points(mu, g);
  const double s = std::sqrt(sd.disc);
  sd.chi = std::atan2(s, mu + 0.5 - g);
  sd.tau = -std::atan2(s, g + mu - 0.5);
  sd.gamma = std::atan2(s, 0.5 - g);
  sd.zeta1 = std::atan2(s, 1.5 - g - mu);
  sd.zeta2 = std::atan2(s, mu - 0.5);
  sd.zeta1hat = std::atan(s / (1.5 - g - mu));
  sd.tauhat = std::atan(s / (g + mu - 0.5));

  sd.argfpp = std::arg(action_d2(sd.t0minus, mu, g));
  sd.theta_sdp = -sd.argfpp / 2 + kPi / 2;
  // The principal arg jumps by 2 pi near the region edge; keep theta on the
  // branch that contains the mu = 1/2 line, (pi/2, 3pi/2) below g = 1/2 and
  // (-pi/2, pi/2) above.
  if (g < 0.5 && sd.theta_sdp < kPi / 2) sd.theta_sdp += kPi;
  if (g > 0.5 && sd.theta_sdp > kPi / 2) sd.theta_sdp -= kPi;

  const double h = g - 0.5;
  const double r = std::sqrt((3 - 2 * mu) * mu) / 2;
  sd.sigma = -2 * kPi * step(h + r) + 2 * kPi * step(h - r);
  // The step corrections switch on where mu/4 - (g-1/2)^2 changes sign; test that
  // quantity directly so the atan branch and the steps agree under rounding.
  const double q = mu / 4 - h * h;
  const double num = h * (h * h - 0.75 * mu + mu * mu / 2);
  const double base = q != 0 ? std::atan(num / (s * q)) : std::copysign(kPi / 2, num);
  double outer = 0;
  if (q < 0) outer = h < 0 ? kPi : -kPi;
  const double bracket = base + sd.sigma + outer;
  sd.argfpp_closed = wrap_angle(-bracket);

  sd.re_f = 0.5 * (std::log((1 - mu) / (2 * (1 - g))) + 2 * g * std::atanh(1 - 2 * g) + mu * std::log(4 * mu / (1 - mu)));
  sd.im_f = (1 - mu) * sd.gamma + (g - 1) * sd.chi - g * sd.tau;
  return sd;
}

double delta_hat(const SaddleData& sd, double mu, int m, int K) {
  return (m - 1) * sd.zeta2 + K * sd.zeta1hat - K * mu * sd.gamma + 2 * sd.tauhat;
}

namespace {

// log of the Krawtchouk envelope and its phase for degree m at lattice point j,
// with the angles evaluated at the supplied g.
struct EnvelopePhase {
  long double log_env;
  double phase;
};

EnvelopePhase envelope_phase(int j, int m, double g, const EnsembleParams& prm) {
  const int K = prm.K;
  const long double mu = 0.5L - static_cast<long double>(j) / K;
  const long double gl = g;
  check_region(static_cast<double>(mu), g);
  SaddleData sd = phase_data(static_cast<double>(mu), g);
  const long double D = oscillatory_discriminant(static_cast<double>(mu), g);
  long double lp = std::lgamma(static_cast<long double>(m) + 1) - m * std::log(static_cast<long double>(prm.n)) +
                   0.5L * std::log(2.0L / (std::numbers::pi_v<long double> * K)) +
                   (m - K - 0.5L) / 2 * std::log1p(-gl) + (K / 2.0L + j + 0.5L) / 2 * std::log1p(-mu) -
                   (m + 0.5L) / 2 * std::log(gl) - (j - K / 2.0L - 0.5L) / 2 * std::log(mu) +
                   (m - K / 2.0L) * std::log(0.5L) - std::log(D) / 4;
  double phase = sd.theta_sdp - delta_hat(sd, static_cast<double>(mu), m, K);
  return {lp, phase};
}

}  // namespace

AsymptoticValue krawtchouk_asymptotic(int j, int m, const EnsembleParams& prm) {
  require_half(prm, "krawtchouk_asymptotic");
  if (m < 1 || m >= prm.K) fail(Status::domain, "degree outside (0, K)");
  auto ep = envelope_phase(j, m, g_of(m, prm.K), prm);
  AsymptoticValue v;
  v.log_envelope = ep.log_env;
  v.phase = ep.phase;
  v.trig = std::sin(ep.phase);
  v.value = std::exp(ep.log_env) * v.trig;
  return v;
}

double symplectic_second_weight(int m, int K) {
  double g = g_of(m, K);
  return static_cast<double>(K - m) / (m + 2) * g / (1 - g);
}

AsymptoticValue symplectic_asymptotic(int i, int m, const EnsembleParams& prm) {
  require_half(prm, "symplectic_asymptotic");
  if (i == 0) fail(Status::domain, "symplectic asymptotic has a 1/i^2 prefactor");
  if (m % 2) fail(Status::domain, "symplectic asymptotic needs even m");
  if (m < 2 || m + 2 >= prm.K) fail(Status::domain, "degree outside the asymptotic range");
  const int K = prm.K;
  auto lead = envelope_phase(i, m + 2, g_of(m, K), prm);
  auto own = envelope_phase(i, m + 2, g_of(m + 2, K), prm);
  auto low = envelope_phase(i, m, g_of(m, K), prm);
  const double w = symplectic_second_weight(m, K);
  const double trig = std::sin(own.phase) + w * std::sin(low.phase);
  const long double x = static_cast<long double>(i) / prm.n;
  AsymptoticValue v;
  v.log_envelope = lead.log_env - 2 * std::log(std::fabs(x)) + std::log1p(static_cast<long double>(w));
  v.phase = own.phase;
  v.trig = trig / (1 + w);
  v.value = std::exp(lead.log_env) * trig / (x * x);
  return v;
}

namespace {

AsymptoticCheck finish_check(const AsymptoticValue& av, const mpq_class& exact) {
  AsymptoticCheck c;
  c.approx = av;
  c.exact_sign = sgn(exact);
  c.exact_log_abs = log_abs(exact);
  if (c.exact_sign == 0) {
    c.rel_err = std::numeric_limits<double>::infinity();
    return c;
  }
  long double ratio = std::exp(static_cast<long double>(av.log_envelope) - c.exact_log_abs) * av.trig * c.exact_sign;
  c.rel_err = static_cast<double>(ratio - 1);
  return c;
}

}  // namespace

AsymptoticCheck krawtchouk_check(int j, int m, const EnsembleParams& prm) {
  return finish_check(krawtchouk_asymptotic(j, m, prm), krawtchouk_value(m, j, prm));
}

AsymptoticCheck symplectic_check(int i, int m, const EnsembleParams& prm) {
  return finish_check(symplectic_asymptotic(i, m, prm), symplectic_value(m, i, prm));
}

double limit_density(double x, double H, bool* in_support) {
  if (!(H > 0 && H < 0.5)) fail(Status::domain, "H must lie in (0, 1/2)");
  bool ok = std::fabs(x) < 0.5;
  double rho = 0;
  if (ok) {
    double arg = (1 - 4 * H) / std::sqrt(1 - 4 * x * x);
    if (arg >= 1) {
      ok = false;
    } else if (arg <= -1) {
      ok = false;
      rho = 1;
    } else {
      rho = std::acos(arg) / kPi;
    }
  }
  if (in_support) *in_support = ok;
  return rho;
}

double support_edge(double H) {
  double q = 1 - 4 * H;
  return std::sqrt(1 - q * q) / 2;
}

double sine_kernel(int di, double rho) {
  if (di == 0) return 1;
  double z = kPi * rho * di;
  if (z == 0) return 1;
  return std::sin(z) / z;
}

namespace {

double bulk_root(double x, double H) {
  double r = 2 * H - 4 * H * H - x * x;
  if (r <= 0) fail(Status::region, "x outside the bulk: 2H - 4H^2 - x^2 <= 0");
  return std::sqrt(r);
}

}  // namespace

double phase_increment_beta(double x, double H) {
  // arccot with range (0, pi)
  return 2 * std::atan2(bulk_root(x, H), x);
}

double phase_step(double x, double H) {
  double s = bulk_root(x, H);
  double q = 1 - 4 * H;
  if (q == 0) return kPi + kPi / 2;
  return kPi + std::atan(2 * s / q);
}

double phase_density_residual(double x, double H) {
  double d = std::remainder(phase_step(x, H) - kPi * limit_density(x, H), kPi);
  return std::fabs(d);
}

}  // namespace symdpp
