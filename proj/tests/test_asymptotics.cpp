// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "asymptotics.hpp"
#include "error.hpp"
#include "orthopoly.hpp"

using namespace symdpp;

namespace {

constexpr double kPi = std::numbers::pi;

Status status_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.status();
  }
  return Status::ok;
}

EnsembleParams at(int K, double H) {
  int n = static_cast<int>(std::lround(H * K));
  return EnsembleParams::make(n, K / 2 - n);
}

double angle_gap(double a, double b) { return std::fabs(wrap_angle(a - b)); }

}  // namespace

TEST_CASE("saddle points") {
  auto sd = saddle_points(0.5, 0.5);
  CHECK(sd.oscillatory);
  CHECK(std::abs(sd.t0plus - cplx(0.5, 0.5)) < 1e-15);
  CHECK(std::abs(sd.t0minus - cplx(0.5, -0.5)) < 1e-15);
  // 1/(t-1/2) - 1/t + 1/(1-t) at t = 1/2 + i/2
  CHECK(std::abs(action_d1(sd.t0plus, 0.5, 0.5)) < 1e-15);

  for (double mu : {0.2, 0.45, 0.7})
    for (double g : {0.3, 0.5, 0.8}) {
      auto s = saddle_points(mu, g);
      if (!s.oscillatory) continue;
      CHECK(s.t0plus == std::conj(s.t0minus));
      // circle in the t-plane for fixed mu
      double lhs = std::pow(s.t0plus.real() - 0.5, 2) + std::pow(s.t0plus.imag(), 2);
      CHECK(lhs == doctest::Approx((1 - mu) / (4 * mu)).epsilon(1e-13));
      CHECK(std::abs(s.t0plus) == doctest::Approx(std::sqrt(2 * mu * (1 - g)) / (2 * mu)).epsilon(1e-13));
    }

  // double root on the boundary (mu - 1/2)^2 = g(1-g)
  const double g = 0.2, mu = 0.5 + std::sqrt(g * (1 - g));
  auto edge = saddle_points(mu, g);
  CHECK(std::abs(edge.t0plus - edge.t0minus) < 1e-7);
  auto real = saddle_points(0.95, 0.1);
  CHECK_FALSE(real.oscillatory);
  CHECK(std::abs(action_d1(real.t0plus, 0.95, 0.1)) < 1e-12);
  CHECK(std::abs(action_d1(real.t0minus, 0.95, 0.1)) < 1e-12);

  CHECK(status_of([] { saddle_points(0, 0.5); }) == Status::domain);
  CHECK(status_of([] { saddle_points(1, 0.5); }) == Status::domain);
}

TEST_CASE("phase data over the oscillatory region") {
  double worst_res = 0, worst_re = 0, worst_im = 0, worst_arg = 0, worst_h = 0;
  int points = 0;
  for (int a = 1; a < 100; ++a)
    for (int b = 1; b < 100; ++b) {
      const double mu = a / 100.0, g = b / 100.0;
      if (oscillatory_discriminant(mu, g) <= 2 * kRegionMargin) continue;
      auto sd = phase_data(mu, g);
      ++points;
      worst_res = std::max({worst_res, std::abs(action_d1(sd.t0plus, mu, g)), std::abs(action_d1(sd.t0minus, mu, g))});
      auto f = action(sd.t0plus, mu, g);
      worst_re = std::max(worst_re, std::fabs(f.real() - sd.re_f));
      worst_im = std::max(worst_im, std::fabs(f.imag() - sd.im_f));
      CHECK(action(sd.t0minus, mu, g).imag() == doctest::Approx(-f.imag()).epsilon(1e-12));
      // the closed form has a jump where mu/4 = (g-1/2)^2
      if (std::fabs(mu / 4 - (g - 0.5) * (g - 0.5)) > 1e-9) worst_arg = std::max(worst_arg, angle_gap(sd.argfpp_closed, sd.argfpp));
      auto h = heaviside_angles(mu, g);
      // skip the lines where an atan denominator vanishes and the step picks a side
      const bool on_line = std::fabs(1.5 - g - mu) < 1e-12 || std::fabs(g + mu - 0.5) < 1e-12 ||
                           std::fabs(g - mu - 0.5) < 1e-12 || std::fabs(mu - 0.5) < 1e-12 || std::fabs(g - 0.5) < 1e-12;
      if (!on_line)
        worst_h = std::max({worst_h, std::fabs(h.chi - sd.chi), std::fabs(h.tau - sd.tau), std::fabs(h.gamma - sd.gamma),
                          std::fabs(h.zeta1 - sd.zeta1), std::fabs(h.zeta2 - sd.zeta2)});
      if (g < 0.5) {
        CHECK(sd.theta_sdp > kPi / 2);
        CHECK(sd.theta_sdp < 1.5 * kPi);
      }
      if (g > 0.5) {
        CHECK(sd.theta_sdp > -kPi / 2);
        CHECK(sd.theta_sdp < kPi / 2);
      }
    }
  CHECK(points > 3000);
  CHECK(worst_res < 1e-12);
  CHECK(worst_re < 1e-12);
  CHECK(worst_im < 1e-12);
  CHECK(worst_arg < 1e-9);
  CHECK(worst_h < 1e-12);
}

TEST_CASE("phase examples") {
  auto sd = phase_data(0.5 - 1e-12, 0.5);
  CHECK(sd.chi == doctest::Approx(kPi / 4).epsilon(1e-9));
  CHECK(phase_data(0.5, 0.5).chi == doctest::Approx(kPi / 4));
  // zeta2 picks up pi below mu = 1/2 only
  auto above = heaviside_angles(0.6, 0.5), below = heaviside_angles(0.4, 0.5);
  CHECK(above.zeta2 < kPi / 2);
  CHECK(below.zeta2 > kPi / 2);
  CHECK(status_of([] { phase_data(0.99, 0.01); }) == Status::region);
}

TEST_CASE("final phase is continuous across the branch lines") {
  const int K = 400, m = 180;
  auto e = [&](double mu, double g) {
    auto sd = phase_data(mu, g);
    return std::polar(1.0, sd.theta_sdp - delta_hat(sd, mu, m, K));
  };
  for (double g : {0.35, 0.45, 0.6}) CHECK(std::abs(e(0.5 - 1e-9, g) - e(0.5 + 1e-9, g)) < 1e-5);
  for (double mu : {0.35, 0.45, 0.6}) CHECK(std::abs(e(mu, 0.5 - 1e-9) - e(mu, 0.5 + 1e-9)) < 1e-5);
}

TEST_CASE("Krawtchouk asymptotic accuracy") {
  auto p200 = at(200, 0.25);
  auto c = krawtchouk_check(10, 100, p200);
  CHECK(std::fabs(c.rel_err) < 0.1);
  auto c400 = krawtchouk_check(20, 200, at(400, 0.25));
  CHECK(std::fabs(c400.rel_err) < std::fabs(c.rel_err));
  // exact oracle recomputed here in log space
  auto exact = krawtchouk_value(100, 10, p200);
  CHECK(c.exact_log_abs == doctest::Approx(static_cast<double>(log_abs(exact))));
  CHECK(std::fabs(static_cast<double>(krawtchouk_asymptotic(10, 100, p200).value) / exact.get_d() - 1) < 0.1);
  CHECK(status_of([&] { krawtchouk_asymptotic(99, 20, p200); }) == Status::region);
  CHECK(status_of([&] { krawtchouk_asymptotic(0, 0, p200); }) == Status::domain);
}

TEST_CASE("asymptotic signs follow the exact polynomial in the bulk") {
  auto prm = at(400, 0.25);
  const int m = 200;
  int compared = 0, agree = 0;
  for (int j = -60; j <= 60; ++j) {
    auto c = krawtchouk_check(j, m, prm);
    if (std::fabs(c.approx.trig) < 0.05) continue;
    ++compared;
    agree += (c.approx.trig > 0 ? 1 : -1) == c.exact_sign;
  }
  CHECK(compared > 50);
  CHECK(agree == compared);
}

TEST_CASE("symplectic asymptotic") {
  auto prm = at(200, 0.25);
  const int m = 2 * prm.n;
  // m / (m + 2) at m = 2n, so 1 only to leading order
  CHECK(symplectic_second_weight(m, prm.K) == doctest::Approx(double(m) / (m + 2)));
  CHECK(std::fabs(symplectic_second_weight(m, prm.K) - 1) < 2.5 / m);
  CHECK(symplectic_second_weight(2 * 30, 200) == doctest::Approx((140.0 / 62) * (0.3 / 0.7)));
  auto c = symplectic_check(25, m, prm);
  CHECK(std::fabs(c.rel_err) < 0.15);
  auto plus = symplectic_asymptotic(25, m, prm), minus = symplectic_asymptotic(-25, m, prm);
  CHECK(std::fabs(static_cast<double>(plus.value)) == doctest::Approx(std::fabs(static_cast<double>(minus.value))).epsilon(1e-9));
  CHECK(status_of([&] { symplectic_asymptotic(0, m, prm); }) == Status::domain);
  CHECK(status_of([&] { symplectic_asymptotic(5, m + 1, prm); }) == Status::domain);
}

TEST_CASE("error shrinks with K at fixed (g, mu)") {
  // K-tilde at g = 0.4, j/K = 0.05; G at H = 0.2, i/K = 0.1
  double prev = 1;
  for (int K : {200, 400, 800, 1600}) {
    auto c = krawtchouk_check(K / 20, 2 * K / 5, at(K, 0.25));
    CHECK(std::fabs(c.rel_err) < prev);
    prev = std::fabs(c.rel_err);
  }
  CHECK(prev < 0.05);
  auto g200 = symplectic_check(20, 80, at(200, 0.2));
  auto g1600 = symplectic_check(160, 640, at(1600, 0.2));
  CHECK(std::fabs(g1600.rel_err) < std::fabs(g200.rel_err));
}

TEST_CASE("limit density") {
  CHECK(limit_density(0, 0.25) == doctest::Approx(0.5));
  // flat at H = 1/4; the edge value drops to 0 below and rises to 1 above
  CHECK(limit_density(0.4999, 0.25) == doctest::Approx(0.5));
  CHECK(limit_density(support_edge(0.1) * (1 - 1e-9), 0.1) < 1e-3);
  CHECK(limit_density(support_edge(0.4) * (1 - 1e-9), 0.4) > 1 - 1e-3);
  bool in = true;
  CHECK(limit_density(0.49, 0.1, &in) == 0);
  CHECK_FALSE(in);
  for (double H : {0.1, 0.2, 0.25, 0.4}) {
    CHECK(support_edge(H) == doctest::Approx(std::sqrt(8 * H * (1 - 2 * H)) / 2));
    const double e = support_edge(H);
    for (int q = 1; q < 20; ++q) {
      double x = e * q / 20;
      double rho = limit_density(x, H, &in);
      CHECK(in);
      CHECK(rho >= 0);
      CHECK(rho <= 1);
      CHECK(std::fabs(std::cos(kPi * rho) - (1 - 4 * H) / std::sqrt(1 - 4 * x * x)) < 1e-12);
    }
  }
  CHECK(status_of([] { limit_density(0, 0.5); }) == Status::domain);
}

TEST_CASE("sine kernel") {
  CHECK(sine_kernel(0, 0.3) == 1);
  CHECK(sine_kernel(1, 0.5) == doctest::Approx(2 / kPi));
  CHECK(std::fabs(sine_kernel(2, 0.5)) < 1e-16);
  CHECK(sine_kernel(-3, 0.2) == sine_kernel(3, 0.2));
  CHECK(sine_kernel(4, 0) == 1);
}

TEST_CASE("phase increment and the density") {
  CHECK(phase_increment_beta(0, 0.25) == doctest::Approx(kPi));
  CHECK(phase_step(0.1, 0.25) == doctest::Approx(1.5 * kPi));
  for (double H : {0.1, 0.25, 0.4}) {
    const double lim = std::sqrt(2 * H - 4 * H * H);
    for (int q = -9; q <= 9; ++q) {
      double x = lim * q / 10;
      CHECK(phase_density_residual(x, H) < 1e-12);
    }
  }
  CHECK(status_of([] { phase_increment_beta(0.5, 0.25); }) == Status::region);
}
