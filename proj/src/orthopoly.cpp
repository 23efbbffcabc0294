// SPDX-License-Identifier: Apache-2.0
#include "orthopoly.hpp"

#include <cmath>
#include <array>
#include <sstream>

#include "error.hpp"

namespace symdpp {

std::string poly_str(const ExactPoly& p, const char* var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const mpq_class& c = p.c[i];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = a == 1 && i > 0;
    if (!unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

mpz_class binom(long K, long j) {
  mpz_class r;
  if (j < 0 || j > K) return 0;
  mpz_bin_uiui(r.get_mpz_t(), K, j);
  return r;
}

mpz_class factorial(unsigned long v) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), v);
  return r;
}

mpq_class qpow(const mpq_class& x, long e) {
  mpq_class r = 1;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
  r = mpq_class(num, den);
  r.canonicalize();
  return r;
}

void check_degree(int m, const EnsembleParams& prm) {
  if (m < 0) fail(Status::domain, "negative degree");
  if (m > prm.K) fail(Status::domain, "degree exceeds K: weight support exhausted");
}

}  // namespace

mpq_class krawtchouk_alpha(int m, const EnsembleParams& prm) {
  mpq_class v = prm.p * (prm.K - m) + m * (1 - prm.p) - mpq_class(prm.K, 2);
  v /= prm.n;
  v.canonicalize();
  return v;
}

mpq_class krawtchouk_beta(int m, const EnsembleParams& prm) {
  mpq_class v = mpq_class(m) * (prm.K - m + 1) * prm.p * (1 - prm.p);
  v /= mpq_class(prm.n) * prm.n;
  v.canonicalize();
  return v;
}

mpq_class weight_exact(int i, const EnsembleParams& prm) {
  const int h = prm.K / 2;
  if (i < -h || i > h) return 0;
  mpq_class w = mpq_class(binom(prm.K, h + i)) * qpow(prm.p, h + i) * qpow(1 - prm.p, h - i);
  w.canonicalize();
  return w;
}

long double log_weight(int i, const EnsembleParams& prm) {
  const int h = prm.K / 2;
  long double p = to_real<long double>(prm.p);
  return std::lgamma(static_cast<long double>(prm.K) + 1) - std::lgamma(static_cast<long double>(h + i) + 1) -
         std::lgamma(static_cast<long double>(h - i) + 1) + (h + i) * std::log(p) + (h - i) * std::log1p(-p);
}

mpq_class omega2(const EnsembleParams& prm) {
  mpq_class q = 1 - 2 * prm.p;
  mpq_class v = mpq_class(prm.K) * (prm.K * q * q + 4 * prm.p * (1 - prm.p));
  v /= mpq_class(4) * prm.n * prm.n;
  v.canonicalize();
  return v;
}

std::vector<ExactPoly> monic_krawtchouk_table(int max_m, const EnsembleParams& prm) {
  check_degree(max_m, prm);
  std::vector<ExactPoly> t;
  t.push_back(ExactPoly::constant(1));
  ExactPoly prev;
  for (int m = 0; m < max_m; ++m) {
    ExactPoly next = t[m].mul_x() - t[m] * krawtchouk_alpha(m, prm);
    if (m > 0) next = next - t[m - 1] * krawtchouk_beta(m, prm);
    t.push_back(next);
  }
  return t;
}

ExactPoly monic_krawtchouk(int m, const EnsembleParams& prm) { return monic_krawtchouk_table(m, prm).back(); }

mpq_class weighted_inner(const ExactPoly& a, const ExactPoly& b, int upower, const EnsembleParams& prm) {
  const int h = prm.K / 2;
  mpq_class s = 0;
  for (int i = -h; i <= h; ++i) {
    mpq_class u(i, prm.n);
    u.canonicalize();
    mpq_class v = a.eval(u) * b.eval(u) * weight_exact(i, prm);
    for (int e = 0; e < upower; ++e) v *= u;
    s += v;
  }
  s.canonicalize();
  return s;
}

mpq_class krawtchouk_orthogonality_check(int l, int m, const EnsembleParams& prm) {
  auto t = monic_krawtchouk_table(std::max(l, m), prm);
  return weighted_inner(t[l], t[m], 0, prm);
}

mpq_class krawtchouk_norm(int m, const EnsembleParams& prm) {
  mpz_class f = factorial(m);
  mpq_class v = mpq_class(f * f * binom(prm.K, m)) * qpow(prm.p * (1 - prm.p), m);
  mpz_class nn;
  mpz_ui_pow_ui(nn.get_mpz_t(), prm.n, 2ul * m);
  v /= nn;
  v.canonicalize();
  return v;
}

ChristoffelResult christoffel_transform(int m, const std::vector<ExactPoly>& kt) {
  if (m < 0 || m + 2 >= static_cast<int>(kt.size())) fail(Status::domain, "Christoffel transform needs K_{m+2}");
  const ExactPoly &k0 = kt[m], &k1 = kt[m + 1], &k2 = kt[m + 2];
  mpq_class C = k0.coeff(0) * k1.coeff(1) - k1.coeff(0) * k0.coeff(1);
  if (C == 0) fail(Status::degenerate, "Christoffel determinant vanishes");
  ChristoffelResult res;
  res.c0 = (k1.coeff(0) * k2.coeff(1) - k2.coeff(0) * k1.coeff(1)) / C;
  res.c1 = -(k0.coeff(0) * k2.coeff(1) - k2.coeff(0) * k0.coeff(1)) / C;
  res.c0.canonicalize();
  res.c1.canonicalize();
  ExactPoly num = k2 + k1 * res.c1 + k0 * res.c0;
  bool exact = false;
  res.G = num.divide_x2(&exact);
  if (!exact) fail(Status::consistency, "Christoffel numerator is not divisible by u^2");
  if (res.G.degree() != m || res.G.c.back() != 1) fail(Status::consistency, "Christoffel transform is not monic of degree m");
  return res;
}

ChristoffelResult christoffel_transform(int m, const EnsembleParams& prm) {
  check_degree(m + 2, prm);
  return christoffel_transform(m, monic_krawtchouk_table(m + 2, prm));
}

ExactPoly christoffel_explicit(int m, const std::vector<ExactPoly>& kt) {
  if (m < 0 || m + 2 >= static_cast<int>(kt.size())) fail(Status::domain, "Christoffel transform needs K_{m+2}");
  const int d = m % 2;  // even degrees use values at 0, odd degrees first derivatives
  mpq_class den = kt[m].coeff(d);
  if (den == 0) fail(Status::degenerate, "vanishing denominator in the Christoffel ratio");
  mpq_class S = -kt[m + 2].coeff(d) / den;
  bool exact = false;
  ExactPoly G = (kt[m + 2] + kt[m] * S).divide_x2(&exact);
  if (!exact) fail(Status::consistency, "explicit Christoffel numerator is not divisible by u^2");
  return G;
}

std::vector<ExactPoly> symplectic_table(int max_m, const EnsembleParams& prm) {
  check_degree(max_m + 2, prm);
  auto kt = monic_krawtchouk_table(max_m + 2, prm);
  std::vector<ExactPoly> g;
  for (int m = 0; m <= max_m; ++m) g.push_back(christoffel_transform(m, kt).G);
  return g;
}

mpq_class constant_term_ratio(int m, const EnsembleParams& prm) {
  require_half(prm, "constant_term_ratio");
  if (m % 2) fail(Status::domain, "constant_term_ratio needs even m");
  check_degree(m + 2, prm);
  // K_j(0) by the recurrence at u = 0 (alpha vanishes at p = 1/2)
  mpq_class km1 = 0, k0 = 1, k_m = 0;
  for (int j = 0; j < m + 2; ++j) {
    if (j == m) k_m = k0;
    mpq_class k1 = -krawtchouk_beta(j, prm) * km1;
    km1 = k0;
    k0 = k1;
  }
  if (k_m == 0) fail(Status::degenerate, "K_m(0) vanishes");
  mpq_class ratio = k0 / k_m;
  ratio.canonicalize();
  mpq_class expect(-mpz_class(prm.K - m) * (m + 1), mpz_class(4) * prm.n * prm.n);
  expect.canonicalize();
  if (ratio != expect) fail(Status::numeric, "constant-term identity fails at m=" + std::to_string(m));
  return ratio;
}

mpq_class lambda_direct(const ExactPoly& G, const EnsembleParams& prm) { return weighted_inner(G, G, 2, prm); }

NormSequence norm_sequence(const EnsembleParams& prm, int max_m) {
  require_half(prm, "norm_sequence");
  check_degree(max_m + 2, prm);
  auto kt = monic_krawtchouk_table(max_m + 2, prm);
  NormSequence ns;
  for (int m = 0; m <= max_m + 2; ++m) ns.L.push_back(krawtchouk_norm(m, prm));
  for (int m = 0; m <= max_m; ++m) ns.S.push_back(christoffel_transform(m, kt).c0);
  ns.alpha.assign(max_m + 1, 0);
  ns.beta.assign(max_m + 1, 0);
  ns.Lambda.assign(max_m + 1, 0);
  ns.Lambda[0] = omega2(prm);
  for (int m = 0; m < max_m; ++m) {
    // rec2 with alpha_m = 0
    mpq_class next = ns.L[m + 2] + ns.S[m] * ns.S[m] * ns.L[m];
    if (m > 0) next -= ns.beta[m] * ns.beta[m] * ns.Lambda[m - 1];
    next.canonicalize();
    if (next <= 0) fail(Status::degenerate, "non-positive norm in the recurrence");
    ns.Lambda[m + 1] = next;
    // rec1 at m+1
    if (ns.Lambda[m] == 0) fail(Status::degenerate, "vanishing norm");
    ns.beta[m + 1] = ns.S[m + 1] * ns.L[m + 1] / ns.Lambda[m];
    ns.beta[m + 1].canonicalize();
  }
  for (int m = 2; m <= max_m; ++m) {
    if (ns.S[m] * ns.L[m] != ns.beta[m] * ns.Lambda[m - 1]) fail(Status::consistency, "rec1 violated");
  }
  // rec4 on the range where all terms exist
  for (int m = 1; m + 2 <= max_m; ++m) {
    mpq_class lhs = ns.L[m + 2] + ns.S[m] * ns.S[m] * ns.L[m];
    mpq_class mid = ns.S[m + 2] * ns.L[m + 2] / ns.beta[m + 2] + ns.beta[m] * ns.S[m] * ns.L[m];
    mpq_class rhs = ns.Lambda[m + 1] + ns.S[m] * ns.S[m] * ns.L[m] * ns.L[m] / ns.Lambda[m - 1];
    if (lhs != mid || lhs != rhs) fail(Status::consistency, "rec4 violated at m=" + std::to_string(m));
  }
  return ns;
}

TtrExact ttr_from_polynomials(int max_m, const EnsembleParams& prm) {
  check_degree(max_m + 3, prm);
  auto G = symplectic_table(max_m + 1, prm);
  TtrExact t;
  t.alpha.assign(max_m + 1, 0);
  t.beta.assign(max_m + 1, 0);
  for (int m = 0; m <= max_m; ++m) {
    ExactPoly rem = G[m].mul_x() - G[m + 1];
    t.alpha[m] = rem.coeff(m);
    rem = rem - G[m] * t.alpha[m];
    if (m > 0) {
      t.beta[m] = rem.coeff(m - 1);
      rem = rem - G[m - 1] * t.beta[m];
    }
    if (!rem.is_zero()) fail(Status::consistency, "G polynomials violate a three-term recurrence");
  }
  return t;
}

template <class T>
JacobiCoefficients<T> krawtchouk_jacobi(int M, const EnsembleParams& prm) {
  check_degree(M, prm);
  JacobiCoefficients<T> j;
  j.flavor = JacobiCoefficients<T>::Flavor::krawtchouk_orthonormal;
  j.a.assign(M + 1, T(0));
  j.b.assign(M + 1, T(0));
  for (int m = 0; m <= M; ++m) {
    j.b[m] = to_real<T>(krawtchouk_alpha(m, prm));
    if (m > 0) j.a[m] = -real_sqrt(to_real<T>(krawtchouk_beta(m, prm)));
  }
  return j;
}

template <class T>
QRResult<T> qr_step(const JacobiCoefficients<T>& j) {
  const int M = j.size() - 1;
  if (M < 2) fail(Status::domain, "QR step needs at least three rows");
  const auto& a = j.a;
  const auto& b = j.b;
  QRResult<T> out;
  auto& st = out.state;
  st.r.assign(M, T(0));
  st.s.assign(M + 1, T(0));
  st.astar.assign(M + 1, T(0));
  st.bstar.assign(M, T(0));
  auto check = [](const T& r) {
    if (r == T(0)) fail(Status::numeric, "QR breakdown: zero diagonal in R");
  };
  st.astar[1] = a[1];
  st.bstar[0] = b[0];
  st.r[0] = real_sqrt(a[1] * a[1] + b[0] * b[0]);
  check(st.r[0]);
  for (int k = 1; k <= M; ++k) {
    if (k >= 2) st.astar[k] = a[k] * st.bstar[k - 2] / st.r[k - 2];
    st.s[k] = (st.astar[k] * st.bstar[k - 1] + a[k] * b[k]) / st.r[k - 1];
    if (k == M) break;
    st.bstar[k] = (st.bstar[k - 1] * b[k] - st.astar[k] * a[k]) / st.r[k - 1];
    st.r[k] = real_sqrt(a[k + 1] * a[k + 1] + st.bstar[k] * st.bstar[k]);
    check(st.r[k]);
  }
  auto& h = out.hat;
  h.flavor = JacobiCoefficients<T>::Flavor::symplectic_transformed;
  h.a.assign(M, T(0));
  h.b.assign(M, T(0));
  h.b[0] = b[0] + a[1] * st.s[1] / st.r[0];
  for (int k = 1; k < M; ++k) {
    h.a[k] = a[k] * st.r[k] / st.r[k - 1];
    h.b[k] = st.bstar[k - 1] * st.bstar[k] / st.r[k - 1] + a[k + 1] * st.s[k + 1] / st.r[k];
  }
  return out;
}

template <class T>
JacobiCoefficients<T> qr_step_rotations(const JacobiCoefficients<T>& j) {
  const int M = j.size() - 1;
  const int N = M + 1;
  if (M < 2) fail(Status::domain, "QR step needs at least three rows");
  // band storage: offsets -1..3 from the diagonal
  std::vector<std::array<T, 5>> band(N);
  for (auto& row : band) row.fill(T(0));
  auto at = [&](int i, int c) -> T& { return band[i][c - i + 1]; };
  auto inside = [&](int i, int c) { return i >= 0 && c >= 0 && i < N && c < N && c - i >= -1 && c - i <= 3; };
  for (int i = 0; i < N; ++i) {
    at(i, i) = j.b[i];
    if (i + 1 < N) {
      at(i, i + 1) = j.a[i + 1];
      at(i + 1, i) = j.a[i + 1];
    }
  }
  std::vector<T> cs(N - 1), sn(N - 1);
  for (int k = 0; k + 1 < N; ++k) {
    T x = at(k, k), y = at(k + 1, k);
    T r = real_sqrt(x * x + y * y);
    if (r == T(0)) fail(Status::numeric, "QR breakdown: zero diagonal in R");
    T c = x / r, s = y / r;
    cs[k] = c;
    sn[k] = s;
    for (int col = k; col <= std::min(N - 1, k + 2); ++col) {
      T top = inside(k, col) ? at(k, col) : T(0);
      T bot = inside(k + 1, col) ? at(k + 1, col) : T(0);
      if (inside(k, col)) at(k, col) = c * top + s * bot;
      if (inside(k + 1, col)) at(k + 1, col) = -s * top + c * bot;
    }
    at(k + 1, k) = T(0);
  }
  for (int k = 0; k + 1 < N; ++k) {
    T c = cs[k], s = sn[k];
    for (int row = std::max(0, k - 2); row <= k + 1; ++row) {
      T left = inside(row, k) ? at(row, k) : T(0);
      T right = inside(row, k + 1) ? at(row, k + 1) : T(0);
      if (inside(row, k)) at(row, k) = c * left + s * right;
      if (inside(row, k + 1)) at(row, k + 1) = -s * left + c * right;
    }
  }
  JacobiCoefficients<T> h;
  h.flavor = JacobiCoefficients<T>::Flavor::symplectic_transformed;
  h.a.assign(M, T(0));
  h.b.assign(M, T(0));
  for (int k = 0; k < M; ++k) {
    h.b[k] = at(k, k);
    if (k > 0) h.a[k] = at(k, k - 1);
  }
  return h;
}

ClosedFormQR qr_closed_form(int M, const EnsembleParams& prm) {
  require_half(prm, "qr_closed_form");
  check_degree(M, prm);
  std::vector<mpq_class> a2(M + 1, 0);
  for (int m = 1; m <= M; ++m) a2[m] = krawtchouk_beta(m, prm);
  ClosedFormQR cf;
  cf.r2.assign(M, 0);
  cf.ahat2.assign(M, 0);
  mpq_class prod = 1;  // prod_{j<=m} a_{2j-1}^2 / r_{2j-1}^2
  for (int k = 0; k < M; ++k) {
    if (k % 2 == 0) {
      cf.r2[k] = a2[k + 1];
    } else {
      cf.r2[k] = a2[k + 1] + a2[k] * prod;
      prod *= a2[k] / cf.r2[k];
    }
    cf.r2[k].canonicalize();
  }
  for (int k = 1; k < M; ++k) {
    if (k % 2 == 0) cf.ahat2[k] = a2[k] * a2[k + 1] / cf.r2[k - 1];
    else cf.ahat2[k] = cf.r2[k];
    cf.ahat2[k].canonicalize();
  }
  return cf;
}

mpq_class r2_odd_product(int m, const EnsembleParams& prm) {
  require_half(prm, "r2_odd_product");
  check_degree(2 * m + 2, prm);
  auto a2 = [&](int i) -> mpq_class { return krawtchouk_beta(i, prm); };
  mpq_class num = 1;
  for (int j = 1; j <= m + 1; ++j) num *= a2(2 * j - 1);
  mpq_class den = 0;
  for (int l = -1; l <= m - 1; ++l) {
    mpq_class t = 1;
    for (int k = 0; k <= l; ++k) t *= a2(2 * m - 2 * k);
    for (int j = 1; j <= m - l - 1; ++j) t *= a2(2 * j - 1);
    den += t;
  }
  mpq_class r = a2(2 * m + 2) + num / den;
  r.canonicalize();
  return r;
}

mpq_class continued_fraction_r(int m, const EnsembleParams& prm) {
  require_half(prm, "continued_fraction_r");
  check_degree(2 * m + 2, prm);
  auto a2 = [&](int i) -> mpq_class { return krawtchouk_beta(i, prm); };
  auto A = [&](int k) -> mpq_class { return -a2(2 * m + 1 - 2 * (k - 1)) / a2(2 * m + 2 - 2 * (k - 1)); };
  auto B = [&](int k) -> mpq_class { return 1 + a2(2 * m + 1 - 2 * k) / a2(2 * m + 2 - 2 * k); };
  mpq_class Rm1 = 1, Sm1 = 0, R0 = B(0), S0 = 1;
  for (int k = 1; k <= m; ++k) {
    mpq_class Rk = B(k) * R0 + A(k) * Rm1;
    mpq_class Sk = B(k) * S0 + A(k) * Sm1;
    Rm1 = R0;
    Sm1 = S0;
    R0 = Rk;
    S0 = Sk;
  }
  if (S0 == 0) fail(Status::numeric, "continued fraction breakdown");
  mpq_class r = R0 / S0;
  r.canonicalize();
  return r;
}

OrthonormalPoly orthonormalize(const ExactPoly& G, const mpq_class& Lambda) {
  if (Lambda <= 0) fail(Status::domain, "norm must be positive");
  return OrthonormalPoly{G, Lambda};
}

long double OrthonormalPoly::eval(long double u) const {
  return G.eval<long double>(u) / std::sqrt(to_real<long double>(Lambda));
}

long double OrthonormalPoly::leading() const { return 1.0L / std::sqrt(to_real<long double>(Lambda)); }

long double hyp2f1_terminating(int m, long double b, int c, long double z) {
  if (c < 0 && m > -c) fail(Status::domain, "2F1 denominator vanishes");
  long double term = 1, sum = 1;
  for (int j = 0; j < m; ++j) {
    term *= (static_cast<long double>(-m + j) * (b + j)) / ((static_cast<long double>(c) + j) * (j + 1)) * z;
    sum += term;
  }
  return sum;
}

ExactPoly hyp2f1_poly_in_u(int m, const EnsembleParams& prm, const mpq_class& z) {
  if (m > prm.K) fail(Status::domain, "2F1 denominator vanishes");
  ExactPoly term = ExactPoly::constant(1), sum = term;
  for (int j = 0; j < m; ++j) {
    // (b + j) with b = -K/2 - n u
    ExactPoly bj(std::vector<mpq_class>{mpq_class(-prm.K / 2 + j), mpq_class(-prm.n)});
    mpq_class f = mpq_class(-m + j) * z / (mpq_class(-prm.K + j) * (j + 1));
    f.canonicalize();
    term = term * bj * f;
    sum = sum + term;
  }
  return sum;
}

ExactPoly symplectic_hypergeometric_poly(int m, const EnsembleParams& prm) {
  require_half(prm, "symplectic_hypergeometric_poly");
  if (m % 2) fail(Status::domain, "hypergeometric form is for even m");
  check_degree(m + 2, prm);
  mpq_class z = 1 / prm.p;
  ExactPoly F2 = hyp2f1_poly_in_u(m + 2, prm, z), F0 = hyp2f1_poly_in_u(m, prm, z);
  if (F0.coeff(0) == 0) fail(Status::degenerate, "2F1 ratio denominator vanishes");
  mpq_class ratio = F2.coeff(0) / F0.coeff(0);
  bool exact = false;
  ExactPoly br = (F2 - F0 * ratio).divide_x2(&exact);
  if (!exact) fail(Status::consistency, "hypergeometric bracket does not vanish to second order at u = 0");
  mpz_class nn;
  mpz_ui_pow_ui(nn.get_mpz_t(), prm.n, m + 2);
  mpq_class pre = qpow(prm.p, m + 2) * mpq_class(factorial(m + 2) * binom(prm.K, m + 2)) / mpq_class(nn);
  if (m % 2) pre = -pre;
  pre.canonicalize();
  return br * pre;
}

long double hypergeometric_eval(int m, long double u, const EnsembleParams& prm) {
  require_half(prm, "hypergeometric_eval");
  if (m % 2) fail(Status::domain, "hypergeometric form is for even m");
  check_degree(m + 2, prm);
  if (u == 0) return to_real<long double>(symplectic_hypergeometric_poly(m, prm).coeff(0));
  const long double z = 2.0L;
  const long double b = -prm.K / 2.0L - prm.n * u;
  long double ratio = hyp2f1_terminating(m + 2, -prm.K / 2.0L, -prm.K, z) / hyp2f1_terminating(m, -prm.K / 2.0L, -prm.K, z);
  long double br = hyp2f1_terminating(m + 2, b, -prm.K, z) - ratio * hyp2f1_terminating(m, b, -prm.K, z);
  // (m+2)! binom(K, m+2) = K! / (K-m-2)!
  long double logpre = (m + 2) * std::log(0.5L) + std::lgamma(static_cast<long double>(prm.K) + 1) -
                       std::lgamma(static_cast<long double>(prm.K - m - 2) + 1) - (m + 2) * std::log(static_cast<long double>(prm.n));
  return std::exp(logpre) * br / (u * u);
}

mpq_class krawtchouk_value(int m, int i, const EnsembleParams& prm) {
  check_degree(m, prm);
  mpq_class u(i, prm.n);
  u.canonicalize();
  mpq_class km1 = 0, k0 = 1;
  for (int j = 0; j < m; ++j) {
    mpq_class k1 = (u - krawtchouk_alpha(j, prm)) * k0 - krawtchouk_beta(j, prm) * km1;
    km1 = k0;
    k0 = k1;
  }
  return k0;
}

mpq_class symplectic_value(int m, int i, const EnsembleParams& prm) {
  require_half(prm, "symplectic_value");
  if (m % 2) fail(Status::domain, "symplectic_value is for even m");
  if (i == 0) fail(Status::domain, "use the polynomial table at u = 0");
  mpq_class S = -krawtchouk_value(m + 2, 0, prm) / krawtchouk_value(m, 0, prm);
  mpq_class u(i, prm.n);
  u.canonicalize();
  mpq_class v = (krawtchouk_value(m + 2, i, prm) + S * krawtchouk_value(m, i, prm)) / (u * u);
  v.canonicalize();
  return v;
}

template <class T>
JacobiCoefficients<T> symplectic_jacobi(int M, const EnsembleParams& prm) {
  JacobiCoefficients<T> j;
  j.flavor = JacobiCoefficients<T>::Flavor::symplectic_transformed;
  if (prm.half()) {
    check_degree(M + 1, prm);
    auto cf = qr_closed_form(M + 1, prm);
    j.a.assign(M + 1, T(0));
    j.b.assign(M + 1, T(0));
    for (int m = 1; m <= M; ++m) j.a[m] = real_sqrt(to_real<T>(cf.ahat2[m]));
    return j;
  }
  auto qr = qr_step(krawtchouk_jacobi<T>(M + 1, prm));
  j.a.assign(M + 1, T(0));
  j.b.assign(M + 1, T(0));
  for (int m = 0; m <= M; ++m) {
    j.b[m] = qr.hat.b[m];
    if (m > 0) j.a[m] = real_abs(qr.hat.a[m]);
  }
  return j;
}

template JacobiCoefficients<double> krawtchouk_jacobi<double>(int, const EnsembleParams&);
template JacobiCoefficients<long double> krawtchouk_jacobi<long double>(int, const EnsembleParams&);
template QRResult<double> qr_step<double>(const JacobiCoefficients<double>&);
template QRResult<long double> qr_step<long double>(const JacobiCoefficients<long double>&);
template JacobiCoefficients<double> qr_step_rotations<double>(const JacobiCoefficients<double>&);
template JacobiCoefficients<long double> qr_step_rotations<long double>(const JacobiCoefficients<long double>&);
template JacobiCoefficients<double> symplectic_jacobi<double>(int, const EnsembleParams&);
template JacobiCoefficients<long double> symplectic_jacobi<long double>(int, const EnsembleParams&);

}  // namespace symdpp
