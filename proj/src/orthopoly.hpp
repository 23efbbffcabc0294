// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <vector>

#include "params.hpp"
#include "poly.hpp"

namespace symdpp {

// Monic Krawtchouk recurrence in the lattice variable u = i/n:
//   u K_m = K_{m+1} + alpha_m K_m + beta_m K_{m-1}.
mpq_class krawtchouk_alpha(int m, const EnsembleParams& prm);
mpq_class krawtchouk_beta(int m, const EnsembleParams& prm);

// W(i/n) = binom(K, K/2+i) p^(K/2+i) (1-p)^(K/2-i), i = -K/2..K/2.
mpq_class weight_exact(int i, const EnsembleParams& prm);
long double log_weight(int i, const EnsembleParams& prm);
// Second moment of W in the u variable.
mpq_class omega2(const EnsembleParams& prm);

// Polynomials K_0..K_max_m.
std::vector<ExactPoly> monic_krawtchouk_table(int max_m, const EnsembleParams& prm);
ExactPoly monic_krawtchouk(int m, const EnsembleParams& prm);

// sum_i K_l(i/n) K_m(i/n) W(i/n)
mpq_class krawtchouk_orthogonality_check(int l, int m, const EnsembleParams& prm);
// n^{-2m} kappa_m^{-2} = (m!)^2 binom(K,m) (p(1-p))^m / n^{2m}
mpq_class krawtchouk_norm(int m, const EnsembleParams& prm);

// Christoffel transform by u^2: u^2 G_m = K_{m+2} + c1 K_{m+1} + c0 K_m.
struct ChristoffelResult {
  ExactPoly G;
  mpq_class c0;
  mpq_class c1;
};
ChristoffelResult christoffel_transform(int m, const std::vector<ExactPoly>& kt);
ChristoffelResult christoffel_transform(int m, const EnsembleParams& prm);
// p = 1/2 forms: even m uses values at 0, odd m uses derivatives at 0.
ExactPoly christoffel_explicit(int m, const std::vector<ExactPoly>& kt);
std::vector<ExactPoly> symplectic_table(int max_m, const EnsembleParams& prm);

// K_{m+2}(0)/K_m(0) for even m at p = 1/2; checked against -(K-m)(m+1)/(4n^2).
mpq_class constant_term_ratio(int m, const EnsembleParams& prm);

struct NormSequence {
  std::vector<mpq_class> Lambda;  // Lambda_0..Lambda_M
  std::vector<mpq_class> L;       // L_0..L_{M+2}
  std::vector<mpq_class> S;       // S_0..S_M
  std::vector<mpq_class> alpha;   // alpha_0..alpha_M
  std::vector<mpq_class> beta;    // beta_0 = 0, beta_1..beta_M
};

// Lambda_m and the monic recurrence of G from rec1/rec2 (p = 1/2, alpha_m = 0).
NormSequence norm_sequence(const EnsembleParams& prm, int max_m);
// sum_i G_m(i/n)^2 (i/n)^2 W(i/n)
mpq_class lambda_direct(const ExactPoly& G, const EnsembleParams& prm);
mpq_class weighted_inner(const ExactPoly& a, const ExactPoly& b, int upower, const EnsembleParams& prm);

struct TtrExact {
  std::vector<mpq_class> alpha;  // 0..M
  std::vector<mpq_class> beta;   // beta[0] = 0, 1..M
};
// Coefficient matching in u G_m = G_{m+1} + alpha_m G_m + beta_m G_{m-1}.
TtrExact ttr_from_polynomials(int max_m, const EnsembleParams& prm);

template <class T>
struct JacobiCoefficients {
  enum class Flavor { krawtchouk_orthonormal, symplectic_transformed };
  std::vector<T> a;  // a[0] unused, a[1..M]
  std::vector<T> b;  // b[0..M]
  Flavor flavor = Flavor::krawtchouk_orthonormal;
  int size() const { return static_cast<int>(b.size()); }
};

template <class T>
struct QRState {
  std::vector<T> r;      // r_0..r_{M-1}
  std::vector<T> s;      // s_1..s_M (s[0] unused)
  std::vector<T> astar;  // a*_1..a*_M
  std::vector<T> bstar;  // b*_0..b*_{M-1}
};

template <class T>
struct QRResult {
  JacobiCoefficients<T> hat;  // a-hat_1..a-hat_{M-1}, b-hat_0..b-hat_{M-1}
  QRState<T> state;
};

// Orthonormal Krawtchouk Jacobi matrix, a_m = -sqrt(beta_m), b_m = alpha_m, m <= M.
template <class T>
JacobiCoefficients<T> krawtchouk_jacobi(int M, const EnsembleParams& prm);

// One unshifted QR step J = QR -> RQ via the scalar Givens recursions.
template <class T>
QRResult<T> qr_step(const JacobiCoefficients<T>& j);

// Same step by explicit rotations on a banded matrix.
template <class T>
JacobiCoefficients<T> qr_step_rotations(const JacobiCoefficients<T>& j);

// p = 1/2 closed forms in squared Krawtchouk coefficients a_m^2 = beta_m.
struct ClosedFormQR {
  std::vector<mpq_class> r2;     // r_0^2..r_{M-1}^2
  std::vector<mpq_class> ahat2;  // ahat_1^2..ahat_{M-1}^2 (index 0 unused)
};
ClosedFormQR qr_closed_form(int M, const EnsembleParams& prm);
// r_{2m+1}^2 from the product-over-sum form.
mpq_class r2_odd_product(int m, const EnsembleParams& prm);
// r_{2m+1}^2 / a_{2m+2}^2 from the R/S three-term recurrences.
mpq_class continued_fraction_r(int m, const EnsembleParams& prm);

// g_m = G_m / sqrt(Lambda_m), orthonormal for u^2 W.
struct OrthonormalPoly {
  ExactPoly G;
  mpq_class Lambda;
  long double eval(long double u) const;
  long double leading() const;
};
OrthonormalPoly orthonormalize(const ExactPoly& G, const mpq_class& Lambda);

// Terminating 2F1(-m, b; c; z) with c a negative integer and m <= -c.
long double hyp2f1_terminating(int m, long double b, int c, long double z);
ExactPoly hyp2f1_poly_in_u(int m, const EnsembleParams& prm, const mpq_class& z);
// G_m(u) for even m at p = 1/2 via the hypergeometric representation.
ExactPoly symplectic_hypergeometric_poly(int m, const EnsembleParams& prm);
long double hypergeometric_eval(int m, long double u, const EnsembleParams& prm);

// Pointwise exact recurrence values at u = i/n.
mpq_class krawtchouk_value(int m, int i, const EnsembleParams& prm);
// G_m(i/n) for even m at p = 1/2 (i != 0).
mpq_class symplectic_value(int m, int i, const EnsembleParams& prm);

// sqrt(beta_m) and alpha_m of the monic G recurrence for m <= M, floating.
template <class T>
JacobiCoefficients<T> symplectic_jacobi(int M, const EnsembleParams& prm);

// Closed forms of K_m and G_m (m <= 6, p = 1/2) as printed in the reference
// table, instantiated at given K and n.
ExactPoly table1_printed(char family, int m, int K, int n);

struct Table1Row {
  char family = 'K';  // 'K' or 'G'
  int m = 0;
  ExactPoly printed;
  ExactPoly computed;
  bool match() const { return printed == computed; }
};

// Compares the recurrence-built K_m and Christoffel-built G_m with the printed forms.
std::vector<Table1Row> check_table1(int K, int n);

}  // namespace symdpp
