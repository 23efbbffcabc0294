// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

namespace symdpp {

// mpq -> floating conversions that keep long double precision.
template <class T>
T to_real(const mpq_class& q);
template <>
inline double to_real<double>(const mpq_class& q) { return q.get_d(); }
template <>
inline long double to_real<long double>(const mpq_class& q) {
  mpf_class f(q, 192);
  double hi = f.get_d();
  mpf_class rest(f - hi, 192);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

// Coefficient conversion used by Poly::eval.
template <class U, class T>
U convert_coeff(const T& v) {
  if constexpr (std::is_same_v<T, mpq_class> && std::is_floating_point_v<U>) return to_real<U>(v);
  else return U(v);
}

// Dense univariate polynomial, coefficient c[i] multiplies x^i.
template <class T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(int d) {
    std::vector<T> v(d + 1, T(0));
    v[d] = T(1);
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  T coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : T(0); }
  bool is_zero() const { return c.empty(); }

  void trim() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }

  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + convert_coeff<U>(c[i]);
    return acc;
  }

  Poly mul_x() const {
    if (c.empty()) return *this;
    std::vector<T> v(c.size() + 1, T(0));
    std::copy(c.begin(), c.end(), v.begin() + 1);
    return Poly(std::move(v));
  }

  Poly operator+(const Poly& o) const {
    std::vector<T> v(std::max(c.size(), o.c.size()), T(0));
    for (size_t i = 0; i < c.size(); ++i) v[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) v[i] += o.c[i];
    return Poly(std::move(v));
  }
  Poly operator-(const Poly& o) const { return *this + o * T(-1); }
  Poly operator*(const T& s) const {
    std::vector<T> v(c);
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
  }
  Poly operator*(const Poly& o) const {
    if (c.empty() || o.c.empty()) return Poly();
    std::vector<T> v(c.size() + o.c.size() - 1, T(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) v[i + j] += c[i] * o.c[j];
    return Poly(std::move(v));
  }
  bool operator==(const Poly& o) const { return c == o.c; }

  // Quotient by x^2; *exact is false when the constant or linear coefficient is nonzero.
  Poly divide_x2(bool* exact) const {
    *exact = coeff(0) == T(0) && coeff(1) == T(0);
    if (c.size() <= 2) return Poly();
    return Poly(std::vector<T>(c.begin() + 2, c.end()));
  }

  Poly derivative() const {
    if (c.size() <= 1) return Poly();
    std::vector<T> v(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * T(static_cast<long>(i));
    return Poly(std::move(v));
  }
};

using ExactPoly = Poly<mpq_class>;

std::string poly_str(const ExactPoly& p, const char* var = "x");

// ln|q| without overflow; -inf for q = 0.
inline long double log_abs(const mpq_class& q) {
  if (q == 0) return -INFINITY;
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(std::fabs(static_cast<long double>(mn) / md)) + static_cast<long double>(en - ed) * std::log(2.0L);
}

inline double real_sqrt(double x) { return std::sqrt(x); }
inline long double real_sqrt(long double x) { return std::sqrt(x); }
inline double real_abs(double x) { return std::fabs(x); }
inline long double real_abs(long double x) { return std::fabs(x); }
inline double real_to_double(double x) { return x; }
inline double real_to_double(long double x) { return static_cast<double>(x); }

}  // namespace symdpp
