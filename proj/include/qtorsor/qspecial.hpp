#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qtorsor/exact_scalar.hpp"

namespace qtorsor {

/// Raised when an infinite q-product is requested outside |q| < 1.
struct ConvergenceError : std::domain_error {
  using std::domain_error::domain_error;
};

constexpr double kDefaultPochTolerance = 1e-15;

namespace detail {
template <class T>
bool value_is_zero(const T& v) {
  if constexpr (std::is_same_v<T, ExactScalar>) {
    return v.is_zero();
  } else if constexpr (std::is_same_v<T, mpq_class>) {
    return sgn(v) == 0;
  } else {
    return v == T(0);
  }
}
}  // namespace detail

/// (a;q)_n = prod_{k<n} (1 - q^k a).
template <class T>
T qpoch(const T& a, const T& q, int n) {
  T result(1);
  T qk(1);
  for (int k = 0; k < n; ++k) {
    result *= T(1) - qk * a;
    qk *= q;
  }
  return result;
}

/// (a;q)_inf, multiplying factors until |q^k a| < tol.
template <class T>
T qpoch_inf(const T& a, const T& q, double tol = kDefaultPochTolerance) {
  using std::abs;
  if (!(abs(q) < T(1))) throw ConvergenceError("qpoch: infinite product needs |q| < 1");
  T result(1);
  T qk(1);
  for (int k = 0; k < 100000; ++k) {
    T term = qk * a;
    result *= T(1) - term;
    if (abs(term) < T(tol)) return result;
    qk *= q;
  }
  throw ConvergenceError("qpoch: infinite product did not reach tolerance");
}

inline std::complex<double> qpoch_inf(std::complex<double> a, double q,
                                      double tol = kDefaultPochTolerance) {
  if (!(std::abs(q) < 1)) throw ConvergenceError("qpoch: infinite product needs |q| < 1");
  std::complex<double> result(1);
  double qk = 1;
  for (int k = 0; k < 100000; ++k) {
    std::complex<double> term = qk * a;
    result *= 1.0 - term;
    if (std::abs(term) < tol) return result;
    qk *= q;
  }
  throw ConvergenceError("qpoch: infinite product did not reach tolerance");
}

/// Partial sum of E_q(z) = sum_k q^{k(k-1)/2} z^k / (q;q)_k over k < terms.
template <class T>
T eq_exp(const T& z, const T& q, int terms) {
  T sum(0);
  T term(1);  // q^{k(k-1)/2} z^k / (q;q)_k
  T qk(1);    // q^k
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term *= qk * z / (T(1) - qk * q);
    qk *= q;
  }
  return sum;
}

/// Gaussian binomial [n m]_q = (q;q)_n / ((q;q)_{n-m} (q;q)_m).
template <class T>
T qbinom(int n, int m, const T& q) {
  if (m < 0 || n < 0 || m > n) throw std::domain_error("qbinom: requires 0 <= m <= n");
  return qpoch(q, q, n) / (qpoch(q, q, n - m) * qpoch(q, q, m));
}

/// The exact scalar q (= s^2).
inline ExactScalar q_exact() { return ExactScalar::s_pow(2); }

/// lambda = (q - q^{-1})^{-1}.
ExactScalar lambda_exact();

/// G_n(q) = (q^2;q^2)_n / (q^{n(n-1)/2} (1-q^2)^n).
ExactScalar gauss_g(int n);

/// (q^2;q^2)_n as an exact scalar.
ExactScalar qsq_poch(int n);

/// Wall polynomial p_n(x; a, 0 | q) = 2phi1(q^{-n}, 0; q a | q, q x) as a finite sum.
template <class T>
T wall(int n, const T& x, const T& a, const T& q) {
  if (n < 0) throw std::domain_error("wall: degree must be nonnegative");
  T sum(1);
  T term(1);
  T qinv = T(1) / q;
  T qmn(1);  // q^{-n}
  for (int k = 0; k < n; ++k) qmn *= qinv;
  T qk(1);  // q^k
  for (int k = 0; k < n; ++k) {
    T denom = (T(1) - q * a * qk) * (T(1) - q * qk);
    if (detail::value_is_zero(denom)) throw std::domain_error("wall: (qa;q)_k vanishes");
    term *= (T(1) - qmn * qk) * q * x / denom;
    sum += term;
    qk *= q;
  }
  return sum;
}

}  // namespace qtorsor
