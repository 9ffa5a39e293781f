#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <stdexcept>

#include "qtorsor/uq.hpp"

namespace qtorsor {

using mp50 = boost::multiprecision::cpp_bin_float_50;

template <class T>
using RealMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

/// Complex matrix split into real and imaginary parts (works for any real scalar type).
template <class T>
struct SplitMatrix {
  RealMatrix<T> re;
  RealMatrix<T> im;
};

/// Theta(u) on e_0..e_{dim-1}: Theta(K) e_n = q^{-n} e_n, Theta(E) = -q^{-1/2} lambda X Theta(K),
/// Theta(F) = Theta(E)^dagger.  Every PBW monomial is a weighted shift, so entries are exact.
template <class T>
SplitMatrix<T> theta_matrix(const UqElement& u, int dim, const T& q) {
  using std::sqrt;
  using std::pow;
  if (u.tag() != SignPair{Sign::Zero, Sign::Plus}) throw std::invalid_argument("theta_matrix: expects U_q(0,+)");
  if (dim < 1) throw std::invalid_argument("theta_matrix: dim must be positive");
  SplitMatrix<T> out{RealMatrix<T>::Zero(dim, dim), RealMatrix<T>::Zero(dim, dim)};
  const T s = sqrt(q);
  const T lam = T(1) / (q - T(1) / q);
  const T pref = -lam / s;
  auto qpow = [&q](int e) {
    T v(1);
    for (int k = 0; k < (e < 0 ? -e : e); ++k) v *= q;
    return e < 0 ? T(1) / v : v;
  };
  for (const auto& [mono, c] : u.terms()) {
    Cplx<T> cv = c.template eval<T>(s);
    for (int j = 0; j < dim; ++j) {
      T w(1);
      int k = j;
      for (int f = 0; f < mono.l; ++f) {
        ++k;
        w *= pref * sqrt(T(1) - qpow(2 * k));
      }
      for (int e = 0; e < mono.n && w != T(0); ++e) {
        w *= pref * sqrt(T(1) - qpow(2 * k));
        --k;
      }
      if (w == T(0) || k < 0 || k >= dim) continue;
      w *= qpow(-mono.m * k);
      out.re(k, j) += cv.re * w;
      out.im(k, j) += cv.im * w;
    }
  }
  return out;
}

inline Eigen::MatrixXcd theta_matrix_d(const UqElement& u, int dim, double q) {
  SplitMatrix<double> m = theta_matrix<double>(u, dim, q);
  Eigen::MatrixXcd out(dim, dim);
  out.real() = m.re;
  out.imag() = m.im;
  return out;
}

}  // namespace qtorsor
