#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qtorsor/gauss_rational.hpp"

namespace qtorsor {

/// Dense polynomial in the formal variable s with Gaussian-rational coefficients.
/// coeffs()[k] is the coefficient of s^k; the vector carries no trailing zeros.
class SPoly {
 public:
  SPoly() = default;
  explicit SPoly(GaussRational c);
  explicit SPoly(std::vector<GaussRational> coeffs);

  static SPoly monomial(int degree, GaussRational c = GaussRational(1));

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<GaussRational>& coeffs() const { return c_; }
  const GaussRational& lead() const { return c_.back(); }
  /// Exponent of the lowest nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;

  SPoly& operator+=(const SPoly& o);
  SPoly& operator-=(const SPoly& o);
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  SPoly operator-() const;
  SPoly scaled(const GaussRational& c) const;
  SPoly shifted_down(int k) const;  // divide by s^k, k <= valuation()
  SPoly conj() const;

  /// Euclidean division; returns {quotient, remainder}.
  static std::pair<SPoly, SPoly> divmod(const SPoly& a, const SPoly& b);
  /// Exact division, b must divide a.
  static SPoly exact_div(const SPoly& a, const SPoly& b);
  /// Monic gcd.
  static SPoly gcd(SPoly a, SPoly b);

  friend bool operator==(const SPoly& a, const SPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const SPoly& a, const SPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void trim();
  std::vector<GaussRational> c_;
};

/// Real/imaginary pair for evaluation at arbitrary real scalar types.
template <class T>
struct Cplx {
  T re{0};
  T im{0};
};

/// Element of Q(i)(s): s^val * num(s) / den(s) with num(0) != 0, den(0) != 0,
/// den monic and gcd(num, den) = 1.  Semantically s = q^(1/2).
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v);  // NOLINT(google-explicit-constructor)
  ExactScalar(GaussRational c);  // NOLINT(google-explicit-constructor)
  ExactScalar(SPoly num, SPoly den, int val = 0);

  static ExactScalar s_pow(int e);
  static ExactScalar q_pow(int e) { return s_pow(2 * e); }
  static ExactScalar imag_unit();

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return val_ == 0 && num_.is_one() && den_.is_one(); }
  /// Laurent polynomial in s (no nontrivial denominator).
  bool is_laurent() const { return den_.is_one(); }
  const SPoly& num() const { return num_; }
  const SPoly& den() const { return den_; }
  int val() const { return val_; }

  ExactScalar conj() const;
  ExactScalar inverse() const;
  ExactScalar pow(int e) const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.val_ == b.val_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  template <class T>
  Cplx<T> eval(const T& s) const;
  std::complex<double> eval_s(double s) const;

  /// Parseable text such as "s^2*(1)/(s^4-1)".
  std::string str() const;

 private:
  void normalize();
  SPoly num_;
  SPoly den_{GaussRational(1)};
  int val_ = 0;
};

/// Evaluation point 0 < q < 1; q kept both as an exact rational (parsed from
/// its decimal text) and as a double.
class QPoint {
 public:
  explicit QPoint(const std::string& decimal);
  explicit QPoint(double q);

  double q() const { return q_; }
  double s() const { return s_; }
  const mpq_class& q_exact() const { return q_exact_; }
  const std::string& text() const { return text_; }

  std::complex<double> eval(const ExactScalar& x) const { return x.eval_s(s_); }

 private:
  mpq_class q_exact_;
  double q_ = 0;
  double s_ = 0;
  std::string text_;
};

template <class T>
T gauss_real_to(const mpq_class& v) {
  return T(v.get_num().get_str()) / T(v.get_den().get_str());
}

template <>
inline double gauss_real_to<double>(const mpq_class& v) {
  return v.get_d();
}

template <class T>
Cplx<T> ExactScalar::eval(const T& s) const {
  auto horner = [&s](const SPoly& p) {
    Cplx<T> acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      T re = acc.re * s + gauss_real_to<T>(it->re());
      T im = acc.im * s + gauss_real_to<T>(it->im());
      acc.re = re;
      acc.im = im;
    }
    return acc;
  };
  Cplx<T> n = horner(num_);
  Cplx<T> d = horner(den_);
  T dn = d.re * d.re + d.im * d.im;
  Cplx<T> out{(n.re * d.re + n.im * d.im) / dn, (n.im * d.re - n.re * d.im) / dn};
  T sv = 1;
  int e = val_ < 0 ? -val_ : val_;
  for (int k = 0; k < e; ++k) sv *= s;
  if (val_ < 0) sv = T(1) / sv;
  out.re *= sv;
  out.im *= sv;
  return out;
}

}  // namespace qtorsor
