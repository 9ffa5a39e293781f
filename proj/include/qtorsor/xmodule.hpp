#pragma once

#include <string>

#include "qtorsor/pairing.hpp"

namespace qtorsor {

/// a_0^r theta_{+0}^* b_+^s (b_+^*)^t.
struct XMonomial {
  int r = 0;
  int s = 0;
  int t = 0;
  auto operator<=>(const XMonomial&) const = default;
};

class XElement {
 public:
  XElement() = default;
  explicit XElement(Terms<XMonomial> terms) : terms_(std::move(terms)) {}
  static XElement monomial(XMonomial m, const ExactScalar& c = ExactScalar(1));
  /// a_0^r theta^* p for p in Pol_q(+), normalized.
  static XElement from_parts(int r, const PolElement& p);

  const Terms<XMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const XMonomial& m, const ExactScalar& c) { add_term(terms_, m, c); }

  XElement& operator+=(const XElement& o);
  XElement& operator-=(const XElement& o);
  XElement& operator*=(const ExactScalar& c);
  friend XElement operator+(XElement a, const XElement& b) { return a += b; }
  friend XElement operator-(XElement a, const XElement& b) { return a -= b; }
  friend XElement operator*(XElement a, const ExactScalar& c) { return a *= c; }
  friend XElement operator*(const ExactScalar& c, XElement a) { return a *= c; }
  /// Right Pol_q(+)-module structure.
  friend XElement operator*(const XElement& x, const PolElement& p);
  /// Left multiplication by a_0^k.
  XElement left_a0(int k) const;
  /// Left multiplication by b_0 or b_0^*.
  XElement left_b0(bool star) const;

  friend bool operator==(const XElement& a, const XElement& b) { return a.terms_ == b.terms_; }
  std::string str() const;

 private:
  Terms<XMonomial> terms_;
};

/// Word for x_normalize: a_0 powers, theta^* exactly once, Pol_q(+) generators after it.
struct XWord {
  int a0_power = 0;
  std::vector<PolGen> left_pol0;  // b_0 / b_0^* factors between a_0^r and theta^* (B or Bstar only)
  std::vector<PolGen> right_pol;  // Pol_q(+) generators after theta^*
};
XElement x_normalize(const XWord& w);

/// <xi, u> through Delta^0 then Delta^+: legs paired with a_0^r, theta_{+0}^*, b^s (b^*)^t.
ExactScalar pair_x(const XElement& xi, const UqElement& u);

/// Symbolic corepresentation entry: coefficient body times sqrt(sqrt_num / sqrt_den).
struct GEntry {
  XElement body;
  int sqrt_num_index = 0;  // (q^2;q^2)_{sqrt_num_index}
  int sqrt_den_index = 0;  // (q^2;q^2)_{sqrt_den_index}
  /// sqrt((q^2;q^2)_num / (q^2;q^2)_den) at q.
  template <class T>
  T sqrt_factor(const T& q) const;
};

GEntry g_entry(int t, int s);

template <class T>
T GEntry::sqrt_factor(const T& q) const {
  using std::sqrt;
  T q2 = q * q;
  auto poch = [&q2](int n) {
    T v(1), qk = q2;
    for (int k = 0; k < n; ++k) {
      v *= T(1) - qk;
      qk *= q2;
    }
    return v;
  };
  return sqrt(poch(sqrt_num_index) / poch(sqrt_den_index));
}

}  // namespace qtorsor
