#pragma once

#include <string>
#include <utility>

#include "qtorsor/linear.hpp"

namespace qtorsor {

/// K^m E^n F^l in PBW order.
struct UqMonomial {
  int m = 0;
  int n = 0;
  int l = 0;
  auto operator<=>(const UqMonomial&) const = default;
  int degree() const { return n + l; }
};

enum class UqGen { K, Kinv, E, F };

/// Element of U_q(mu, nu).
class UqElement {
 public:
  explicit UqElement(SignPair tag = {}) : tag_(tag) {}
  UqElement(SignPair tag, Terms<UqMonomial> terms) : tag_(tag), terms_(std::move(terms)) {}

  static UqElement one(SignPair tag) { return monomial(tag, {}); }
  static UqElement scalar(SignPair tag, const ExactScalar& c);
  static UqElement monomial(SignPair tag, UqMonomial mono, const ExactScalar& c = ExactScalar(1));
  static UqElement generator(SignPair tag, UqGen g);
  static UqElement K(SignPair tag, int power = 1) { return monomial(tag, {power, 0, 0}); }
  static UqElement E(SignPair tag) { return generator(tag, UqGen::E); }
  static UqElement F(SignPair tag) { return generator(tag, UqGen::F); }

  SignPair tag() const { return tag_; }
  const Terms<UqMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  ExactScalar coefficient(const UqMonomial& mono) const;

  void add(const UqMonomial& mono, const ExactScalar& c) { add_term(terms_, mono, c); }

  UqElement& operator+=(const UqElement& o);
  UqElement& operator-=(const UqElement& o);
  UqElement& operator*=(const ExactScalar& c);
  friend UqElement operator+(UqElement a, const UqElement& b) { return a += b; }
  friend UqElement operator-(UqElement a, const UqElement& b) { return a -= b; }
  friend UqElement operator*(UqElement a, const ExactScalar& c) { return a *= c; }
  friend UqElement operator*(const ExactScalar& c, UqElement a) { return a *= c; }
  friend UqElement operator*(const UqElement& a, const UqElement& b);
  UqElement operator-() const { return *this * ExactScalar(-1); }
  UqElement pow(int e) const;

  friend bool operator==(const UqElement& a, const UqElement& b) {
    return a.tag_ == b.tag_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  SignPair tag_;
  Terms<UqMonomial> terms_;
};

using UqTensor = Tensor<UqMonomial, SignPair>;

/// Normal-ordered product of two monomials in U_q(tag).
Terms<UqMonomial> uq_monomial_product(SignPair tag, const UqMonomial& a, const UqMonomial& b);

UqElement uq_multiply(const UqElement& x, const UqElement& y);
UqElement uq_star(const UqElement& x);
/// Anti-homomorphism U_q(mu, nu) -> U_q(nu, mu).
UqElement uq_antipode(const UqElement& x);

struct CounitValue {
  ExactScalar value;
  bool off_diagonal = false;
};
CounitValue uq_counit(const UqElement& x);

/// Delta^upsilon : U_q(mu, nu) -> U_q(mu, upsilon) (x) U_q(upsilon, nu).
UqTensor uq_comultiply(const UqElement& x, Sign upsilon);
/// Apply Delta^upsilon to one leg of a tensor.
UqTensor uq_comultiply_leg(const UqTensor& t, std::size_t leg, Sign upsilon);
UqTensor uq_tensor_multiply(const UqTensor& a, const UqTensor& b);
/// Single leg of a tensor as an element (requires one leg).
UqElement uq_tensor_leg(const UqTensor& t);

UqElement casimir(SignPair tag);
/// Default quotient value tau = q^{-1} lambda^2.
ExactScalar default_tau();
/// Normal form in U_q(tag) / (C - tau): no monomial carries both E and F.
UqElement reduce_casimir(const UqElement& x, const ExactScalar& tau = default_tau());
/// Right Miyashita-Ulbrich action of U_q(+,+) on U_q(0,+).
UqElement mu_action(const UqElement& x, const UqElement& y);

/// Independent word rewriter used as a confluence oracle.
enum class RewriteStrategy { FirstRedex, LastRedex };
UqElement uq_word_normal_form(SignPair tag, const std::vector<UqGen>& word, RewriteStrategy strategy);

/// Rewrite K^m F^l E^n in the PBW basis.
UqElement uq_from_kfe(SignPair tag, int m, int l, int n);

}  // namespace qtorsor
