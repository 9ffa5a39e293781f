#pragma once

#include <string>

#include "qtorsor/linear.hpp"

namespace qtorsor {

/// a^r b^s (b*)^t; for r < 0 the factor a^r means (a*)^{-r}.
struct PolMonomial {
  int r = 0;
  int s = 0;
  int t = 0;
  auto operator<=>(const PolMonomial&) const = default;
  int degree() const { return (r < 0 ? -r : r) + s + t; }
};

enum class PolGen { A, Astar, B, Bstar };

/// Element of Pol_q(mu): mu = + is SU_q(2), mu = 0 is E~_q(2).
class PolElement {
 public:
  explicit PolElement(Sign mu = Sign::Plus) : mu_(mu) {}
  PolElement(Sign mu, Terms<PolMonomial> terms) : mu_(mu), terms_(std::move(terms)) {}

  static PolElement one(Sign mu) { return monomial(mu, {}); }
  static PolElement scalar(Sign mu, const ExactScalar& c) { return monomial(mu, {}, c); }
  static PolElement monomial(Sign mu, PolMonomial mono, const ExactScalar& c = ExactScalar(1));
  static PolElement generator(Sign mu, PolGen g);

  Sign mu() const { return mu_; }
  const Terms<PolMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const PolMonomial& mono, const ExactScalar& c) { add_term(terms_, mono, c); }

  PolElement& operator+=(const PolElement& o);
  PolElement& operator-=(const PolElement& o);
  PolElement& operator*=(const ExactScalar& c);
  friend PolElement operator+(PolElement a, const PolElement& b) { return a += b; }
  friend PolElement operator-(PolElement a, const PolElement& b) { return a -= b; }
  friend PolElement operator*(PolElement a, const ExactScalar& c) { return a *= c; }
  friend PolElement operator*(const ExactScalar& c, PolElement a) { return a *= c; }
  friend PolElement operator*(const PolElement& a, const PolElement& b);
  PolElement operator-() const { return *this * ExactScalar(-1); }
  PolElement pow(int e) const;

  friend bool operator==(const PolElement& a, const PolElement& b) {
    return a.mu_ == b.mu_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  Sign mu_;
  Terms<PolMonomial> terms_;
};

using PolTensor = Tensor<PolMonomial, Sign>;

Terms<PolMonomial> pol_monomial_product(Sign mu, const PolMonomial& x, const PolMonomial& y);
PolElement pol_multiply(const PolElement& x, const PolElement& y);
PolElement pol_star(const PolElement& x);
PolElement pol_antipode(const PolElement& x);
ExactScalar pol_counit(const PolElement& x);
PolTensor pol_comultiply(const PolElement& x);
PolTensor pol_comultiply_leg(const PolTensor& t, std::size_t leg);
PolTensor pol_tensor_multiply(const PolTensor& a, const PolTensor& b);

struct PolGenImage {
  PolGen left;
  PolGen right;
  ExactScalar c;
};
/// Delta of a single generator as a sum of generator pairs.
std::vector<PolGenImage> pol_generator_coproduct(Sign mu, PolGen g);

/// Word of generators as a monomial list (leftmost first), used by the pairing oracle.
std::vector<PolGen> pol_monomial_word(const PolMonomial& mono);

}  // namespace qtorsor
