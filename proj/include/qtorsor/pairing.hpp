#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtorsor/pol.hpp"
#include "qtorsor/uq.hpp"

namespace qtorsor {

/// <K^m E^n F^l, a^r b^s (b*)^t> by the closed formula; mu = + with r < 0 goes through the oracle.
ExactScalar pair_closed(Sign mu, const UqMonomial& u, const PolMonomial& p);
/// Recursive evaluation from the generator table through the duality laws.
ExactScalar pair_oracle(Sign mu, const UqMonomial& u, const PolMonomial& p);
/// Bilinear extension (closed formula per monomial pair).
ExactScalar pair(const UqElement& u, const PolElement& p);
ExactScalar pair_oracle(const UqElement& u, const PolElement& p);

/// <theta, w> for w in U_q(+,0) or U_q(0,+): sum of pure-K coefficients.
ExactScalar pair_theta(const UqElement& w);
/// <theta_{+0}^*, w> = conj <theta_{+0}, S_{0+}(w)^*> for w in U_q(0,+);
/// for w in U_q(+,0) the same rule gives <theta_{0+}^*, w>.
ExactScalar pair_theta_star(const UqElement& w);

/// Linear functional on U_q(tag) given by its values on PBW monomials.
struct Functional {
  SignPair tag;
  std::function<ExactScalar(const UqMonomial&)> value;
  std::string name;

  ExactScalar operator()(const UqElement& x) const;
};

Functional pol_functional(const PolElement& p);
Functional theta_functional(SignPair tag);
/// theta_{nu mu}^* as a functional on U_q(tag); tag = (0,+) gives theta_{+0}^*.
Functional theta_star_functional(SignPair tag);
Functional counit_functional(SignPair tag);
/// omega -> omega^*, omega^*(x) = conj omega(S(x)^*), on U_q(tag.swapped()).
Functional star_functional(const Functional& f);
/// S(omega)(x) = omega(S(x)), on U_q(tag.swapped()).
Functional antipode_functional(const Functional& f);

/// Convolution product f_1 f_2 ... f_k evaluated on x through the iterated coproduct.
ExactScalar evaluate_word(const std::vector<Functional>& word, const UqElement& x);

/// Sum over several words with scalar weights.
struct FunctionalSum {
  std::vector<std::pair<ExactScalar, std::vector<Functional>>> words;
  ExactScalar operator()(const UqElement& x) const;
};

}  // namespace qtorsor
