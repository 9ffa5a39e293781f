#pragma once

#include <cmath>
#include <random>

#include "qtorsor/pol.hpp"
#include "qtorsor/uq.hpp"

namespace qtorsor::testing {

inline const SignPair kAllTags[4] = {
    {Sign::Zero, Sign::Zero}, {Sign::Zero, Sign::Plus}, {Sign::Plus, Sign::Zero}, {Sign::Plus, Sign::Plus}};
inline const Sign kSigns[2] = {Sign::Zero, Sign::Plus};

inline ExactScalar small_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
  int v = c(rng);
  if (v == 0) v = 1;
  return ExactScalar(v) * ExactScalar::s_pow(e(rng));
}

inline UqElement random_uq(std::mt19937& rng, SignPair tag, int max_degree, int terms = 3) {
  std::uniform_int_distribution<int> m(-2, 2), d(0, max_degree);
  UqElement x(tag);
  for (int k = 0; k < terms; ++k) {
    int n = d(rng);
    std::uniform_int_distribution<int> rest(0, max_degree - n);
    x.add({m(rng), n, rest(rng)}, small_scalar(rng));
  }
  return x;
}

inline PolElement random_pol(std::mt19937& rng, Sign mu, int max_degree, int terms = 3) {
  std::uniform_int_distribution<int> r(-2, 2), d(0, max_degree);
  PolElement x = PolElement::scalar(mu, ExactScalar());
  for (int k = 0; k < terms; ++k) {
    int s = d(rng);
    std::uniform_int_distribution<int> rest(0, max_degree - s);
    x.add({r(rng), s, rest(rng)}, small_scalar(rng));
  }
  return x;
}

inline double abs_at(const ExactScalar& x, double q) { return std::abs(x.eval_s(std::sqrt(q))); }

}  // namespace qtorsor::testing
