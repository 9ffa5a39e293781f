#include <doctest.h>

#include <Eigen/Dense>

#include "qtorsor/pairing.hpp"
#include "test_support.hpp"

using namespace qtorsor;
using namespace qtorsor::testing;

namespace {

ExactScalar pair_tensor(const UqTensor& x, const PolTensor& p) {
  ExactScalar v;
  for (const auto& [ul, uc] : x.terms)
    for (const auto& [pl, pc] : p.terms) {
      ExactScalar prod = uc * pc;
      for (std::size_t k = 0; k < ul.size() && !prod.is_zero(); ++k)
        prod *= pair_closed(p.tags[k], ul[k], pl[k]);
      v += prod;
    }
  return v;
}

}  // namespace

TEST_CASE("closed form agrees with the generator oracle") {
  for (Sign mu : kSigns)
    for (int m = -2; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (int l = 0; l <= 2; ++l)
          for (int r = -2; r <= 2; ++r)
            for (int s = 0; s <= 2; ++s)
              for (int t = 0; t <= 2; ++t) {
                UqMonomial u{m, n, l};
                PolMonomial p{r, s, t};
                CAPTURE(sign_name(mu));
                CAPTURE(m); CAPTURE(n); CAPTURE(l); CAPTURE(r); CAPTURE(s); CAPTURE(t);
                CHECK(pair_closed(mu, u, p) == pair_oracle(mu, u, p));
              }
}

TEST_CASE("generator values") {
  const SignPair pp{Sign::Plus, Sign::Plus};
  auto g = [&](UqGen h, PolGen k) {
    return pair(UqElement::generator(pp, h), PolElement::generator(Sign::Plus, k));
  };
  CHECK(g(UqGen::K, PolGen::A) == ExactScalar::s_pow(-1));
  CHECK(g(UqGen::K, PolGen::Astar) == ExactScalar::s_pow(1));
  CHECK(g(UqGen::Kinv, PolGen::A) == ExactScalar::s_pow(1));
  CHECK(g(UqGen::E, PolGen::B) == ExactScalar(1));
  CHECK(g(UqGen::F, PolGen::Bstar) == -ExactScalar::q_pow(-1));
  CHECK(g(UqGen::E, PolGen::A).is_zero());
  CHECK(g(UqGen::F, PolGen::B).is_zero());
}

TEST_CASE("duality: products against coproducts") {
  std::mt19937 rng(7);
  for (Sign mu : kSigns) {
    SignPair tag{mu, mu};
    for (int trial = 0; trial < 12; ++trial) {
      UqElement x = random_uq(rng, tag, 2, 2), y = random_uq(rng, tag, 2, 2);
      PolElement p = random_pol(rng, mu, 2, 2), r = random_pol(rng, mu, 2, 2);
      UqTensor xy{{tag, tag}, {}};
      for (const auto& [a, ac] : x.terms())
        for (const auto& [b, bc] : y.terms()) add_term(xy.terms, std::vector<UqMonomial>{a, b}, ac * bc);
      PolTensor pr{{mu, mu}, {}};
      for (const auto& [a, ac] : p.terms())
        for (const auto& [b, bc] : r.terms()) add_term(pr.terms, std::vector<PolMonomial>{a, b}, ac * bc);
      CHECK(pair(x * y, p) == pair_tensor(xy, pol_comultiply(p)));
      CHECK(pair(x, p * r) == pair_tensor(uq_comultiply(x, mu), pr));
    }
  }
}

TEST_CASE("antipode and star compatibility") {
  std::mt19937 rng(11);
  for (Sign mu : kSigns) {
    SignPair tag{mu, mu};
    for (int trial = 0; trial < 15; ++trial) {
      UqElement x = random_uq(rng, tag, 3);
      PolElement p = random_pol(rng, mu, 3);
      CHECK(pair(uq_antipode(x), p) == pair(x, pol_antipode(p)));
      CHECK(pair(x, pol_star(p)) == pair(uq_star(uq_antipode(x)), p).conj());
      CHECK(pair(uq_star(x), p) == pair(x, pol_star(pol_antipode(p))).conj());
    }
  }
}

TEST_CASE("unit and counit") {
  std::mt19937 rng(3);
  for (Sign mu : kSigns) {
    SignPair tag{mu, mu};
    for (int trial = 0; trial < 10; ++trial) {
      UqElement x = random_uq(rng, tag, 3);
      PolElement p = random_pol(rng, mu, 3);
      CHECK(pair(x, PolElement::one(mu)) == uq_counit(x).value);
      CHECK(pair(UqElement::one(tag), p) == pol_counit(p));
    }
  }
}

TEST_CASE("nondegeneracy on graded blocks") {
  const double q = 0.45;
  for (Sign mu : kSigns)
    for (int n = 0; n <= 2; ++n)
      for (int l = 0; l <= 2; ++l) {
        // rows: K^m E^n F^l, columns: a^r b^n (b^*)^l, m and r in [-2, 2]
        Eigen::MatrixXcd block(5, 5);
        for (int m = -2; m <= 2; ++m)
          for (int r = -2; r <= 2; ++r)
            block(m + 2, r + 2) = pair_closed(mu, {m, n, l}, {r, n, l}).eval_s(std::sqrt(q));
        CAPTURE(n); CAPTURE(l);
        CHECK(block.fullPivLu().rank() == 5);
      }
}
