#include <doctest.h>

#include "qtorsor/podles.hpp"
#include "qtorsor/qspecial.hpp"
#include "qtorsor/theta_rep.hpp"
#include "qtorsor/xmodule.hpp"
#include "test_support.hpp"

using namespace qtorsor;
using namespace qtorsor::testing;

namespace {

const SignPair kZZ{Sign::Zero, Sign::Zero};
const SignPair kZP{Sign::Zero, Sign::Plus};
const SignPair kPZ{Sign::Plus, Sign::Zero};
const SignPair kPP{Sign::Plus, Sign::Plus};

std::vector<UqElement> probes(SignPair tag, int max_degree, int max_k = 2) {
  std::vector<UqElement> out;
  for (int m = -max_k; m <= max_k; ++m)
    for (int n = 0; n <= max_degree; ++n)
      for (int l = 0; n + l <= max_degree; ++l) out.push_back(UqElement::monomial(tag, {m, n, l}));
  return out;
}

PolElement pol(Sign mu, PolMonomial m, const ExactScalar& c = ExactScalar(1)) {
  return PolElement::monomial(mu, m, c);
}

ExactScalar qp(int e) { return ExactScalar::q_pow(e); }

}  // namespace

TEST_CASE("theta is the PBW K-part") {
  for (SignPair tag : {kZP, kPZ})
    for (const auto& u : probes(tag, 3)) {
      const auto& [mono, c] = *u.terms().begin();
      CHECK(theta_functional(tag)(u) == ExactScalar(mono.n == 0 && mono.l == 0 ? 1 : 0));
    }
}

TEST_CASE("theta commutes generators across the sign change") {
  auto lhs = [](PolElement x) { return std::vector<Functional>{pol_functional(x), theta_functional(kPZ)}; };
  auto rhs = [](PolElement x) { return std::vector<Functional>{theta_functional(kPZ), pol_functional(x)}; };
  PolElement one_minus = PolElement::one(Sign::Zero) - pol(Sign::Zero, {0, 1, 1});
  PolElement a0s_mod = one_minus * PolElement::generator(Sign::Zero, PolGen::Astar);
  PolElement one_minus_p = PolElement::one(Sign::Plus) - pol(Sign::Plus, {0, 1, 1});
  for (const auto& u : probes(kPZ, 3)) {
    for (PolGen g : {PolGen::A, PolGen::B, PolGen::Bstar})
      CHECK(evaluate_word(lhs(PolElement::generator(Sign::Plus, g)), u) ==
            evaluate_word(rhs(PolElement::generator(Sign::Zero, g)), u));
    ExactScalar astar = evaluate_word(lhs(PolElement::generator(Sign::Plus, PolGen::Astar)), u);
    CHECK(astar == evaluate_word(rhs(a0s_mod), u));
    CHECK(astar == evaluate_word({pol_functional(one_minus_p), theta_functional(kPZ),
                                  pol_functional(PolElement::generator(Sign::Zero, PolGen::Astar))},
                                 u));
  }
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    PolElement x = random_pol(rng, Sign::Plus, 2, 2);
    for (int m = -2; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (int l = 0; l <= 2; ++l)
          CHECK(evaluate_word(lhs(x), UqElement::monomial(kPZ, {m, n, l})) ==
                pair(UqElement::monomial(kPP, {m, n, l}), x));
  }
}

TEST_CASE("theta products are counits") {
  // both orders evaluated where the convolution is defined
  for (const auto& u : probes(kZZ, 3))
    CHECK(evaluate_word({theta_functional(kZP), theta_functional(kPZ)}, u) == uq_counit(u).value);
  for (const auto& u : probes(kPP, 3))
    CHECK(evaluate_word({theta_functional(kPZ), theta_functional(kZP)}, u) == uq_counit(u).value);
}

TEST_CASE("theta star as theta times a q-exponential") {
  for (const auto& u : probes(kZP, 4)) {
    FunctionalSum series;
    for (int k = 0; k <= 4; ++k) {
      ExactScalar c = qp(k * (k - 1)) * (-qp(2)).pow(k) / qsq_poch(k);
      series.words.push_back({c, {theta_functional(kZP), pol_functional(pol(Sign::Plus, {0, k, k}))}});
    }
    CHECK(theta_star_functional(kZP)(u) == series(u));
  }
}

TEST_CASE("coproduct of theta star") {
  auto ws = probes(kZP, 2, 1);
  for (const auto& w : ws)
    for (const auto& w2 : ws) {
      UqElement prod = w * w2;
      ExactScalar lhs = theta_star_functional(kZP)(prod);
      ExactScalar rhs;
      for (int p = 0; p <= 4; ++p) {
        XElement left = XElement::monomial({p, p, 0});
        XElement right = XElement::monomial({p, 0, p}, (-qp(1)).pow(p));
        rhs += pair_x(left, w) * pair_x(right, w2) / qsq_poch(p);
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("antipode and star of theta") {
  Functional st = star_functional(antipode_functional(theta_functional(kPZ)));
  Functional sts = antipode_functional(theta_star_functional(kZP));
  REQUIRE(st.tag == kPZ);
  REQUIRE(sts.tag == kPZ);
  for (const auto& u : probes(kPZ, 4)) {
    CHECK(st(u) == theta_functional(kPZ)(u));
    CHECK(sts(u) == theta_functional(kPZ)(u));
  }
}

TEST_CASE("theta on F^n E^n") {
  for (int n = 0; n <= 6; ++n) {
    UqElement fe = UqElement::F(kPZ).pow(n) * UqElement::E(kPZ).pow(n);
    ExactScalar expect = qp(n) * qsq_poch(n) / (ExactScalar(1) - qp(2)).pow(2 * n);
    CHECK(pair_theta(fe) == expect);
  }
}

TEST_CASE("a0^s theta^* b^s on K^m F^l E^n") {
  for (int s = 0; s <= 3; ++s)
    for (int m = -2; m <= 2; ++m)
      for (int l = 0; l <= 3; ++l)
        for (int n = 0; n <= 3; ++n) {
          ExactScalar v = pair_x(XElement::monomial({s, s, 0}), uq_from_kfe(kZP, m, l, n));
          ExactScalar expect;
          if (l == 0 && s == n) expect = ExactScalar::s_pow(n) * qsq_poch(n) / (ExactScalar(1) - qp(2)).pow(n);
          CAPTURE(s); CAPTURE(m); CAPTURE(l); CAPTURE(n);
          CHECK(v == expect);
        }
  CHECK(pair_x(XElement::monomial({1, 1, 0}), UqElement::E(kZP)) == ExactScalar::s_pow(1));
}

TEST_CASE("x_normalize agrees with direct convolution") {
  std::vector<XWord> words = {
      {0, {}, {PolGen::A}},
      {1, {PolGen::B}, {PolGen::A, PolGen::Bstar}},
      {-1, {PolGen::Bstar, PolGen::B}, {PolGen::Astar, PolGen::A}},
      {2, {}, {PolGen::A, PolGen::A, PolGen::B}},
      {0, {PolGen::B}, {PolGen::Astar, PolGen::Bstar, PolGen::A}},
  };
  for (const auto& w : words) {
    XElement x = x_normalize(w);
    PolElement left = pol(Sign::Zero, {w.a0_power, 0, 0});
    for (PolGen g : w.left_pol0) left = left * PolElement::generator(Sign::Zero, g);
    PolElement right = PolElement::one(Sign::Plus);
    for (PolGen g : w.right_pol) right = right * PolElement::generator(Sign::Plus, g);
    std::vector<Functional> direct{pol_functional(left), theta_star_functional(kZP), pol_functional(right)};
    for (const auto& u : probes(kZP, 3)) CHECK(pair_x(x, u) == evaluate_word(direct, u));
  }
}

TEST_CASE("x-module rules") {
  XElement th = XElement::monomial({});
  CHECK(th * PolElement::generator(Sign::Plus, PolGen::Astar) == XElement::monomial({-1, 0, 0}));
  XElement expect = XElement::monomial({1, 0, 0}) - XElement::monomial({1, 1, 1});
  CHECK(th * PolElement::generator(Sign::Plus, PolGen::A) == expect);
  CHECK(th.left_b0(false) == XElement::monomial({0, 1, 0}));
  CHECK(XElement::monomial({3, 0, 0}).left_b0(true) == XElement::monomial({3, 0, 1}, qp(-3)));
  CHECK_THROWS_AS(x_normalize({0, {PolGen::A}, {}}), std::invalid_argument);
}
