#include "doctest.h"
#include "qtorsor/qspecial.hpp"
#include "qtorsor/uq.hpp"
#include "test_support.hpp"

using namespace qtorsor;
using namespace qtorsor::testing;

namespace {

const SignPair kPP{Sign::Plus, Sign::Plus};
const SignPair kZZ{Sign::Zero, Sign::Zero};
const SignPair kZP{Sign::Zero, Sign::Plus};

UqElement word_product(SignPair tag, const std::vector<UqGen>& w) {
  UqElement x = UqElement::one(tag);
  for (UqGen g : w) x = x * UqElement::generator(tag, g);
  return x;
}

}  // namespace

TEST_CASE("commutation relations") {
  ExactScalar lam = lambda_exact();
  CHECK(UqElement::F(kZZ) * UqElement::E(kZZ) == UqElement::monomial(kZZ, {0, 1, 1}));
  UqElement fe = UqElement::F(kPP) * UqElement::E(kPP);
  UqElement expect = UqElement::monomial(kPP, {0, 1, 1}) - lam * UqElement::K(kPP, 2) + lam * UqElement::K(kPP, -2);
  CHECK(fe == expect);
  CHECK(UqElement::K(kPP) * UqElement::K(kPP, -1) == UqElement::one(kPP));
  for (SignPair tag : kAllTags) {
    UqElement K = UqElement::K(tag), E = UqElement::E(tag), F = UqElement::F(tag);
    CHECK(K * E == q_exact() * (E * K));
    CHECK(K * F == q_exact().inverse() * (F * K));
    UqElement comm = E * F - F * E;
    UqElement rhs(tag);
    if (tag.mu == Sign::Plus) rhs += lam * UqElement::K(tag, 2);
    if (tag.nu == Sign::Plus) rhs -= lam * UqElement::K(tag, -2);
    CHECK(comm == rhs);
  }
}

TEST_CASE("rewriting confluence on words up to degree six") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> g(0, 3), len(0, 6);
  for (SignPair tag : kAllTags) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<UqGen> w(static_cast<std::size_t>(len(rng)));
      for (auto& x : w) x = static_cast<UqGen>(g(rng));
      UqElement first = uq_word_normal_form(tag, w, RewriteStrategy::FirstRedex);
      UqElement last = uq_word_normal_form(tag, w, RewriteStrategy::LastRedex);
      CHECK(first == last);
      CHECK(first == word_product(tag, w));
    }
  }
}

TEST_CASE("product is associative") {
  std::mt19937 rng(5);
  for (SignPair tag : kAllTags)
    for (int trial = 0; trial < 10; ++trial) {
      UqElement a = random_uq(rng, tag, 2), b = random_uq(rng, tag, 2), c = random_uq(rng, tag, 2);
      CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("star is an anti-multiplicative involution") {
  std::mt19937 rng(9);
  CHECK(uq_star(UqElement::E(kPP)) == UqElement::F(kPP));
  CHECK(uq_star(UqElement::K(kPP, 3)) == UqElement::K(kPP, 3));
  for (SignPair tag : kAllTags)
    for (int trial = 0; trial < 10; ++trial) {
      UqElement a = random_uq(rng, tag, 3), b = random_uq(rng, tag, 2);
      CHECK(uq_star(uq_star(a)) == a);
      CHECK(uq_star(a * b) == uq_star(b) * uq_star(a));
    }
}

TEST_CASE("coproduct examples and homomorphism") {
  for (SignPair tag : kAllTags)
    for (Sign u : kSigns) {
      UqTensor dk = uq_comultiply(UqElement::K(tag), u);
      CHECK(dk.terms.size() == 1);
      CHECK(dk.terms.begin()->first == std::vector<UqMonomial>{{1, 0, 0}, {1, 0, 0}});
      UqTensor d1 = uq_comultiply(UqElement::one(tag), u);
      CHECK(d1.terms.size() == 1);
      // Delta(E^2) = E^2 (x) K^2 + (1 + q^2) E K^-1 (x) K E + K^-2 (x) E^2
      UqTensor de2 = uq_comultiply(UqElement::E(tag).pow(2), u);
      UqTensor expect;
      expect.tags = de2.tags;
      expect.terms[{{0, 2, 0}, {2, 0, 0}}] = ExactScalar(1);
      // E K^-1 in PBW order is q^{-1} K^-1 E
      expect.terms[{{-1, 1, 0}, {1, 1, 0}}] = (ExactScalar(1) + ExactScalar::q_pow(2)) * ExactScalar::q_pow(-1);
      expect.terms[{{-2, 0, 0}, {0, 2, 0}}] = ExactScalar(1);
      CHECK(de2 == expect);
    }
  std::mt19937 rng(13);
  for (SignPair tag : kAllTags)
    for (Sign u : kSigns)
      for (int trial = 0; trial < 4; ++trial) {
        UqElement a = random_uq(rng, tag, 2, 2), b = random_uq(rng, tag, 2, 2);
        CHECK(uq_comultiply(a * b, u) == uq_tensor_multiply(uq_comultiply(a, u), uq_comultiply(b, u)));
      }
}

TEST_CASE("weak coassociativity for all sixteen index combinations") {
  std::mt19937 rng(17);
  for (SignPair tag : kAllTags)
    for (Sign k : kSigns)
      for (Sign l : kSigns) {
        for (int trial = 0; trial < 3; ++trial) {
          UqElement x = random_uq(rng, tag, 3, 2);
          UqTensor lhs = uq_comultiply_leg(uq_comultiply(x, k), 0, l);
          UqTensor rhs = uq_comultiply_leg(uq_comultiply(x, l), 1, k);
          CHECK(lhs == rhs);
        }
      }
}

TEST_CASE("antipode laws") {
  std::mt19937 rng(19);
  CHECK(uq_antipode(UqElement::E(kZP)) == -q_exact() * UqElement::E(kZP.swapped()));
  for (SignPair tag : kAllTags) {
    if (!tag.diagonal()) continue;
    for (Sign j : kSigns)
      for (int trial = 0; trial < 4; ++trial) {
        UqElement x = random_uq(rng, tag, 3, 2);
        UqTensor dx = uq_comultiply(x, j);
        ExactScalar eps = uq_counit(x).value;
        UqElement left(dx.tags[1]), right(dx.tags[0]);
        for (const auto& [key, c] : dx.terms) {
          left += uq_antipode(UqElement::monomial(dx.tags[0], key[0])) * UqElement::monomial(dx.tags[1], key[1]) * c;
          right += UqElement::monomial(dx.tags[0], key[0]) * uq_antipode(UqElement::monomial(dx.tags[1], key[1])) * c;
        }
        CHECK(left == UqElement::scalar(dx.tags[1], eps));
        CHECK(right == UqElement::scalar(dx.tags[0], eps));
      }
  }
  for (SignPair tag : kAllTags)
    for (int trial = 0; trial < 4; ++trial) {
      UqElement x = random_uq(rng, tag, 4, 3);
      CHECK(uq_star(uq_antipode(uq_star(uq_antipode(x)))) == x);
      for (Sign k : kSigns) {
        // Delta_ji^k(S_ij(x)) = (S_kj (x) S_ik)(Delta_ij^{k,op}(x))
        UqTensor lhs = uq_comultiply(uq_antipode(x), k);
        UqTensor dx = uq_comultiply(x, k);
        UqTensor rhs;
        rhs.tags = {dx.tags[1].swapped(), dx.tags[0].swapped()};
        for (const auto& [key, c] : dx.terms) {
          UqElement a = uq_antipode(UqElement::monomial(dx.tags[1], key[1]));
          UqElement b = uq_antipode(UqElement::monomial(dx.tags[0], key[0]));
          for (const auto& [am, ac] : a.terms())
            for (const auto& [bm, bc] : b.terms()) add_term(rhs.terms, {am, bm}, c * ac * bc);
        }
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("counit") {
  CHECK(uq_counit(UqElement::K(kPP, 3)).value == ExactScalar(1));
  CHECK(uq_counit(UqElement::E(kPP)).value.is_zero());
  CHECK(uq_counit(UqElement::E(kPP) * UqElement::F(kPP)).value.is_zero());
  auto off = uq_counit(UqElement::K(kZP));
  CHECK(off.off_diagonal);
  CHECK(off.value.is_zero());
}

TEST_CASE("casimir is central and self-adjoint") {
  ExactScalar lam = lambda_exact();
  CHECK(casimir(kZZ) == UqElement::monomial(kZZ, {0, 1, 1}));
  CHECK(casimir(kZP) == UqElement::monomial(kZP, {0, 1, 1}) + q_exact() * lam * lam * UqElement::K(kZP, -2));
  for (SignPair tag : kAllTags) {
    UqElement c = casimir(tag);
    for (UqGen g : {UqGen::K, UqGen::Kinv, UqGen::E, UqGen::F}) {
      UqElement x = UqElement::generator(tag, g);
      CHECK(c * x == x * c);
    }
    CHECK(uq_star(c) == c);
    UqElement second = UqElement::F(tag) * UqElement::E(tag);
    if (tag.mu == Sign::Plus) second += q_exact() * lam * lam * UqElement::K(tag, 2);
    if (tag.nu == Sign::Plus) second += q_exact().inverse() * lam * lam * UqElement::K(tag, -2);
    CHECK(second == c);
  }
}

TEST_CASE("casimir quotient") {
  ExactScalar lam = lambda_exact(), q = q_exact();
  UqElement ef = UqElement::monomial(kZP, {0, 1, 1});
  CHECK(reduce_casimir(ef) == UqElement::scalar(kZP, q.inverse() * lam * lam) - q * lam * lam * UqElement::K(kZP, -2));
  CHECK(reduce_casimir(UqElement::K(kZP, 3)) == UqElement::K(kZP, 3));
  CHECK(reduce_casimir(casimir(kZP)) == UqElement::scalar(kZP, default_tau()));
  std::mt19937 rng(23);
  for (SignPair tag : kAllTags)
    for (int trial = 0; trial < 6; ++trial) {
      UqElement a = random_uq(rng, tag, 3, 2), b = random_uq(rng, tag, 3, 2);
      CHECK(reduce_casimir(a * b) == reduce_casimir(reduce_casimir(a) * reduce_casimir(b)));
    }
  UqElement E = UqElement::E(kZP), F = UqElement::F(kZP);
  CHECK(reduce_casimir(E * F * E) == reduce_casimir(E * reduce_casimir(F * E)));
}

TEST_CASE("Miyashita-Ulbrich action") {
  std::mt19937 rng(29);
  CHECK(mu_action(UqElement::K(kZP), UqElement::one(kPP)) == UqElement::K(kZP));
  CHECK(mu_action(UqElement::K(kZP), UqElement::K(kPP)) == UqElement::K(kZP));
  for (int trial = 0; trial < 4; ++trial) {
    UqElement x = random_uq(rng, kZP, 2, 2), x2 = random_uq(rng, kZP, 1, 2);
    UqElement y = random_uq(rng, kPP, 2, 2), y2 = random_uq(rng, kPP, 1, 2);
    CHECK(mu_action(x, UqElement::one(kPP)) == x);
    CHECK(mu_action(mu_action(x, y), y2) == mu_action(x, y * y2));
    UqTensor dy = uq_comultiply(y, Sign::Plus);
    UqElement rhs(kZP);
    for (const auto& [key, c] : dy.terms)
      rhs += mu_action(x, UqElement::monomial(kPP, key[0])) * mu_action(x2, UqElement::monomial(kPP, key[1])) * c;
    CHECK(mu_action(x * x2, y) == rhs);
    CHECK(mu_action(uq_star(x), y) == uq_star(mu_action(x, uq_star(uq_antipode(y)))));
  }
  UqElement c = casimir(kZP) - UqElement::scalar(kZP, default_tau());
  for (UqGen g : {UqGen::K, UqGen::E, UqGen::F}) {
    UqElement acted = mu_action(c, UqElement::generator(kPP, g));
    CHECK(reduce_casimir(acted).is_zero());
  }
}
