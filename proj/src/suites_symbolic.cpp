#include <random>

#include "qtorsor/podles.hpp"
#include "qtorsor/qspecial.hpp"
#include "qtorsor/suites.hpp"
#include "qtorsor/xmodule.hpp"

namespace qtorsor {

namespace {

const Sign kBoth[2] = {Sign::Zero, Sign::Plus};
const SignPair kTags[4] = {{Sign::Zero, Sign::Zero}, {Sign::Zero, Sign::Plus}, {Sign::Plus, Sign::Zero}, {Sign::Plus, Sign::Plus}};
const SignPair kZP{Sign::Zero, Sign::Plus};
const SignPair kPZ{Sign::Plus, Sign::Zero};
const SignPair kPP{Sign::Plus, Sign::Plus};
const SignPair kZZ{Sign::Zero, Sign::Zero};

struct Tally {
  long checked = 0;
  long failed = 0;
  void operator()(bool ok) {
    ++checked;
    if (!ok) ++failed;
  }
};

VerifyReport exact_report(const std::string& name, const Tally& t, NamedValues params) {
  VerifyReport r;
  r.suite = name;
  r.q = "exact";
  r.params = std::move(params);
  r.defect = static_cast<double>(t.failed);
  r.tolerance = 0;
  r.method = "count of identities with nonzero exact residual";
  r.details = {{"identities_checked", static_cast<double>(t.checked)}};
  r.finish();
  return r;
}

std::vector<UqMonomial> uq_monomials(int degree, int kmax) {
  std::vector<UqMonomial> out;
  for (int m = -kmax; m <= kmax; ++m)
    for (int n = 0; n <= degree; ++n)
      for (int l = 0; n + l <= degree; ++l) out.push_back({m, n, l});
  return out;
}

std::vector<PolMonomial> pol_monomials(int degree, int rmax) {
  std::vector<PolMonomial> out;
  for (int r = -rmax; r <= rmax; ++r)
    for (int s = 0; s <= degree; ++s)
      for (int t = 0; s + t <= degree; ++t) out.push_back({r, s, t});
  return out;
}

UqElement uq_leg_counit(const UqTensor& t, std::size_t keep) {
  UqElement out(t.tags[keep]);
  for (const auto& [key, c] : t.terms) {
    ExactScalar e = uq_counit(UqElement::monomial(t.tags[1 - keep], key[1 - keep])).value;
    if (!e.is_zero()) out.add(key[keep], c * e);
  }
  return out;
}

/// m(S (x) id) or m(id (x) S) applied to a two-leg tensor.
UqElement uq_convolve_antipode(const UqTensor& t, bool left) {
  UqElement out(left ? t.tags[1] : t.tags[0]);
  for (const auto& [key, c] : t.terms) {
    UqElement a = UqElement::monomial(t.tags[0], key[0]), b = UqElement::monomial(t.tags[1], key[1]);
    out += (left ? uq_antipode(a) * b : a * uq_antipode(b)) * c;
  }
  return out;
}

UqTensor uq_tensor_of(const UqElement& x, const UqElement& y) {
  UqTensor t{{x.tag(), y.tag()}, {}};
  for (const auto& [a, ac] : x.terms())
    for (const auto& [b, bc] : y.terms()) add_term(t.terms, std::vector<UqMonomial>{a, b}, ac * bc);
  return t;
}

UqTensor uq_tensor_star(const UqTensor& t) {
  UqTensor out{{t.tags[0].swapped(), t.tags[1].swapped()}, {}};
  for (const auto& [key, c] : t.terms) {
    UqTensor piece = uq_tensor_of(uq_star(UqElement::monomial(t.tags[0], key[0])),
                                  uq_star(UqElement::monomial(t.tags[1], key[1])));
    add_terms(out.terms, piece.terms, c.conj());
  }
  return out;
}

}  // namespace

VerifyReport suite_uq_hopf(const SuiteContext& ctx) {
  Tally tally;
  const int D = ctx.symbolic_degree;
  for (SignPair tag : {kZZ, kPP}) {
    const Sign mu = tag.mu;
    auto monos = uq_monomials(D, ctx.symbolic_k);
    for (const auto& m : monos) {
      UqElement x = UqElement::monomial(tag, m);
      UqTensor dx = uq_comultiply(x, mu);
      tally(uq_comultiply_leg(dx, 0, mu) == uq_comultiply_leg(dx, 1, mu));
      tally(uq_leg_counit(dx, 1) == x);
      tally(uq_leg_counit(dx, 0) == x);
      ExactScalar eps = uq_counit(x).value;
      tally(uq_convolve_antipode(dx, true) == UqElement::scalar(tag, eps));
      tally(uq_convolve_antipode(dx, false) == UqElement::scalar(tag, eps));
      tally(uq_comultiply(uq_star(x), mu) == uq_tensor_star(dx));
      tally(uq_star(uq_star(x)) == x);
    }
    auto small = uq_monomials(D / 2, 1);
    for (const auto& a : small)
      for (const auto& b : small) {
        UqElement x = UqElement::monomial(tag, a), y = UqElement::monomial(tag, b);
        UqElement xy = x * y;
        UqTensor dx = uq_comultiply(x, mu), dy = uq_comultiply(y, mu);
        tally(uq_comultiply(xy, mu) == uq_tensor_multiply(dx, dy));
        tally(uq_antipode(xy) == uq_antipode(y) * uq_antipode(x));
        tally(uq_star(xy) == uq_star(y) * uq_star(x));
        tally(uq_counit(xy).value == uq_counit(x).value * uq_counit(y).value);
      }
  }
  return exact_report("uq-hopf", tally, {{"degree", D}, {"k_range", ctx.symbolic_k}});
}

VerifyReport suite_weak_coassociativity(const SuiteContext& ctx) {
  Tally tally;
  for (SignPair tag : kTags)
    for (Sign k : kBoth)
      for (Sign l : kBoth)
        for (const auto& m : uq_monomials(ctx.symbolic_degree, ctx.symbolic_k)) {
          UqElement x = UqElement::monomial(tag, m);
          tally(uq_comultiply_leg(uq_comultiply(x, k), 0, l) == uq_comultiply_leg(uq_comultiply(x, l), 1, k));
        }
  return exact_report("weak-coassociativity", tally,
                      {{"degree", ctx.symbolic_degree}, {"k_range", ctx.symbolic_k}, {"combinations", 16}});
}

VerifyReport suite_antipode_laws(const SuiteContext& ctx) {
  Tally tally;
  for (SignPair tag : kTags)
    for (const auto& m : uq_monomials(ctx.symbolic_degree, ctx.symbolic_k)) {
      UqElement x = UqElement::monomial(tag, m);
      tally(uq_star(uq_antipode(uq_star(uq_antipode(x)))) == x);
      for (Sign k : kBoth) {
        UqTensor dx = uq_comultiply(x, k);
        // Delta_ji^k(S_ij(x)) = (S (x) S) Delta_ij^{k,op}(x)
        UqTensor flipped;
        flipped.tags = {dx.tags[1].swapped(), dx.tags[0].swapped()};
        for (const auto& [key, c] : dx.terms) {
          UqTensor piece = uq_tensor_of(uq_antipode(UqElement::monomial(dx.tags[1], key[1])),
                                        uq_antipode(UqElement::monomial(dx.tags[0], key[0])));
          add_terms(flipped.terms, piece.terms, c);
        }
        tally(uq_comultiply(uq_antipode(x), k) == flipped);
        if (tag.diagonal()) {
          // m(S (x) id) Delta^k lands in U(k,mu); it equals eps only for the diagonal coproduct
          ExactScalar eps = uq_counit(x).value;
          tally(uq_convolve_antipode(dx, true) == UqElement::scalar(dx.tags[1], eps));
          tally(uq_convolve_antipode(dx, false) == UqElement::scalar(dx.tags[0], eps));
        }
      }
    }
  return exact_report("antipode-laws", tally, {{"degree", ctx.symbolic_degree}, {"k_range", ctx.symbolic_k}});
}

VerifyReport suite_casimir(const SuiteContext& ctx) {
  Tally tally;
  for (SignPair tag : kTags) {
    UqElement c = casimir(tag);
    tally(uq_star(c) == c);
    for (const auto& m : uq_monomials(ctx.symbolic_degree, ctx.symbolic_k)) {
      UqElement x = UqElement::monomial(tag, m);
      tally(c * x == x * c);
    }
  }
  return exact_report("casimir", tally, {{"degree", ctx.symbolic_degree}, {"k_range", ctx.symbolic_k}});
}

VerifyReport suite_confluence(const SuiteContext& ctx) {
  Tally tally;
  const UqGen gens[4] = {UqGen::K, UqGen::Kinv, UqGen::E, UqGen::F};
  for (SignPair tag : kTags) {
    std::vector<std::pair<std::vector<UqGen>, UqElement>> layer{{{}, UqElement::one(tag)}};
    for (int len = 1; len <= ctx.confluence_length; ++len) {
      std::vector<std::pair<std::vector<UqGen>, UqElement>> next;
      for (const auto& [w, prod] : layer)
        for (UqGen g : gens) {
          auto v = w;
          v.push_back(g);
          next.emplace_back(std::move(v), prod * UqElement::generator(tag, g));
        }
      layer = std::move(next);
      for (const auto& [w, prod] : layer) {
        UqElement first = uq_word_normal_form(tag, w, RewriteStrategy::FirstRedex);
        UqElement last = uq_word_normal_form(tag, w, RewriteStrategy::LastRedex);
        tally(first == last);
        tally(first == prod);
      }
    }
  }
  return exact_report("confluence", tally, {{"word_length", ctx.confluence_length}});
}

namespace {

PolElement pol_leg_counit(const PolTensor& t, std::size_t keep) {
  PolElement out(t.tags[keep]);
  for (const auto& [key, c] : t.terms) {
    ExactScalar e = pol_counit(PolElement::monomial(t.tags[1 - keep], key[1 - keep]));
    if (!e.is_zero()) out.add(key[keep], c * e);
  }
  return out;
}

PolElement pol_convolve_antipode(const PolTensor& t, bool left) {
  PolElement out(t.tags[0]);
  for (const auto& [key, c] : t.terms) {
    PolElement a = PolElement::monomial(t.tags[0], key[0]), b = PolElement::monomial(t.tags[1], key[1]);
    out += (left ? pol_antipode(a) * b : a * pol_antipode(b)) * c;
  }
  return out;
}

}  // namespace

VerifyReport suite_pol_hopf(const SuiteContext& ctx) {
  Tally tally;
  const int D = ctx.symbolic_degree;
  for (Sign mu : kBoth) {
    auto g = [mu](PolGen x) { return PolElement::generator(mu, x); };
    PolElement one = PolElement::one(mu);
    ExactScalar q = q_exact(), q2 = q * q;
    if (mu == Sign::Plus) {
      tally(g(PolGen::Astar) * g(PolGen::A) + g(PolGen::Bstar) * g(PolGen::B) == one);
      tally(g(PolGen::A) * g(PolGen::Astar) + q2 * g(PolGen::B) * g(PolGen::Bstar) == one);
    } else {
      tally(g(PolGen::Astar) * g(PolGen::A) == one);
      tally(g(PolGen::A) * g(PolGen::Astar) == one);
    }
    tally(g(PolGen::A) * g(PolGen::B) == q * g(PolGen::B) * g(PolGen::A));
    tally(g(PolGen::A) * g(PolGen::Bstar) == q * g(PolGen::Bstar) * g(PolGen::A));
    tally(g(PolGen::B) * g(PolGen::Bstar) == g(PolGen::Bstar) * g(PolGen::B));
    for (const auto& m : pol_monomials(D, ctx.symbolic_k)) {
      PolElement x = PolElement::monomial(mu, m);
      PolTensor dx = pol_comultiply(x);
      tally(pol_comultiply_leg(dx, 0) == pol_comultiply_leg(dx, 1));
      tally(pol_leg_counit(dx, 0) == x);
      tally(pol_leg_counit(dx, 1) == x);
      ExactScalar eps = pol_counit(x);
      tally(pol_convolve_antipode(dx, true) == PolElement::scalar(mu, eps));
      tally(pol_convolve_antipode(dx, false) == PolElement::scalar(mu, eps));
      tally(pol_star(pol_antipode(pol_star(pol_antipode(x)))) == x);
    }
    auto small = pol_monomials(D / 2, 1);
    for (const auto& a : small)
      for (const auto& b : small) {
        PolElement x = PolElement::monomial(mu, a), y = PolElement::monomial(mu, b);
        PolElement xy = x * y;
        tally(pol_comultiply(xy) == pol_tensor_multiply(pol_comultiply(x), pol_comultiply(y)));
        tally(pol_antipode(xy) == pol_antipode(y) * pol_antipode(x));
        tally(pol_star(xy) == pol_star(y) * pol_star(x));
        tally(pol_counit(xy) == pol_counit(x) * pol_counit(y));
      }
  }
  return exact_report("pol-hopf", tally, {{"degree", D}, {"r_range", ctx.symbolic_k}});
}

VerifyReport suite_pairing_grid(const SuiteContext& ctx) {
  Tally tally;
  const int g = ctx.pairing_grid;
  for (Sign mu : kBoth)
    for (int m = -g; m <= g; ++m)
      for (int n = 0; n <= g; ++n)
        for (int l = 0; l <= g; ++l)
          for (int r = -g; r <= g; ++r)
            for (int s = 0; s <= g; ++s)
              for (int t = 0; t <= g; ++t) {
                bool ok = false;
                try {
                  ok = pair_closed(mu, {m, n, l}, {r, s, t}) == pair_oracle(mu, {m, n, l}, {r, s, t});
                } catch (const std::exception&) {
                  ok = false;
                }
                tally(ok);
              }
  return exact_report("pairing-grid", tally, {{"grid", g}});
}

namespace {

std::vector<UqElement> probes(SignPair tag, int degree, int kmax) {
  std::vector<UqElement> out;
  for (const auto& m : uq_monomials(degree, kmax)) out.push_back(UqElement::monomial(tag, m));
  return out;
}

PolElement pmono(Sign mu, PolMonomial m, const ExactScalar& c = ExactScalar(1)) {
  return PolElement::monomial(mu, m, c);
}

}  // namespace

VerifyReport suite_theta_calculus(const SuiteContext& ctx) {
  Tally lemcom2, ident1, ident2, ident3, ident4;
  const int D = ctx.symbolic_degree;
  const int K = ctx.symbolic_k;
  auto gen = [](Sign mu, PolGen g) { return PolElement::generator(mu, g); };
  Functional th_pz = theta_functional(kPZ), th_zp = theta_functional(kZP);
  Functional th_star = theta_star_functional(kZP);

  // commutation of Pol generators across theta_{+0}; pairing with theta_{+0} lifts K,E,F
  PolElement one_minus0 = PolElement::one(Sign::Zero) - pmono(Sign::Zero, {0, 1, 1});
  PolElement one_minusp = PolElement::one(Sign::Plus) - pmono(Sign::Plus, {0, 1, 1});
  for (const auto& u : probes(kPZ, D, K)) {
    for (PolGen g : {PolGen::A, PolGen::B, PolGen::Bstar})
      lemcom2(evaluate_word({pol_functional(gen(Sign::Plus, g)), th_pz}, u) ==
              evaluate_word({th_pz, pol_functional(gen(Sign::Zero, g))}, u));
    ExactScalar astar = evaluate_word({pol_functional(gen(Sign::Plus, PolGen::Astar)), th_pz}, u);
    lemcom2(astar == evaluate_word({th_pz, pol_functional(one_minus0 * gen(Sign::Zero, PolGen::Astar))}, u));
    lemcom2(astar == evaluate_word({pol_functional(one_minusp), th_pz, pol_functional(gen(Sign::Zero, PolGen::Astar))}, u));
  }
  for (const auto& pm : pol_monomials(D / 2, 1)) {
    PolElement x = pmono(Sign::Plus, pm);
    for (const auto& m : uq_monomials(D, K))
      lemcom2(evaluate_word({pol_functional(x), th_pz}, UqElement::monomial(kPZ, m)) ==
              pair(UqElement::monomial(kPP, m), x));
  }

  // (1) theta_{0+} theta_{+0} and theta_{+0} theta_{0+} are units
  for (const auto& u : probes(kZZ, D, K)) ident1(evaluate_word({th_zp, th_pz}, u) == uq_counit(u).value);
  for (const auto& u : probes(kPP, D, K)) ident1(evaluate_word({th_pz, th_zp}, u) == uq_counit(u).value);

  // (2) theta_{+0}^* = theta_{0+} E_{q^2}(-q^2 b^* b)
  for (const auto& u : probes(kZP, D, K)) {
    FunctionalSum series;
    for (int k = 0; k <= D; ++k) {
      ExactScalar c = ExactScalar::q_pow(k * (k - 1)) * (-ExactScalar::q_pow(2)).pow(k) / qsq_poch(k);
      series.words.push_back({c, {th_zp, pol_functional(pmono(Sign::Plus, {0, k, k}))}});
    }
    ident2(th_star(u) == series(u));
  }

  // (3) coproduct of theta_{+0}^*, tested on products w w'
  {
    auto ws = probes(kZP, D / 2, 1);
    for (const auto& w : ws)
      for (const auto& w2 : ws) {
        ExactScalar lhs = th_star(w * w2), rhs;
        for (int p = 0; p <= D; ++p) {
          XElement left = XElement::monomial({p, p, 0});
          XElement right = XElement::monomial({p, 0, p}, (-q_exact()).pow(p));
          rhs += pair_x(left, w) * pair_x(right, w2) / qsq_poch(p);
        }
        ident3(lhs == rhs);
      }
  }

  // (4) (S theta)^* = S(theta^*) = theta
  Functional st = star_functional(antipode_functional(th_pz));
  Functional sts = antipode_functional(th_star);
  for (const auto& u : probes(kPZ, D, K)) {
    ExactScalar expect = th_pz(u);
    ident4(st(u) == expect);
    ident4(sts(u) == expect);
  }

  Tally total;
  for (const Tally* t : {&lemcom2, &ident1, &ident2, &ident3, &ident4}) {
    total.checked += t->checked;
    total.failed += t->failed;
  }
  VerifyReport r = exact_report("theta-calculus", total, {{"degree", D}, {"k_range", K}});
  r.details = {{"identities_checked", static_cast<double>(total.checked)},
               {"commutation_failures", static_cast<double>(lemcom2.failed)},
               {"units_failures", static_cast<double>(ident1.failed)},
               {"star_series_failures", static_cast<double>(ident2.failed)},
               {"coproduct_failures", static_cast<double>(ident3.failed)},
               {"antipode_star_failures", static_cast<double>(ident4.failed)}};
  return r;
}

VerifyReport suite_podles_embedding(const SuiteContext&) {
  Tally tally;
  for (const auto& rel : podles_relations()) tally(podles_embed(rel.lhs_minus_rhs).is_zero());
  tally(podles_z_selfadjoint_defect().is_zero());
  return exact_report("podles-embedding", tally, {{"relations", 5}});
}

}  // namespace qtorsor
