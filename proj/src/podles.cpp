#include "qtorsor/podles.hpp"

namespace qtorsor {

namespace {
const SignPair kZP{Sign::Zero, Sign::Plus};
}

UqElement podles_image(PodlesGen g) {
  ExactScalar q = ExactScalar::q_pow(1);
  switch (g) {
    case PodlesGen::Z: return UqElement::K(kZP, -2);
    case PodlesGen::X: return ExactScalar::s_pow(1) * (q.inverse() - q) * uq_multiply(UqElement::E(kZP), UqElement::K(kZP, -1));
    case PodlesGen::Xstar: return uq_star(podles_image(PodlesGen::X));
  }
  return UqElement(kZP);
}

UqElement podles_embed(const PodlesPoly& p, const ExactScalar& tau) {
  UqElement out(kZP);
  for (const auto& [word, c] : p) {
    UqElement term = UqElement::scalar(kZP, c);
    for (PodlesGen g : word) term = reduce_casimir(term * podles_image(g), tau);
    out += term;
  }
  return reduce_casimir(out, tau);
}

PodlesPoly podles_word(std::vector<PodlesGen> w, const ExactScalar& c) {
  PodlesPoly p;
  add_term(p, w, c);
  return p;
}

PodlesPoly operator+(PodlesPoly a, const PodlesPoly& b) {
  add_terms(a, b);
  return a;
}

PodlesPoly operator-(PodlesPoly a, const PodlesPoly& b) {
  add_terms(a, b, ExactScalar(-1));
  return a;
}

std::vector<PodlesRelation> podles_relations() {
  using G = PodlesGen;
  ExactScalar q2 = ExactScalar::q_pow(2), q4 = ExactScalar::q_pow(4);
  return {
      {"XZ = q^2 ZX", podles_word({G::X, G::Z}) - podles_word({G::Z, G::X}, q2)},
      {"X*Z = q^-2 ZX*", podles_word({G::Xstar, G::Z}) - podles_word({G::Z, G::Xstar}, q2.inverse())},
      {"X*X = Z - Z^2", podles_word({G::Xstar, G::X}) - podles_word({G::Z}) + podles_word({G::Z, G::Z})},
      {"XX* = q^2 Z - q^4 Z^2",
       podles_word({G::X, G::Xstar}) - podles_word({G::Z}, q2) + podles_word({G::Z, G::Z}, q4)},
  };
}

UqElement podles_z_selfadjoint_defect() {
  UqElement z = podles_image(PodlesGen::Z);
  return reduce_casimir(uq_star(z) - z);
}

}  // namespace qtorsor
