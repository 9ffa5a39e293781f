#pragma once

#include <vector>

#include "qtorsor/uq.hpp"

namespace qtorsor {

enum class PodlesGen { X, Xstar, Z };

/// Noncommutative polynomial in X, X*, Z.
using PodlesPoly = Terms<std::vector<PodlesGen>>;

/// Image of a generator in U_q(0,+): X -> q^{1/2}(q^{-1} - q) E K^{-1}, Z -> K^{-2}.
UqElement podles_image(PodlesGen g);
/// Substitute and reduce in the Casimir quotient A_{0+}.
UqElement podles_embed(const PodlesPoly& p, const ExactScalar& tau = default_tau());

PodlesPoly podles_word(std::vector<PodlesGen> w, const ExactScalar& c = ExactScalar(1));
PodlesPoly operator+(PodlesPoly a, const PodlesPoly& b);
PodlesPoly operator-(PodlesPoly a, const PodlesPoly& b);

struct PodlesRelation {
  const char* name;
  PodlesPoly lhs_minus_rhs;
};
/// The four polynomial relations of the standard Podles sphere.
std::vector<PodlesRelation> podles_relations();
/// Image of Z* - Z; the fifth relation.
UqElement podles_z_selfadjoint_defect();

}  // namespace qtorsor
