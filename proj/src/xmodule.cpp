#include "qtorsor/xmodule.hpp"

#include <map>
#include <stdexcept>

#include "qtorsor/qspecial.hpp"

namespace qtorsor {

namespace {

const SignPair kZP{Sign::Zero, Sign::Plus};

std::string power_str(const char* name, int e) {
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

}  // namespace

XElement XElement::monomial(XMonomial m, const ExactScalar& c) {
  XElement x;
  x.add(m, c);
  return x;
}

XElement XElement::from_parts(int r, const PolElement& p) {
  if (p.mu() != Sign::Plus) throw std::invalid_argument("XElement: right factor must lie in Pol_q(+)");
  XElement out;
  for (const auto& [m, c] : p.terms()) {
    if (m.r == 0) {
      out.add({r, m.s, m.t}, c);
    } else if (m.r < 0) {
      out.add({r + m.r, m.s, m.t}, c);
    } else {
      PolElement rest = PolElement::one(Sign::Plus) - PolElement::monomial(Sign::Plus, {0, 1, 1});
      rest = rest * PolElement::monomial(Sign::Plus, {m.r - 1, m.s, m.t});
      out += from_parts(r + 1, rest) * c;
    }
  }
  return out;
}

XElement& XElement::operator+=(const XElement& o) {
  add_terms(terms_, o.terms_);
  return *this;
}

XElement& XElement::operator-=(const XElement& o) {
  add_terms(terms_, o.terms_, ExactScalar(-1));
  return *this;
}

XElement& XElement::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

XElement operator*(const XElement& x, const PolElement& p) {
  XElement out;
  for (const auto& [m, c] : x.terms())
    out += XElement::from_parts(m.r, PolElement::monomial(Sign::Plus, {0, m.s, m.t}) * p) * c;
  return out;
}

XElement XElement::left_a0(int k) const {
  XElement out;
  for (const auto& [m, c] : terms_) out.add({m.r + k, m.s, m.t}, c);
  return out;
}

XElement XElement::left_b0(bool star) const {
  XElement out;
  for (const auto& [m, c] : terms_)
    out.add({m.r, m.s + (star ? 0 : 1), m.t + (star ? 1 : 0)}, c * ExactScalar::q_pow(-m.r));
  return out;
}

std::string XElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> f;
    if (!c.is_one()) f.push_back("(" + c.str() + ")");
    if (m.r != 0) f.push_back(power_str("a0", m.r));
    f.push_back("theta_star");
    if (m.s > 0) f.push_back(power_str("b", m.s));
    if (m.t > 0) f.push_back(power_str("bstar", m.t));
    for (std::size_t k = 0; k < f.size(); ++k) out += (k ? "*" : "") + f[k];
  }
  return out;
}

XElement x_normalize(const XWord& w) {
  PolElement right = PolElement::one(Sign::Plus);
  for (PolGen g : w.right_pol) right = right * PolElement::generator(Sign::Plus, g);
  XElement x = XElement::from_parts(0, right);
  for (auto it = w.left_pol0.rbegin(); it != w.left_pol0.rend(); ++it) {
    if (*it != PolGen::B && *it != PolGen::Bstar)
      throw std::invalid_argument("x_normalize: only b_0 and b_0^* may stand between a_0 and theta^*");
    x = x.left_b0(*it == PolGen::Bstar);
  }
  return x.left_a0(w.a0_power);
}

namespace {

struct ThreeLegTerm {
  UqMonomial leg0;
  ExactScalar middle;  // coefficient times <theta^*, leg1>
  UqMonomial leg2;
};

const std::vector<ThreeLegTerm>& three_leg_coproduct(const UqMonomial& u) {
  thread_local std::map<UqMonomial, std::vector<ThreeLegTerm>> cache;
  auto it = cache.find(u);
  if (it != cache.end()) return it->second;
  UqTensor t = uq_comultiply(UqElement::monomial(kZP, u), Sign::Zero);
  t = uq_comultiply_leg(t, 1, Sign::Plus);
  Functional theta = theta_star_functional(kZP);
  std::vector<ThreeLegTerm> out;
  for (const auto& [legs, c] : t.terms) {
    ExactScalar v = theta.value(legs[1]);
    if (!v.is_zero()) out.push_back({legs[0], c * v, legs[2]});
  }
  return cache.emplace(u, std::move(out)).first->second;
}

}  // namespace

ExactScalar pair_x(const XElement& xi, const UqElement& u) {
  if (u.tag() != kZP) throw std::invalid_argument("pair_x: expects U_q(0,+)");
  ExactScalar v;
  for (const auto& [mono, uc] : u.terms()) {
    const auto& legs = three_leg_coproduct(mono);
    for (const auto& [xm, xc] : xi.terms()) {
      ExactScalar sum;
      for (const auto& term : legs) {
        if (term.leg2.n != xm.s || term.leg2.l != xm.t) continue;
        ExactScalar a = pair_closed(Sign::Zero, term.leg0, {xm.r, 0, 0});
        if (a.is_zero()) continue;
        sum += term.middle * a * pair_closed(Sign::Plus, term.leg2, {0, xm.s, xm.t});
      }
      if (!sum.is_zero()) v += uc * xc * sum;
    }
  }
  return v;
}

GEntry g_entry(int t, int s) {
  if (t < 0 || s < 0) throw std::domain_error("g_entry: indices must be nonnegative");
  ExactScalar q = ExactScalar::q_pow(1), q2 = ExactScalar::q_pow(2);
  int lo = std::min(t, s), d = std::abs(s - t);
  GEntry g;
  g.sqrt_num_index = std::max(t, s);
  g.sqrt_den_index = lo;
  ExactScalar pre = q.pow(lo * (lo - std::max(t, s))) / qsq_poch(d);
  if (t > s) pre *= (-q).pow(d);
  // Wall polynomial p_lo(b^*b; q^{2d}, 0 | q^2) expanded in powers of b^*b
  ExactScalar qm = q2.pow(-lo), qa = q2.pow(d + 1);
  ExactScalar ck(1);
  for (int k = 0; k <= lo; ++k) {
    XMonomial m = t <= s ? XMonomial{s + t, d + k, k} : XMonomial{s + t, k, d + k};
    g.body.add(m, pre * ck);
    ExactScalar qk = q2.pow(k);
    ck *= (ExactScalar(1) - qm * qk) / ((ExactScalar(1) - qa * qk) * (ExactScalar(1) - q2 * qk)) * q2;
  }
  return g;
}

}  // namespace qtorsor
