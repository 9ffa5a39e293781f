#include "qtorsor/pol.hpp"

#include <stdexcept>

namespace qtorsor {

namespace {

ExactScalar q_pow(int e) { return ExactScalar::q_pow(e); }

void check_same(Sign a, Sign b) {
  if (a != b) throw std::invalid_argument("Pol_q: tag mismatch");
}

PolMonomial gen_monomial(PolGen g) {
  switch (g) {
    case PolGen::A: return {1, 0, 0};
    case PolGen::Astar: return {-1, 0, 0};
    case PolGen::B: return {0, 1, 0};
    case PolGen::Bstar: return {0, 0, 1};
  }
  return {};
}

Terms<PolMonomial> times_bbstar(const Terms<PolMonomial>& x) {
  Terms<PolMonomial> out;
  for (const auto& [m, c] : x) out[{m.r, m.s + 1, m.t + 1}] = c;
  return out;
}

// a^r a^{r2} in the signed-power convention, expanded on the basis.
Terms<PolMonomial> a_power_product(Sign mu, int r, int r2) {
  Terms<PolMonomial> out;
  if (mu == Sign::Zero || r == 0 || r2 == 0 || (r > 0) == (r2 > 0)) {
    out[{r + r2, 0, 0}] = ExactScalar(1);
    return out;
  }
  if (r > 0) {
    int k = -r2;
    Terms<PolMonomial> inner = a_power_product(mu, r - 1, -(k - 1));
    out = inner;
    add_terms(out, times_bbstar(inner), -q_pow(2 + 2 * (k - 1)));
  } else {
    int j = -r;
    Terms<PolMonomial> inner = a_power_product(mu, -(j - 1), r2 - 1);
    out = inner;
    add_terms(out, times_bbstar(inner), -q_pow(-2 * (r2 - 1)));
  }
  return out;
}

}  // namespace

std::vector<PolGenImage> pol_generator_coproduct(Sign mu, PolGen g) {
  const ExactScalar mq = -q_pow(1);
  switch (g) {
    case PolGen::A:
      if (mu == Sign::Zero) return {{PolGen::A, PolGen::A, 1}};
      return {{PolGen::A, PolGen::A, 1}, {PolGen::Bstar, PolGen::B, mq}};
    case PolGen::Astar:
      if (mu == Sign::Zero) return {{PolGen::Astar, PolGen::Astar, 1}};
      return {{PolGen::Astar, PolGen::Astar, 1}, {PolGen::B, PolGen::Bstar, mq}};
    case PolGen::B: return {{PolGen::B, PolGen::A, 1}, {PolGen::Astar, PolGen::B, 1}};
    case PolGen::Bstar: return {{PolGen::Bstar, PolGen::Astar, 1}, {PolGen::A, PolGen::Bstar, 1}};
  }
  return {};
}

namespace {

Terms<std::vector<PolMonomial>> monomial_coproduct(Sign mu, const PolMonomial& x) {
  Terms<std::vector<PolMonomial>> terms;
  terms[{PolMonomial{}, PolMonomial{}}] = ExactScalar(1);
  for (PolGen g : pol_monomial_word(x)) {
    Terms<std::vector<PolMonomial>> next;
    for (const auto& [key, c] : terms)
      for (const auto& img : pol_generator_coproduct(mu, g)) {
        auto left = pol_monomial_product(mu, key[0], gen_monomial(img.left));
        auto right = pol_monomial_product(mu, key[1], gen_monomial(img.right));
        for (const auto& [lm, lc] : left)
          for (const auto& [rm, rc] : right) add_term(next, {lm, rm}, c * img.c * lc * rc);
      }
    terms = std::move(next);
  }
  return terms;
}

std::string power_str(const char* name, int e) {
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

}  // namespace

PolElement PolElement::monomial(Sign mu, PolMonomial mono, const ExactScalar& c) {
  PolElement x(mu);
  x.add(mono, c);
  return x;
}

PolElement PolElement::generator(Sign mu, PolGen g) { return monomial(mu, gen_monomial(g)); }

PolElement& PolElement::operator+=(const PolElement& o) {
  check_same(mu_, o.mu_);
  add_terms(terms_, o.terms_);
  return *this;
}

PolElement& PolElement::operator-=(const PolElement& o) {
  check_same(mu_, o.mu_);
  add_terms(terms_, o.terms_, ExactScalar(-1));
  return *this;
}

PolElement& PolElement::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

PolElement operator*(const PolElement& a, const PolElement& b) { return pol_multiply(a, b); }

PolElement PolElement::pow(int e) const {
  if (e < 0) throw std::domain_error("PolElement::pow: negative exponent");
  PolElement result = one(mu_);
  for (int k = 0; k < e; ++k) result = result * *this;
  return result;
}

std::string PolElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> f;
    if (!c.is_one() || m == PolMonomial{}) {
      std::string s = c.str();
      bool simple = c.is_laurent() && c.num().coeffs().size() == 1 && c.num().coeffs()[0].is_atomic();
      f.push_back(simple ? s : "(" + s + ")");
    }
    if (m.r > 0) f.push_back(power_str("a", m.r));
    if (m.r < 0) f.push_back(power_str("astar", -m.r));
    if (m.s > 0) f.push_back(power_str("b", m.s));
    if (m.t > 0) f.push_back(power_str("bstar", m.t));
    for (std::size_t k = 0; k < f.size(); ++k) out += (k ? "*" : "") + f[k];
  }
  return out;
}

std::vector<PolGen> pol_monomial_word(const PolMonomial& mono) {
  std::vector<PolGen> w;
  for (int k = 0; k < (mono.r < 0 ? -mono.r : mono.r); ++k) w.push_back(mono.r > 0 ? PolGen::A : PolGen::Astar);
  for (int k = 0; k < mono.s; ++k) w.push_back(PolGen::B);
  for (int k = 0; k < mono.t; ++k) w.push_back(PolGen::Bstar);
  return w;
}

Terms<PolMonomial> pol_monomial_product(Sign mu, const PolMonomial& x, const PolMonomial& y) {
  ExactScalar pass = q_pow(-(x.s + x.t) * y.r);
  Terms<PolMonomial> out;
  for (const auto& [m, c] : a_power_product(mu, x.r, y.r))
    add_term(out, {m.r, m.s + x.s + y.s, m.t + x.t + y.t}, c * pass);
  return out;
}

PolElement pol_multiply(const PolElement& x, const PolElement& y) {
  check_same(x.mu(), y.mu());
  PolElement out(x.mu());
  for (const auto& [xm, xc] : x.terms())
    for (const auto& [ym, yc] : y.terms()) {
      ExactScalar c = xc * yc;
      for (const auto& [m, pc] : pol_monomial_product(x.mu(), xm, ym)) out.add(m, c * pc);
    }
  return out;
}

PolElement pol_star(const PolElement& x) {
  PolElement out(x.mu());
  for (const auto& [m, c] : x.terms()) out.add({-m.r, m.t, m.s}, c.conj() * q_pow((m.s + m.t) * m.r));
  return out;
}

PolElement pol_antipode(const PolElement& x) {
  PolElement out(x.mu());
  for (const auto& [m, c] : x.terms()) {
    ExactScalar pre = c * ExactScalar(-1).pow(m.s + m.t) * q_pow(m.s - m.t);
    for (const auto& [pm, pc] : pol_monomial_product(x.mu(), {0, m.s, m.t}, {-m.r, 0, 0})) out.add(pm, pre * pc);
  }
  return out;
}

ExactScalar pol_counit(const PolElement& x) {
  ExactScalar v;
  for (const auto& [m, c] : x.terms())
    if (m.s == 0 && m.t == 0) v += c;
  return v;
}

PolTensor pol_comultiply(const PolElement& x) {
  PolTensor t;
  t.tags = {x.mu(), x.mu()};
  for (const auto& [m, c] : x.terms()) add_terms(t.terms, monomial_coproduct(x.mu(), m), c);
  return t;
}

PolTensor pol_comultiply_leg(const PolTensor& t, std::size_t leg) {
  if (leg >= t.legs()) throw std::out_of_range("pol_comultiply_leg: leg index");
  PolTensor out;
  out.tags = t.tags;
  out.tags.insert(out.tags.begin() + static_cast<long>(leg), t.tags[leg]);
  for (const auto& [key, c] : t.terms)
    for (const auto& [pair, pc] : monomial_coproduct(t.tags[leg], key[leg])) {
      auto k2 = key;
      k2[leg] = pair[0];
      k2.insert(k2.begin() + static_cast<long>(leg) + 1, pair[1]);
      add_term(out.terms, k2, c * pc);
    }
  return out;
}

PolTensor pol_tensor_multiply(const PolTensor& a, const PolTensor& b) {
  if (a.tags != b.tags) throw std::invalid_argument("pol_tensor_multiply: leg tags differ");
  PolTensor out;
  out.tags = a.tags;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      Terms<std::vector<PolMonomial>> partial;
      partial[{}] = ca * cb;
      for (std::size_t leg = 0; leg < a.legs(); ++leg) {
        Terms<std::vector<PolMonomial>> next;
        auto prod = pol_monomial_product(a.tags[leg], ka[leg], kb[leg]);
        for (const auto& [pk, pc] : partial)
          for (const auto& [m, mc] : prod) {
            auto key = pk;
            key.push_back(m);
            add_term(next, key, pc * mc);
          }
        partial = std::move(next);
      }
      add_terms(out.terms, partial);
    }
  return out;
}

}  // namespace qtorsor
