#include "qtorsor/pairing.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "qtorsor/qspecial.hpp"

namespace qtorsor {

namespace {

ExactScalar q_pow(int e) { return ExactScalar::q_pow(e); }

ExactScalar gauss_g_cached(int n) {
  thread_local std::vector<ExactScalar> cache;
  while (static_cast<int>(cache.size()) <= n) cache.push_back(gauss_g(static_cast<int>(cache.size())));
  return cache[static_cast<std::size_t>(n)];
}

const Terms<std::vector<UqMonomial>>& cached_coproduct(SignPair tag, Sign ups, const UqMonomial& u) {
  thread_local std::map<std::tuple<SignPair, Sign, UqMonomial>, Terms<std::vector<UqMonomial>>> cache;
  auto key = std::make_tuple(tag, ups, u);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  UqTensor t = uq_comultiply(UqElement::monomial(tag, u), ups);
  return cache.emplace(key, std::move(t.terms)).first->second;
}

ExactScalar generator_table(UqGen h, PolGen g) {
  switch (h) {
    case UqGen::K:
      if (g == PolGen::A) return ExactScalar::s_pow(-1);
      if (g == PolGen::Astar) return ExactScalar::s_pow(1);
      return {};
    case UqGen::Kinv:
      if (g == PolGen::A) return ExactScalar::s_pow(1);
      if (g == PolGen::Astar) return ExactScalar::s_pow(-1);
      return {};
    case UqGen::E: return g == PolGen::B ? ExactScalar(1) : ExactScalar();
    case UqGen::F: return g == PolGen::Bstar ? -q_pow(-1) : ExactScalar();
  }
  return {};
}

ExactScalar generator_counit(PolGen g) {
  return (g == PolGen::A || g == PolGen::Astar) ? ExactScalar(1) : ExactScalar();
}

// Leftmost generator of a PBW monomial and the remaining monomial.
std::pair<UqGen, UqMonomial> peel(const UqMonomial& u) {
  if (u.m > 0) return {UqGen::K, {u.m - 1, u.n, u.l}};
  if (u.m < 0) return {UqGen::Kinv, {u.m + 1, u.n, u.l}};
  if (u.n > 0) return {UqGen::E, {0, u.n - 1, u.l}};
  return {UqGen::F, {0, 0, u.l - 1}};
}

PolMonomial pol_rest(const PolMonomial& p) {
  if (p.r > 0) return {p.r - 1, p.s, p.t};
  if (p.r < 0) return {p.r + 1, p.s, p.t};
  if (p.s > 0) return {0, p.s - 1, p.t};
  return {0, 0, p.t - 1};
}

ExactScalar pair_with_generator(Sign mu, const UqMonomial& u, PolGen g) {
  if (u == UqMonomial{}) return generator_counit(g);
  thread_local std::map<std::tuple<Sign, UqMonomial, PolGen>, ExactScalar> cache;
  auto key = std::make_tuple(mu, u, g);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto [h, rest] = peel(u);
  ExactScalar v;
  for (const auto& img : pol_generator_coproduct(mu, g)) {
    ExactScalar first = generator_table(h, img.left);
    if (first.is_zero()) continue;
    ExactScalar second = pair_with_generator(mu, rest, img.right);
    if (!second.is_zero()) v += img.c * first * second;
  }
  cache.emplace(key, v);
  return v;
}

bool is_one(const PolMonomial& p) { return p.r == 0 && p.s == 0 && p.t == 0; }

}  // namespace

ExactScalar pair_closed(Sign mu, const UqMonomial& u, const PolMonomial& p) {
  if (mu == Sign::Plus && p.r < 0) return pair_oracle(mu, u, p);
  if (p.s != u.n || p.t != u.l) return {};
  ExactScalar v = ExactScalar::s_pow(u.m * (-p.r + p.s - p.t) + p.r * (u.n + u.l));
  v *= gauss_g_cached(u.n) * gauss_g_cached(u.l);
  if (p.t) v *= (-q_pow(1)).pow(-p.t);
  return v;
}

ExactScalar pair_oracle(Sign mu, const UqMonomial& u, const PolMonomial& p) {
  if (is_one(p)) return (u.n == 0 && u.l == 0) ? ExactScalar(1) : ExactScalar();
  if (u == UqMonomial{}) return (p.s == 0 && p.t == 0) ? ExactScalar(1) : ExactScalar();
  thread_local std::map<std::tuple<Sign, UqMonomial, PolMonomial>, ExactScalar> cache;
  auto key = std::make_tuple(mu, u, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  PolGen g = pol_monomial_word(p).front();
  PolMonomial rest = pol_rest(p);
  SignPair tag{mu, mu};
  ExactScalar v;
  for (const auto& [legs, c] : cached_coproduct(tag, mu, u)) {
    ExactScalar first = pair_with_generator(mu, legs[0], g);
    if (first.is_zero()) continue;
    ExactScalar second = pair_oracle(mu, legs[1], rest);
    if (!second.is_zero()) v += c * first * second;
  }
  cache.emplace(key, v);
  return v;
}

ExactScalar pair(const UqElement& u, const PolElement& p) {
  if (!u.tag().diagonal() || u.tag().mu != p.mu()) throw std::invalid_argument("pair: tag mismatch");
  ExactScalar v;
  for (const auto& [um, uc] : u.terms())
    for (const auto& [pm, pc] : p.terms()) {
      ExactScalar x = pair_closed(p.mu(), um, pm);
      if (!x.is_zero()) v += uc * pc * x;
    }
  return v;
}

ExactScalar pair_oracle(const UqElement& u, const PolElement& p) {
  if (!u.tag().diagonal() || u.tag().mu != p.mu()) throw std::invalid_argument("pair_oracle: tag mismatch");
  ExactScalar v;
  for (const auto& [um, uc] : u.terms())
    for (const auto& [pm, pc] : p.terms()) {
      ExactScalar x = pair_oracle(p.mu(), um, pm);
      if (!x.is_zero()) v += uc * pc * x;
    }
  return v;
}

ExactScalar pair_theta(const UqElement& w) {
  if (w.tag().diagonal()) throw std::invalid_argument("pair_theta: expects an off-diagonal tag");
  ExactScalar v;
  for (const auto& [mono, c] : w.terms())
    if (mono.n == 0 && mono.l == 0) v += c;
  return v;
}

namespace {

ExactScalar theta_star_monomial(SignPair tag, const UqMonomial& mono) {
  thread_local std::map<std::pair<SignPair, UqMonomial>, ExactScalar> cache;
  auto key = std::make_pair(tag, mono);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  ExactScalar v = pair_theta(uq_star(uq_antipode(UqElement::monomial(tag, mono)))).conj();
  cache.emplace(key, v);
  return v;
}

}  // namespace

ExactScalar pair_theta_star(const UqElement& w) {
  if (w.tag().diagonal()) throw std::invalid_argument("pair_theta_star: expects an off-diagonal tag");
  ExactScalar v;
  for (const auto& [mono, c] : w.terms()) v += c * theta_star_monomial(w.tag(), mono);
  return v;
}

// ---------------------------------------------------------------- functionals

ExactScalar Functional::operator()(const UqElement& x) const {
  if (x.tag() != tag) throw std::invalid_argument("functional " + name + ": tag mismatch");
  ExactScalar v;
  for (const auto& [mono, c] : x.terms()) v += c * value(mono);
  return v;
}

Functional pol_functional(const PolElement& p) {
  SignPair tag{p.mu(), p.mu()};
  return {tag,
          [p](const UqMonomial& u) {
            ExactScalar v;
            for (const auto& [pm, pc] : p.terms()) {
              ExactScalar x = pair_closed(p.mu(), u, pm);
              if (!x.is_zero()) v += pc * x;
            }
            return v;
          },
          p.str()};
}

Functional theta_functional(SignPair tag) {
  if (tag.diagonal()) throw std::invalid_argument("theta_functional: off-diagonal tag required");
  return {tag, [](const UqMonomial& u) { return (u.n == 0 && u.l == 0) ? ExactScalar(1) : ExactScalar(); },
          "theta_" + tag_name(tag)};
}

Functional theta_star_functional(SignPair tag) {
  if (tag.diagonal()) throw std::invalid_argument("theta_star_functional: off-diagonal tag required");
  return {tag, [tag](const UqMonomial& u) { return theta_star_monomial(tag, u); },
          "theta_" + tag_name(tag.swapped()) + "^*"};
}

Functional counit_functional(SignPair tag) {
  return {tag,
          [tag](const UqMonomial& u) {
            return (tag.diagonal() && u.n == 0 && u.l == 0) ? ExactScalar(1) : ExactScalar();
          },
          "eps"};
}

Functional star_functional(const Functional& f) {
  SignPair tag = f.tag.swapped();
  return {tag,
          [f, tag](const UqMonomial& u) { return f(uq_star(uq_antipode(UqElement::monomial(tag, u)))).conj(); },
          "(" + f.name + ")^*"};
}

Functional antipode_functional(const Functional& f) {
  SignPair tag = f.tag.swapped();
  return {tag, [f, tag](const UqMonomial& u) { return f(uq_antipode(UqElement::monomial(tag, u))); },
          "S(" + f.name + ")"};
}

ExactScalar evaluate_word(const std::vector<Functional>& word, const UqElement& x) {
  if (word.empty()) throw std::invalid_argument("evaluate_word: empty word");
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i].tag.nu != word[i + 1].tag.mu) throw std::invalid_argument("evaluate_word: tags do not chain");
  if (x.tag() != SignPair{word.front().tag.mu, word.back().tag.nu})
    throw std::invalid_argument("evaluate_word: element tag does not match the word");
  UqTensor t;
  t.tags = {x.tag()};
  for (const auto& [mono, c] : x.terms()) t.terms[{mono}] = c;
  for (std::size_t i = 1; i < word.size(); ++i) t = uq_comultiply_leg(t, i - 1, word[i].tag.mu);
  ExactScalar v;
  for (const auto& [legs, c] : t.terms) {
    ExactScalar prod = c;
    for (std::size_t i = 0; i < word.size() && !prod.is_zero(); ++i) prod *= word[i].value(legs[i]);
    v += prod;
  }
  return v;
}

ExactScalar FunctionalSum::operator()(const UqElement& x) const {
  ExactScalar v;
  for (const auto& [c, w] : words) v += c * evaluate_word(w, x);
  return v;
}

}  // namespace qtorsor
