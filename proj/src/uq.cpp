#include "qtorsor/uq.hpp"

#include <stdexcept>

#include "qtorsor/qspecial.hpp"

namespace qtorsor {

namespace {

const ExactScalar& lambda() {
  static const ExactScalar v = lambda_exact();
  return v;
}

ExactScalar q_pow(int e) { return ExactScalar::q_pow(e); }

// sum_{j<l} q^{2 j sign}
ExactScalar geometric(int l, int sign) {
  ExactScalar sum;
  for (int j = 0; j < l; ++j) sum += q_pow(2 * j * sign);
  return sum;
}

void check_same_tag(SignPair a, SignPair b) {
  if (a != b) throw std::invalid_argument("U_q: tag mismatch " + tag_name(a) + " vs " + tag_name(b));
}

// Right multiplication of c * mono by a single generator, accumulated into out.
void rmul_gen(SignPair tag, const UqMonomial& a, UqGen g, const ExactScalar& c, Terms<UqMonomial>& out) {
  switch (g) {
    case UqGen::K:
      add_term(out, {a.m + 1, a.n, a.l}, c * q_pow(a.l - a.n));
      return;
    case UqGen::Kinv:
      add_term(out, {a.m - 1, a.n, a.l}, c * q_pow(a.n - a.l));
      return;
    case UqGen::F:
      add_term(out, {a.m, a.n, a.l + 1}, c);
      return;
    case UqGen::E:
      add_term(out, {a.m, a.n + 1, a.l}, c);
      if (a.l == 0) return;
      if (tag.mu == Sign::Plus)
        add_term(out, {a.m + 2, a.n, a.l - 1}, -c * lambda() * geometric(a.l, 1) * q_pow(-2 * a.n));
      if (tag.nu == Sign::Plus)
        add_term(out, {a.m - 2, a.n, a.l - 1}, c * lambda() * geometric(a.l, -1) * q_pow(2 * a.n));
      return;
  }
}

void rmul_gen_all(SignPair tag, Terms<UqMonomial>& terms, UqGen g) {
  Terms<UqMonomial> out;
  for (const auto& [mono, c] : terms) rmul_gen(tag, mono, g, c, out);
  terms = std::move(out);
}

std::string power_str(const char* name, int e) {
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

std::string coef_str(const ExactScalar& c) {
  std::string s = c.str();
  bool simple = c.is_laurent() && c.num().coeffs().size() == 1 && c.num().coeffs()[0].is_atomic();
  return simple ? s : "(" + s + ")";
}

struct GenImage {
  UqGen left;
  UqGen right;
};

std::vector<GenImage> coproduct_image(UqGen g) {
  switch (g) {
    case UqGen::K: return {{UqGen::K, UqGen::K}};
    case UqGen::Kinv: return {{UqGen::Kinv, UqGen::Kinv}};
    case UqGen::E: return {{UqGen::E, UqGen::K}, {UqGen::Kinv, UqGen::E}};
    case UqGen::F: return {{UqGen::F, UqGen::K}, {UqGen::Kinv, UqGen::F}};
  }
  return {};
}

// Multiply the two-leg tensor (tags t0, t1) on the right by Delta(g).
void tensor_rmul(SignPair t0, SignPair t1, Terms<std::vector<UqMonomial>>& terms, UqGen g) {
  Terms<std::vector<UqMonomial>> out;
  auto images = coproduct_image(g);
  for (const auto& [key, c] : terms) {
    for (const auto& img : images) {
      Terms<UqMonomial> left, right;
      rmul_gen(t0, key[0], img.left, ExactScalar(1), left);
      rmul_gen(t1, key[1], img.right, ExactScalar(1), right);
      for (const auto& [lm, lc] : left)
        for (const auto& [rm, rc] : right) add_term(out, {lm, rm}, c * lc * rc);
    }
  }
  terms = std::move(out);
}

Terms<std::vector<UqMonomial>> monomial_coproduct(SignPair tag, Sign ups, const UqMonomial& x) {
  SignPair t0{tag.mu, ups}, t1{ups, tag.nu};
  Terms<std::vector<UqMonomial>> terms;
  terms[{UqMonomial{x.m, 0, 0}, UqMonomial{x.m, 0, 0}}] = ExactScalar(1);
  for (int k = 0; k < x.n; ++k) tensor_rmul(t0, t1, terms, UqGen::E);
  for (int k = 0; k < x.l; ++k) tensor_rmul(t0, t1, terms, UqGen::F);
  return terms;
}

}  // namespace

// ---------------------------------------------------------------- UqElement

UqElement UqElement::scalar(SignPair tag, const ExactScalar& c) { return monomial(tag, {}, c); }

UqElement UqElement::monomial(SignPair tag, UqMonomial mono, const ExactScalar& c) {
  UqElement x(tag);
  x.add(mono, c);
  return x;
}

UqElement UqElement::generator(SignPair tag, UqGen g) {
  switch (g) {
    case UqGen::K: return monomial(tag, {1, 0, 0});
    case UqGen::Kinv: return monomial(tag, {-1, 0, 0});
    case UqGen::E: return monomial(tag, {0, 1, 0});
    case UqGen::F: return monomial(tag, {0, 0, 1});
  }
  return UqElement(tag);
}

int UqElement::degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

ExactScalar UqElement::coefficient(const UqMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? ExactScalar() : it->second;
}

UqElement& UqElement::operator+=(const UqElement& o) {
  check_same_tag(tag_, o.tag_);
  add_terms(terms_, o.terms_);
  return *this;
}

UqElement& UqElement::operator-=(const UqElement& o) {
  check_same_tag(tag_, o.tag_);
  add_terms(terms_, o.terms_, ExactScalar(-1));
  return *this;
}

UqElement& UqElement::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, v] : terms_) v *= c;
  return *this;
}

UqElement operator*(const UqElement& a, const UqElement& b) { return uq_multiply(a, b); }

UqElement UqElement::pow(int e) const {
  if (e < 0) throw std::domain_error("UqElement::pow: negative exponent");
  UqElement result = one(tag_);
  for (int k = 0; k < e; ++k) result = result * *this;
  return result;
}

std::string UqElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> factors;
    if (!c.is_one() || (mono.m == 0 && mono.n == 0 && mono.l == 0)) factors.push_back(coef_str(c));
    if (mono.m > 0) factors.push_back(power_str("K", mono.m));
    if (mono.m < 0) factors.push_back(power_str("Kinv", -mono.m));
    if (mono.n > 0) factors.push_back(power_str("E", mono.n));
    if (mono.l > 0) factors.push_back(power_str("F", mono.l));
    for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
  }
  return out;
}

// ---------------------------------------------------------------- algebra maps

Terms<UqMonomial> uq_monomial_product(SignPair tag, const UqMonomial& a, const UqMonomial& b) {
  Terms<UqMonomial> terms;
  if (b.m != 0) {
    terms[{a.m + b.m, a.n, a.l}] = q_pow(b.m * (a.l - a.n));
  } else {
    terms[a] = ExactScalar(1);
  }
  for (int k = 0; k < b.n; ++k) rmul_gen_all(tag, terms, UqGen::E);
  if (b.l > 0) {
    Terms<UqMonomial> shifted;
    for (const auto& [mono, c] : terms) shifted[{mono.m, mono.n, mono.l + b.l}] = c;
    terms = std::move(shifted);
  }
  return terms;
}

UqElement uq_multiply(const UqElement& x, const UqElement& y) {
  check_same_tag(x.tag(), y.tag());
  UqElement out(x.tag());
  for (const auto& [ym, yc] : y.terms())
    for (const auto& [xm, xc] : x.terms()) {
      ExactScalar c = xc * yc;
      for (const auto& [mono, pc] : uq_monomial_product(x.tag(), xm, ym)) out.add(mono, c * pc);
    }
  return out;
}

UqElement uq_from_kfe(SignPair tag, int m, int l, int n) {
  return UqElement(tag, uq_monomial_product(tag, {m, 0, l}, {0, n, 0}));
}

UqElement uq_star(const UqElement& x) {
  UqElement out(x.tag());
  for (const auto& [mono, c] : x.terms()) {
    ExactScalar cc = c.conj();
    for (const auto& [r, rc] : uq_monomial_product(x.tag(), {0, mono.l, mono.n}, {mono.m, 0, 0}))
      out.add(r, cc * rc);
  }
  return out;
}

UqElement uq_antipode(const UqElement& x) {
  SignPair tag = x.tag().swapped();
  UqElement out(tag);
  for (const auto& [mono, c] : x.terms()) {
    ExactScalar pre = c * ExactScalar(-1).pow(mono.n + mono.l) * q_pow(mono.n - mono.l);
    UqElement fe = uq_from_kfe(tag, 0, mono.l, mono.n);
    for (const auto& [fm, fc] : fe.terms())
      for (const auto& [r, rc] : uq_monomial_product(tag, fm, {-mono.m, 0, 0})) out.add(r, pre * fc * rc);
  }
  return out;
}

CounitValue uq_counit(const UqElement& x) {
  if (!x.tag().diagonal()) return {ExactScalar(), true};
  ExactScalar v;
  for (const auto& [mono, c] : x.terms())
    if (mono.n == 0 && mono.l == 0) v += c;
  return {v, false};
}

UqTensor uq_comultiply(const UqElement& x, Sign upsilon) {
  UqTensor t;
  t.tags = {SignPair{x.tag().mu, upsilon}, SignPair{upsilon, x.tag().nu}};
  for (const auto& [mono, c] : x.terms())
    add_terms(t.terms, monomial_coproduct(x.tag(), upsilon, mono), c);
  return t;
}

UqTensor uq_comultiply_leg(const UqTensor& t, std::size_t leg, Sign upsilon) {
  if (leg >= t.legs()) throw std::out_of_range("uq_comultiply_leg: leg index");
  SignPair tag = t.tags[leg];
  UqTensor out;
  out.tags = t.tags;
  out.tags[leg] = SignPair{tag.mu, upsilon};
  out.tags.insert(out.tags.begin() + static_cast<long>(leg) + 1, SignPair{upsilon, tag.nu});
  for (const auto& [key, c] : t.terms) {
    for (const auto& [pair, pc] : monomial_coproduct(tag, upsilon, key[leg])) {
      std::vector<UqMonomial> k2 = key;
      k2[leg] = pair[0];
      k2.insert(k2.begin() + static_cast<long>(leg) + 1, pair[1]);
      add_term(out.terms, k2, c * pc);
    }
  }
  return out;
}

UqTensor uq_tensor_multiply(const UqTensor& a, const UqTensor& b) {
  if (a.tags != b.tags) throw std::invalid_argument("uq_tensor_multiply: leg tags differ");
  UqTensor out;
  out.tags = a.tags;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      Terms<std::vector<UqMonomial>> partial;
      partial[{}] = ca * cb;
      for (std::size_t leg = 0; leg < a.legs(); ++leg) {
        Terms<std::vector<UqMonomial>> next;
        auto prod = uq_monomial_product(a.tags[leg], ka[leg], kb[leg]);
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

UqElement uq_tensor_leg(const UqTensor& t) {
  if (t.legs() != 1) throw std::invalid_argument("uq_tensor_leg: expected a single leg");
  UqElement x(t.tags[0]);
  for (const auto& [key, c] : t.terms) x.add(key[0], c);
  return x;
}

// ---------------------------------------------------------------- Casimir

UqElement casimir(SignPair tag) {
  UqElement c = UqElement::monomial(tag, {0, 1, 1});
  ExactScalar l2 = lambda() * lambda();
  if (tag.mu == Sign::Plus) c.add({2, 0, 0}, l2 * q_pow(-1));
  if (tag.nu == Sign::Plus) c.add({-2, 0, 0}, l2 * q_pow(1));
  return c;
}

ExactScalar default_tau() { return q_pow(-1) * lambda() * lambda(); }

UqElement reduce_casimir(const UqElement& x, const ExactScalar& tau) {
  SignPair tag = x.tag();
  ExactScalar l2 = lambda() * lambda();
  Terms<UqMonomial> pending = x.terms();
  UqElement out(tag);
  while (!pending.empty()) {
    Terms<UqMonomial> next;
    for (const auto& [mono, c] : pending) {
      if (mono.n == 0 || mono.l == 0) {
        out.add(mono, c);
        continue;
      }
      int n1 = mono.n - 1, l1 = mono.l - 1;
      add_term(next, {mono.m, n1, l1}, c * tau);
      if (tag.mu == Sign::Plus) add_term(next, {mono.m + 2, n1, l1}, -c * l2 * q_pow(-1 - 2 * n1));
      if (tag.nu == Sign::Plus) add_term(next, {mono.m - 2, n1, l1}, -c * l2 * q_pow(1 + 2 * n1));
    }
    pending = std::move(next);
  }
  return out;
}

UqElement mu_action(const UqElement& x, const UqElement& y) {
  if (x.tag() != SignPair{Sign::Zero, Sign::Plus}) throw std::invalid_argument("mu_action: x must be in U_q(0,+)");
  if (y.tag() != SignPair{Sign::Plus, Sign::Plus}) throw std::invalid_argument("mu_action: y must be in U_q(+,+)");
  UqTensor dy = uq_comultiply(y, Sign::Zero);
  UqElement out(x.tag());
  for (const auto& [key, c] : dy.terms) {
    UqElement left = uq_antipode(UqElement::monomial(dy.tags[0], key[0]));
    UqElement right = UqElement::monomial(dy.tags[1], key[1]);
    out += (left * x * right) * c;
  }
  return out;
}

// ---------------------------------------------------------------- word rewriter

namespace {

int gen_rank(UqGen g) {
  switch (g) {
    case UqGen::K:
    case UqGen::Kinv: return 0;
    case UqGen::E: return 1;
    case UqGen::F: return 2;
  }
  return 0;
}

bool is_redex(UqGen a, UqGen b) {
  if (gen_rank(a) > gen_rank(b)) return true;
  return (a == UqGen::K && b == UqGen::Kinv) || (a == UqGen::Kinv && b == UqGen::K);
}

UqMonomial word_monomial(const std::vector<UqGen>& w) {
  UqMonomial m;
  for (UqGen g : w) {
    if (g == UqGen::K) ++m.m;
    if (g == UqGen::Kinv) --m.m;
    if (g == UqGen::E) ++m.n;
    if (g == UqGen::F) ++m.l;
  }
  return m;
}

}  // namespace

UqElement uq_word_normal_form(SignPair tag, const std::vector<UqGen>& word, RewriteStrategy strategy) {
  using Word = std::vector<UqGen>;
  Terms<Word> pending;
  pending[word] = ExactScalar(1);
  UqElement out(tag);
  while (!pending.empty()) {
    Terms<Word> next;
    for (const auto& [w, c] : pending) {
      long pos = -1;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (is_redex(w[i], w[i + 1])) {
          pos = static_cast<long>(i);
          if (strategy == RewriteStrategy::FirstRedex) break;
        }
      }
      if (pos < 0) {
        out.add(word_monomial(w), c);
        continue;
      }
      auto i = static_cast<std::size_t>(pos);
      UqGen a = w[i], b = w[i + 1];
      auto replace = [&](std::vector<UqGen> mid, const ExactScalar& f) {
        Word nw(w.begin(), w.begin() + pos);
        nw.insert(nw.end(), mid.begin(), mid.end());
        nw.insert(nw.end(), w.begin() + pos + 2, w.end());
        add_term(next, nw, c * f);
      };
      if (gen_rank(a) == 0) {  // K Kinv or Kinv K
        replace({}, ExactScalar(1));
      } else if (gen_rank(b) == 0) {
        bool kpos = b == UqGen::K;
        int e = a == UqGen::E ? (kpos ? -1 : 1) : (kpos ? 1 : -1);
        replace({b, a}, q_pow(e));
      } else {  // F E
        replace({UqGen::E, UqGen::F}, ExactScalar(1));
        if (tag.mu == Sign::Plus) replace({UqGen::K, UqGen::K}, -lambda());
        if (tag.nu == Sign::Plus) replace({UqGen::Kinv, UqGen::Kinv}, lambda());
      }
    }
    pending = std::move(next);
  }
  return out;
}

}  // namespace qtorsor
