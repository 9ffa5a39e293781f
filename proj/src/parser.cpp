#include "qtorsor/parser.hpp"

#include <cctype>
#include <optional>

namespace qtorsor {

namespace {

struct ScalarAlgebra {
  using Element = ExactScalar;
  Element scalar(const ExactScalar& c) const { return c; }
  std::optional<Element> identifier(const std::string&) const { return std::nullopt; }
  std::optional<ExactScalar> as_scalar(const Element& x) const { return x; }
  std::optional<Element> invert_monomial(const Element&) const { return std::nullopt; }
};

struct UqAlgebra {
  using Element = UqElement;
  SignPair tag;
  Element scalar(const ExactScalar& c) const { return UqElement::scalar(tag, c); }
  std::optional<Element> identifier(const std::string& id) const {
    if (id == "K") return UqElement::generator(tag, UqGen::K);
    if (id == "Kinv") return UqElement::generator(tag, UqGen::Kinv);
    if (id == "E") return UqElement::generator(tag, UqGen::E);
    if (id == "F") return UqElement::generator(tag, UqGen::F);
    return std::nullopt;
  }
  std::optional<ExactScalar> as_scalar(const Element& x) const {
    if (x.is_zero()) return ExactScalar();
    if (x.terms().size() == 1 && x.terms().begin()->first == UqMonomial{}) return x.terms().begin()->second;
    return std::nullopt;
  }
  std::optional<Element> invert_monomial(const Element& x) const {
    if (x.terms().size() != 1) return std::nullopt;
    const auto& [m, c] = *x.terms().begin();
    if (m.n || m.l) return std::nullopt;
    return UqElement::monomial(tag, {-m.m, 0, 0}, c.inverse());
  }
};

struct PolAlgebra {
  using Element = PolElement;
  Sign mu;
  Element scalar(const ExactScalar& c) const { return PolElement::scalar(mu, c); }
  std::optional<Element> identifier(const std::string& id) const {
    if (id == "a") return PolElement::generator(mu, PolGen::A);
    if (id == "astar") return PolElement::generator(mu, PolGen::Astar);
    if (id == "b") return PolElement::generator(mu, PolGen::B);
    if (id == "bstar") return PolElement::generator(mu, PolGen::Bstar);
    return std::nullopt;
  }
  std::optional<ExactScalar> as_scalar(const Element& x) const {
    if (x.is_zero()) return ExactScalar();
    if (x.terms().size() == 1 && x.terms().begin()->first == PolMonomial{}) return x.terms().begin()->second;
    return std::nullopt;
  }
  std::optional<Element> invert_monomial(const Element& x) const {
    if (mu != Sign::Zero || x.terms().size() != 1) return std::nullopt;
    const auto& [m, c] = *x.terms().begin();
    if (m.s || m.t) return std::nullopt;
    return PolElement::monomial(mu, {-m.r, 0, 0}, c.inverse());
  }
};

template <class Algebra>
class Parser {
 public:
  using Element = typename Algebra::Element;
  Parser(const std::string& text, Algebra alg) : text_(text), alg_(std::move(alg)) {}

  Element parse() {
    Element x = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("parse: " + what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Element expr() {
    Element x = term();
    for (;;) {
      if (eat('+')) x = x + term();
      else if (eat('-')) x = x - term();
      else return x;
    }
  }

  Element term() {
    Element x = unary();
    for (;;) {
      if (eat('*')) {
        x = x * unary();
      } else if (eat('/')) {
        auto d = alg_.as_scalar(unary());
        if (!d) fail("division by a non-scalar");
        if (d->is_zero()) fail("division by zero");
        x = x * d->inverse();
      } else {
        return x;
      }
    }
  }

  Element unary() {
    if (eat('-')) return unary() * ExactScalar(-1);
    return power();
  }

  Element power() {
    Element base = atom();
    if (!eat('^')) return base;
    bool negative = eat('-');
    skip();
    mpz_class e = digits();
    if (!e.fits_sint_p() || e > 100000) fail("exponent too large");
    int k = static_cast<int>(e.get_si());
    if (!negative) return pow(base, k);
    if (auto c = alg_.as_scalar(base)) {
      if (c->is_zero()) fail("zero to a negative power");
      return alg_.scalar(c->pow(-k));
    }
    auto inv = alg_.invert_monomial(base);
    if (!inv) fail("negative power of a non-invertible element");
    return pow(*inv, k);
  }

  Element pow(const Element& x, int k) {
    Element out = alg_.scalar(ExactScalar(1));
    for (int j = 0; j < k; ++j) out = out * x;
    return out;
  }

  mpz_class digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(text_.substr(start, pos_ - start), 10);
  }

  Element atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element x = expr();
      if (!eat(')')) fail("expected ')'");
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return alg_.scalar(ExactScalar(GaussRational(mpq_class(digits()))));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string id = text_.substr(start, pos_ - start);
      if (id == "s") return alg_.scalar(ExactScalar::s_pow(1));
      if (id == "q") return alg_.scalar(ExactScalar::q_pow(1));
      if (id == "i") return alg_.scalar(ExactScalar::imag_unit());
      if (auto g = alg_.identifier(id)) return *g;
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  Algebra alg_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactScalar parse_scalar(const std::string& text) { return Parser<ScalarAlgebra>(text, {}).parse(); }

UqElement parse_uq(const std::string& text, SignPair tag) { return Parser<UqAlgebra>(text, {tag}).parse(); }

PolElement parse_pol(const std::string& text, Sign mu) { return Parser<PolAlgebra>(text, {mu}).parse(); }

}  // namespace qtorsor
