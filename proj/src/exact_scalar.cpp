#include "qtorsor/exact_scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qtorsor {

// ---------------------------------------------------------------- SPoly

SPoly::SPoly(GaussRational c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

SPoly::SPoly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { trim(); }

SPoly SPoly::monomial(int degree, GaussRational c) {
  SPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, GaussRational());
  p.c_.back() = std::move(c);
  return p;
}

void SPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int SPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return 0;
}

SPoly& SPoly::operator+=(const SPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k)
    if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
  trim();
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k)
    if (!o.c_[k].is_zero()) c_[k] -= o.c_[k];
  trim();
  return *this;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<GaussRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return SPoly(std::move(out));
}

SPoly SPoly::operator-() const {
  SPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

SPoly SPoly::scaled(const GaussRational& c) const {
  if (c.is_zero()) return {};
  SPoly p = *this;
  for (auto& x : p.c_) x *= c;
  return p;
}

SPoly SPoly::shifted_down(int k) const {
  if (k == 0) return *this;
  SPoly p;
  p.c_.assign(c_.begin() + k, c_.end());
  return p;
}

SPoly SPoly::conj() const {
  SPoly p = *this;
  for (auto& x : p.c_) x = x.conj();
  return p;
}

std::pair<SPoly, SPoly> SPoly::divmod(const SPoly& a, const SPoly& b) {
  if (b.is_zero()) throw std::domain_error("SPoly: division by zero polynomial");
  SPoly rem = a;
  if (a.degree() < b.degree()) return {SPoly(), rem};
  std::vector<GaussRational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  GaussRational inv_lead = b.lead().inverse();
  const bool monic = b.lead().is_one();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    GaussRational f = monic ? rem.lead() : rem.lead() * inv_lead;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      rem.c_[j + static_cast<std::size_t>(shift)] -= f * b.c_[j];
    }
    rem.c_.back() = GaussRational();  // exact cancellation of the leading term
    rem.trim();
    quot[static_cast<std::size_t>(shift)] = std::move(f);
  }
  return {SPoly(std::move(quot)), rem};
}

SPoly SPoly::exact_div(const SPoly& a, const SPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("SPoly::exact_div: nonzero remainder");
  return q;
}

SPoly SPoly::gcd(SPoly a, SPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    SPoly r = divmod(a, b).second;
    if (!r.is_zero()) r = r.scaled(r.lead().inverse());
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.lead().inverse());
}

std::string SPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const GaussRational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string coef;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    GaussRational mag = negative ? -c : c;
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += "s";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------- ExactScalar

ExactScalar::ExactScalar(long v) : num_(GaussRational(v)) {}

ExactScalar::ExactScalar(GaussRational c) : num_(std::move(c)) {}

ExactScalar::ExactScalar(SPoly num, SPoly den, int val)
    : num_(std::move(num)), den_(std::move(den)), val_(val) {
  if (den_.is_zero()) throw std::domain_error("ExactScalar: zero denominator");
  normalize();
}

ExactScalar ExactScalar::s_pow(int e) {
  ExactScalar x(1);
  x.val_ = e;
  return x;
}

ExactScalar ExactScalar::imag_unit() { return ExactScalar(GaussRational(0, 1)); }

void ExactScalar::normalize() {
  if (num_.is_zero()) {
    val_ = 0;
    den_ = SPoly(GaussRational(1));
    return;
  }
  int vn = num_.valuation();
  if (vn) {
    num_ = num_.shifted_down(vn);
    val_ += vn;
  }
  int vd = den_.valuation();
  if (vd) {
    den_ = den_.shifted_down(vd);
    val_ -= vd;
  }
  if (den_.degree() > 0 && num_.degree() >= 0) {
    SPoly g = SPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = SPoly::exact_div(num_, g);
      den_ = SPoly::exact_div(den_, g);
    }
  }
  if (!den_.lead().is_one()) {
    GaussRational inv = den_.lead().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

ExactScalar ExactScalar::conj() const {
  ExactScalar x = *this;
  x.num_ = num_.conj();
  x.den_ = den_.conj();
  return x;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("ExactScalar: inverse of zero");
  return ExactScalar(den_, num_, -val_);
}

ExactScalar ExactScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  ExactScalar result(1);
  ExactScalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar x = *this;
  x.num_ = -num_;
  return x;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int e = std::min(val_, o.val_);
  SPoly a = val_ > e ? num_ * SPoly::monomial(val_ - e) : num_;
  SPoly b = o.val_ > e ? o.num_ * SPoly::monomial(o.val_ - e) : o.num_;
  if (den_ == o.den_) {
    num_ = a + b;
  } else {
    SPoly g = SPoly::gcd(den_, o.den_);
    SPoly d1 = g.is_one() ? den_ : SPoly::exact_div(den_, g);
    SPoly d2 = g.is_one() ? o.den_ : SPoly::exact_div(o.den_, g);
    num_ = a * d2 + b * d1;
    den_ = d1 * o.den_;
  }
  val_ = e;
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = ExactScalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    val_ += o.val_;
    return *this;
  }
  SPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (d2.degree() > 0) {
    SPoly g = SPoly::gcd(n1, d2);
    if (g.degree() > 0) {
      n1 = SPoly::exact_div(n1, g);
      d2 = SPoly::exact_div(d2, g);
    }
  }
  if (d1.degree() > 0) {
    SPoly g = SPoly::gcd(n2, d1);
    if (g.degree() > 0) {
      n2 = SPoly::exact_div(n2, g);
      d1 = SPoly::exact_div(d1, g);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  val_ += o.val_;
  if (!den_.lead().is_one()) normalize();
  return *this;
}

std::complex<double> ExactScalar::eval_s(double s) const {
  Cplx<double> c = eval<double>(s);
  return {c.re, c.im};
}

std::string ExactScalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (val_ != 0) out = val_ == 1 ? "s" : "s^" + std::to_string(val_);
  bool num_atomic = num_.coeffs().size() == 1 && num_.coeffs()[0].is_atomic();
  if (!(num_.is_one() && !out.empty())) {
    std::string n = num_.str();
    if (!out.empty()) out += "*";
    out += num_atomic ? n : "(" + n + ")";
  }
  if (!den_.is_one()) out += "/(" + den_.str() + ")";
  return out;
}

// ---------------------------------------------------------------- QPoint

namespace {

mpq_class parse_decimal(const std::string& text) {
  std::string digits;
  int frac = -1;
  for (char ch : text) {
    if (ch == '.') {
      if (frac >= 0) throw std::invalid_argument("QPoint: malformed decimal '" + text + "'");
      frac = 0;
    } else if (ch >= '0' && ch <= '9') {
      digits += ch;
      if (frac >= 0) ++frac;
    } else {
      throw std::invalid_argument("QPoint: malformed decimal '" + text + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("QPoint: empty decimal");
  mpz_class num(digits, 10);
  mpz_class den = 1;
  for (int k = 0; k < std::max(frac, 0); ++k) den *= 10;
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

std::string decimal_text(double q) {
  std::ostringstream os;
  os.precision(17);
  os << q;
  return os.str();
}

}  // namespace

QPoint::QPoint(const std::string& decimal) : q_exact_(parse_decimal(decimal)), text_(decimal) {
  q_ = q_exact_.get_d();
  if (!(q_exact_ > 0 && q_exact_ < 1))
    throw std::invalid_argument("QPoint: q must satisfy 0 < q < 1, got " + decimal);
  s_ = std::sqrt(q_);
}

QPoint::QPoint(double q) : QPoint(decimal_text(q)) {}

}  // namespace qtorsor
