#include "qtorsor/gauss_rational.hpp"

#include <stdexcept>

namespace qtorsor {

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussRational: division by zero");
  if (is_real()) return GaussRational(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussRational::str() const {
  if (is_real()) return re_.get_str();
  std::string out = "(";
  if (sgn(re_) != 0) {
    out += re_.get_str();
    if (sgn(im_) > 0) out += "+";
  }
  if (im_ == 1) {
    out += "i";
  } else if (im_ == -1) {
    out += "-i";
  } else {
    out += im_.get_str() + "*i";
  }
  return out + ")";
}

}  // namespace qtorsor
