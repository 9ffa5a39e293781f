#include "qtorsor/qspecial.hpp"

namespace qtorsor {

ExactScalar lambda_exact() {
  ExactScalar q = q_exact();
  return (q - q.inverse()).inverse();
}

ExactScalar qsq_poch(int n) {
  ExactScalar q2 = ExactScalar::q_pow(2);
  return qpoch(q2, q2, n);
}

ExactScalar gauss_g(int n) {
  if (n < 0) throw std::domain_error("gauss_g: n must be nonnegative");
  ExactScalar one_minus_q2 = ExactScalar(1) - ExactScalar::q_pow(2);
  ExactScalar den = ExactScalar::s_pow(n * (n - 1)) * one_minus_q2.pow(n);
  return qsq_poch(n) / den;
}

}  // namespace qtorsor
