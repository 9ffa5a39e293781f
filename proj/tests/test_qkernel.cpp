#include <cmath>
#include <random>

#include "doctest.h"
#include "qtorsor/exact_scalar.hpp"
#include "qtorsor/qspecial.hpp"

using namespace qtorsor;

namespace {

ExactScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3), val(-3, 3);
  auto poly = [&](bool nonzero) {
    std::vector<GaussRational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = GaussRational(mpq_class(coef(rng)), mpq_class(coef(rng) / 2));
    if (nonzero) c[0] = GaussRational(mpq_class(coef(rng) == 0 ? 1 : 2), mpq_class(1));
    return SPoly(c);
  };
  SPoly den = poly(true);
  return ExactScalar(poly(false), den, val(rng));
}

}  // namespace

TEST_CASE("exact scalar field axioms") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    ExactScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == ExactScalar());
    CHECK(a.conj().conj() == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == ExactScalar(1));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(11);
  for (double q : {0.3, 0.6}) {
    double s = std::sqrt(q);
    for (int trial = 0; trial < 60; ++trial) {
      ExactScalar a = random_scalar(rng), b = random_scalar(rng);
      auto ab = (a * b).eval_s(s);
      auto prod = a.eval_s(s) * b.eval_s(s);
      CHECK(std::abs(ab - prod) <= 1e-13 * std::max(1.0, std::abs(prod)));
      auto sum = (a + b).eval_s(s);
      CHECK(std::abs(sum - (a.eval_s(s) + b.eval_s(s))) <= 1e-12 * std::max(1.0, std::abs(sum)));
    }
  }
}

TEST_CASE("normal form is canonical") {
  ExactScalar q = q_exact();
  ExactScalar x = (ExactScalar(1) - q * q) / (ExactScalar(1) - q);
  CHECK(x == ExactScalar(1) + q);
  CHECK(x.is_laurent());
  CHECK(ExactScalar::s_pow(3) / ExactScalar::s_pow(5) == ExactScalar::s_pow(-2));
}

TEST_CASE("qpoch basics") {
  double q = 0.5;
  CHECK(qpoch(0.7, q, 0) == 1.0);
  CHECK(qpoch(q * q, q * q, 1) == doctest::Approx(1 - q * q));
  long double oracle = 1;
  for (int j = 1; j < 400; ++j) oracle *= 1 - std::pow(0.25L, j);
  CHECK(std::abs(qpoch_inf(q * q, q * q) - static_cast<double>(oracle)) < 1e-14);
  CHECK(std::abs(qpoch_inf(0.25, 0.25) - 0.68853753712) < 1e-10);
  CHECK_THROWS_AS(qpoch_inf(0.5, 1.0), ConvergenceError);
}

TEST_CASE("eq_exp converges to the infinite product") {
  CHECK(eq_exp(0.0, 0.4, 10) == 1.0);
  CHECK(eq_exp(0.3, 0.4, 2) == doctest::Approx(1 + 0.3 / 0.6));
  CHECK(std::abs(eq_exp(1.0, 0.5, 40) - qpoch_inf(-1.0, 0.5)) < 1e-12);
  for (double q : {0.2, 0.5, 0.8})
    for (double a : {-2.0, -0.7, 0.5, 2.0})
      CHECK(std::abs(eq_exp(a, q, 60) - qpoch_inf(-a, q)) < 1e-10);
}

TEST_CASE("qbinom") {
  ExactScalar q = q_exact();
  CHECK(qbinom(5, 0, q) == ExactScalar(1));
  CHECK(qbinom(2, 1, q) == ExactScalar(1) + q);
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n; ++m) CHECK(qbinom(n, m, q) == qbinom(n, n - m, q));
  // Pascal rule [n+1, m] = [n, m-1] + q^m [n, m]
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m)
      CHECK(qbinom(n + 1, m, q) == qbinom(n, m - 1, q) + q.pow(m) * qbinom(n, m, q));
  CHECK_THROWS_AS(qbinom(2, 3, q), std::domain_error);
}

TEST_CASE("gauss_g values and recurrence") {
  ExactScalar q = q_exact();
  CHECK(gauss_g(0) == ExactScalar(1));
  CHECK(gauss_g(1) == ExactScalar(1));
  CHECK(gauss_g(2) == (ExactScalar(1) + q * q) / q);
  ExactScalar one_q2 = ExactScalar(1) - q * q;
  for (int n = 0; n < 6; ++n)
    CHECK(gauss_g(n + 1) / gauss_g(n) == (ExactScalar(1) - q.pow(2 * n + 2)) / (q.pow(n) * one_q2));
}

TEST_CASE("wall polynomial") {
  double q = 0.4, a = 0.3, x = 0.7;
  CHECK(wall(0, x, a, q) == 1.0);
  CHECK(wall(1, 0.0, a, q) == 1.0);
  // term-by-term 2phi1(q^-2, 0; qa | q, qx)
  double t1 = (1 - 1 / (q * q)) / ((1 - q * a) * (1 - q)) * q * x;
  double t2 = (1 - 1 / (q * q)) * (1 - 1 / q) / ((1 - q * a) * (1 - q * q * a) * (1 - q) * (1 - q * q)) * q * q * x * x;
  CHECK(wall(2, x, a, q) == doctest::Approx(1 + t1 + t2).epsilon(1e-14));
  mpq_class qe(2, 5), ae(3, 10), xe(1);
  mpq_class p1 = wall(1, xe, ae, qe);
  CHECK(p1 == mpq_class(1) - xe / (mpq_class(1) - qe * ae));
  CHECK_THROWS_AS(wall(2, 1.0, 1.0 / q, q), std::domain_error);
}

TEST_CASE("evaluation points parse as decimals") {
  CHECK(QPoint("0.45").q_exact() == mpq_class(9, 20));
  CHECK(QPoint("0.09").q_exact() == mpq_class(9, 100));
  CHECK(QPoint(0.3).q() == doctest::Approx(0.3).epsilon(1e-16));
  CHECK_THROWS_AS(QPoint("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(QPoint("0.4.5"), std::invalid_argument);
}
