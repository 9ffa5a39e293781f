#include <doctest.h>

#include "qtorsor/podles.hpp"
#include "qtorsor/qspecial.hpp"
#include "qtorsor/theta_rep.hpp"
#include "qtorsor/xmodule.hpp"
#include "test_support.hpp"

using namespace qtorsor;
using namespace qtorsor::testing;

namespace {

const SignPair kZP{Sign::Zero, Sign::Plus};

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("Theta is a *-representation") {
  const double q = 0.4;
  const int dim = 24, keep = 14;
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    UqElement x = random_uq(rng, kZP, 3), y = random_uq(rng, kZP, 3);
    Eigen::MatrixXcd tx = theta_matrix_d(x, dim, q), ty = theta_matrix_d(y, dim, q);
    Eigen::MatrixXcd txy = theta_matrix_d(x * y, dim, q);
    Eigen::MatrixXcd prod = tx * ty;
    double scale = 1 + max_abs(txy.topLeftCorner(keep, keep));
    CHECK(max_abs(txy.topLeftCorner(keep, keep) - prod.topLeftCorner(keep, keep)) / scale < 1e-11);
    Eigen::MatrixXcd ts = theta_matrix_d(uq_star(x), dim, q);
    CHECK(max_abs(ts.topLeftCorner(keep, keep) - tx.adjoint().topLeftCorner(keep, keep)) / scale < 1e-11);
  }
}

TEST_CASE("Casimir acts by the default scalar") {
  for (double q : {0.3, 0.7}) {
    Eigen::MatrixXcd c = theta_matrix_d(casimir(kZP), 20, q);
    std::complex<double> tau = default_tau().eval_s(std::sqrt(q));
    double lam = 1 / (q - 1 / q);
    CHECK(std::abs(tau - std::complex<double>(lam * lam / q)) < 1e-12);
    CHECK(max_abs(c - tau * Eigen::MatrixXcd::Identity(20, 20)) < 1e-10);
  }
}

TEST_CASE("Podles relations hold in the quotient") {
  for (const auto& rel : podles_relations()) {
    CAPTURE(rel.name);
    CHECK(podles_embed(rel.lhs_minus_rhs).terms().empty());
  }
  CHECK(podles_z_selfadjoint_defect().terms().empty());
  const double q = 0.55;
  Eigen::MatrixXcd z = theta_matrix_d(podles_image(PodlesGen::Z), 12, q);
  Eigen::MatrixXcd x = theta_matrix_d(podles_image(PodlesGen::X), 12, q);
  for (int k = 0; k < 12; ++k) {
    CHECK(std::abs(z(k, k) - std::pow(q, 2 * k)) < 1e-14);
    if (k > 0) CHECK(std::abs(x(k - 1, k) - std::pow(q, k) * std::sqrt(1 - std::pow(q, 2 * k))) < 1e-14);
  }
}

TEST_CASE("g_entry examples") {
  GEntry g00 = g_entry(0, 0);
  CHECK(g00.body == XElement::monomial({}));
  GEntry g01 = g_entry(0, 1);
  CHECK(g01.body == XElement::monomial({1, 1, 0}, qsq_poch(1).inverse()));
  CHECK(g01.sqrt_num_index == 1);
  CHECK(g01.sqrt_den_index == 0);
  GEntry g10 = g_entry(1, 0);
  CHECK(g10.body == XElement::monomial({1, 0, 1}, -ExactScalar::q_pow(1) / qsq_poch(1)));
  GEntry g11 = g_entry(1, 1);
  mpq_class q("2/5");
  mpq_class x("3/7");
  mpq_class body_at_x = 0;
  for (const auto& [m, c] : g11.body.terms()) {
    CHECK(m.r == 2);
    CHECK(m.s == m.t);
    Cplx<double> v = c.eval<double>(std::sqrt(0.4));
    mpq_class xk = 1;
    for (int k = 0; k < m.s; ++k) xk *= x;
    body_at_x += mpq_class(v.re) * xk;
  }
  double expect = wall<mpq_class>(1, x, mpq_class(1), q * q).get_d();
  CHECK(body_at_x.get_d() == doctest::Approx(expect).epsilon(1e-12));
  CHECK_THROWS_AS(g_entry(-1, 0), std::domain_error);
}

TEST_CASE("corepresentation entries pair to Theta matrix entries") {
  for (const char* qtext : {"0.3", "0.5"}) {
    mp50 q(qtext);
    mp50 s = sqrt(q);
    std::vector<UqElement> probes;
    for (int m = -2; m <= 2; ++m)
      for (int n = 0; n <= 3; ++n)
        for (int l = 0; n + l <= 3; ++l) probes.push_back(UqElement::monomial(kZP, {m, n, l}));
    for (int r = 0; r <= 3; ++r)
      for (int c = 0; c <= 3; ++c) {
        GEntry g = g_entry(r, c);
        mp50 root = g.sqrt_factor(q);
        for (const auto& y : probes) {
          SplitMatrix<mp50> th = theta_matrix<mp50>(y, 8, q);
          Cplx<mp50> v = pair_x(g.body, y).eval<mp50>(s);
          mp50 err = abs(v.re * root - th.re(r, c)) + abs(v.im * root - th.im(r, c));
          CAPTURE(qtext); CAPTURE(r); CAPTURE(c); CAPTURE(y.str());
          CHECK(static_cast<double>(err) < 1e-30);
        }
      }
  }
}
