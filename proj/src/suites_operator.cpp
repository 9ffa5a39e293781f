#include <algorithm>
#include <cmath>

#include "qtorsor/theta_rep.hpp"
#include "qtorsor/xmodule.hpp"
#include "suites_numeric.hpp"

namespace qtorsor {

using detail::kColumnNorm;
using detail::numeric_report;

namespace {

const SignPair kZP{Sign::Zero, Sign::Plus};

template <class T>
double to_d(const T& v) {
  return static_cast<double>(v);
}

}  // namespace

VerifyReport suite_theta_casimir(const SuiteContext& ctx, const QPoint& q) {
  const int dim = 20;
  Eigen::MatrixXcd c = theta_matrix_d(casimir(kZP), dim, q.q());
  std::complex<double> tau = q.eval(default_tau());
  Eigen::MatrixXcd d = c - tau * Eigen::MatrixXcd::Identity(dim, dim);
  double defect = d.cwiseAbs().maxCoeff();
  return numeric_report("theta-casimir", q, ctx, defect, 1e-12,
                        "max |Theta(C) - q^-1 lambda^2 I| entry on e_0..e_19",
                        {{"dim", dim}, {"tau", tau.real()}});
}

VerifyReport suite_propval(const SuiteContext& ctx, const QPoint& q) {
  const mp50 qm = gauss_real_to<mp50>(q.q_exact());
  const mp50 s = sqrt(qm);
  const int g = ctx.gmax, deg = ctx.symbolic_degree, kmax = ctx.symbolic_degree;
  const int dim = g + deg + 2;
  std::vector<std::pair<UqElement, SplitMatrix<mp50>>> probes;
  for (int m = -kmax; m <= kmax; ++m)
    for (int n = 0; n <= deg; ++n)
      for (int l = 0; n + l <= deg; ++l) {
        UqElement y = UqElement::monomial(kZP, {m, n, l});
        probes.emplace_back(y, theta_matrix<mp50>(y, dim, qm));
      }
  mp50 worst = 0;
  int entries = 0;
  for (int r = 0; r <= g; ++r)
    for (int c = 0; c <= g; ++c) {
      GEntry ge = g_entry(r, c);
      mp50 root = ge.sqrt_factor(qm);
      for (const auto& [y, th] : probes) {
        Cplx<mp50> v = pair_x(ge.body, y).eval<mp50>(s);
        mp50 err = abs(v.re * root - th.re(r, c)) + abs(v.im * root - th.im(r, c));
        worst = std::max(worst, err);
        ++entries;
      }
    }
  return numeric_report("propval", q, ctx, to_d(worst), 1e-11,
                        "max |<g_{r,s}, u> - <e_r, Theta(u) e_s>| in 50-digit arithmetic",
                        {{"gmax", g}, {"probe_degree", deg}, {"probe_k", kmax},
                         {"probes", static_cast<double>(probes.size())}, {"entries", entries}});
}

namespace {

template <class T>
VerifyReport lemcom1_impl(const SuiteContext& ctx, const QPoint& q) {
  OperatorModel<T> om(q, ctx.trunc);
  using Op = SparseOperator<T>;
  const InteriorMask mask{0, 6};
  const Op& L = om.gen("L");
  const Op& a = om.gen("a");
  const Op& as = om.gen("astar");
  const Op& v = om.gen("v0");
  const Op& vs = om.gen("v0star");
  const Op bsb = om.gen("bstar") * om.gen("b");
  const Op id = Op::identity(om.hp());
  T d1 = masked_defect(Op(L * as), Op(vs * L), mask);
  T d2 = masked_defect(Op(L * a), Op(v * Op(L * Op(id - bsb))), mask);
  // L a^n = v^n L (b^*b; q^-2)_n
  T d3(0);
  Op lhs = L, vn = Op::identity(om.hz()), poch = id;
  const T qinv2 = T(1) / (om.q() * om.q());
  for (int n = 1; n <= 4; ++n) {
    lhs = lhs * a;
    vn = v * vn;
    poch = poch * Op(id - pow_int(qinv2, n - 1) * bsb);
    T scale = masked_column_norm(lhs, mask);
    T d = masked_defect(lhs, Op(vn * Op(L * poch)), mask);
    d3 = std::max(d3, scale > T(1) ? d / scale : d);
  }
  double defect = to_d(std::max({d1, d2, d3}));
  return numeric_report("lemcom1", q, ctx, defect, 1e-12, kColumnNorm,
                        {{"L_astar", to_d(d1)}, {"L_a", to_d(d2)}, {"L_a_power_n4", to_d(d3)}});
}

}  // namespace

VerifyReport suite_lemcom1(const SuiteContext& ctx, const QPoint& q) {
  if (ctx.precision == "mp50") return lemcom1_impl<mp50>(ctx, q);
  return lemcom1_impl<double>(ctx, q);
}

}  // namespace qtorsor
