#include <algorithm>
#include <cmath>

#include "qtorsor/pol.hpp"
#include "series_ops.hpp"
#include "suites_numeric.hpp"

namespace qtorsor {

using detail::assemble_g;
using detail::numeric_report;
using detail::SpMat;

namespace {

template <class T>
double to_d(const T& v) {
  return static_cast<double>(v);
}

/// Block (s, s') of size d x d.
template <class T>
SparseOperator<T> block(const SpMat<T>& m, const TruncSpace& sp, int s, int s2) {
  const int d = sp.dim();
  return {sp, sp, SpMat<T>(m.block(s * d, s2 * d, d, d))};
}

/// I (x) x on H0+ (x) l2(0..S) from the Podles matrix of x.
template <class T>
SpMat<T> lift_podles(const SparseOperator<T>& x, int dz, int S) {
  std::vector<Eigen::Triplet<T>> trip;
  for (int j = 0; j < x.m.outerSize() && j <= S; ++j)
    for (typename SpMat<T>::InnerIterator it(x.m, j); it; ++it) {
      if (it.row() > S) continue;
      for (int i = 0; i < dz; ++i) trip.emplace_back(static_cast<int>(it.row()) * dz + i, j * dz + i, it.value());
    }
  SpMat<T> out(dz * (S + 1), dz * (S + 1));
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

/// (id (x) theta) Delta(x~) on H+ (x) l2(N), block (s, s') = sum c m1 <e_s, theta(m2) e_s'>.
template <class T>
SpMat<T> theta_coproduct(OperatorModel<T>& om, const PolElement& x) {
  const int dp = om.hp().dim(), np = om.pd().dim();
  using std::sqrt;
  const T s = sqrt(om.q());
  SpMat<T> out(dp * np, dp * np);
  for (const auto& [legs, c] : pol_comultiply(x).terms) {
    const T cv = c.template eval<T>(s).re;
    const auto& left = om.pol_monomial(legs[0]).m;
    const auto& right = om.theta_monomial(legs[1]).m;
    std::vector<Eigen::Triplet<T>> trip;
    for (int b = 0; b < right.outerSize(); ++b)
      for (typename SpMat<T>::InnerIterator rt(right, b); rt; ++rt)
        for (int j = 0; j < left.outerSize(); ++j)
          for (typename SpMat<T>::InnerIterator lt(left, j); lt; ++lt)
            trip.emplace_back(static_cast<int>(rt.row()) * dp + static_cast<int>(lt.row()), b * dp + j,
                              cv * rt.value() * lt.value());
    SpMat<T> term(dp * np, dp * np);
    term.setFromTriplets(trip.begin(), trip.end());
    out += term;
  }
  return out;
}

template <class T>
VerifyReport alpha_impl(const SuiteContext& ctx, const QPoint& q) {
  using Op = SparseOperator<T>;
  OperatorModel<T> om(q, ctx.trunc);
  const int S = std::min(ctx.unitarity_terms, ctx.trunc.N - 1), smax = 3;
  const int dz = om.hz().dim();
  const SpMat<T> g = assemble_g(om, S);
  const SpMat<T> gt = g.transpose();
  const ExactScalar qe = ExactScalar::q_pow(1);
  const PolElement a = PolElement::generator(Sign::Plus, PolGen::A);
  const PolElement bs = PolElement::generator(Sign::Plus, PolGen::Bstar);
  const PolElement b = PolElement::generator(Sign::Plus, PolGen::B);
  struct Case {
    const char* name;
    const Op* podles;
    PolElement tilde;
  };
  const std::vector<Case> cases{{"Z", &om.gen("Z"), bs * b}, {"X", &om.gen("X"), qe * (bs * a)}};
  const InteriorMask mask{0, smax + 2};
  NamedValues details{{"t_terms", S}};
  T worst(0);
  for (const auto& cs : cases) {
    SpMat<T> lhs = gt * lift_podles<T>(*cs.podles, dz, S) * g;
    SpMat<T> rhs = theta_coproduct(om, cs.tilde);
    T d(0);
    for (int s = 0; s <= smax; ++s)
      for (int s2 = 0; s2 <= smax; ++s2) d = std::max(d, masked_defect(block<T>(lhs, om.hp(), s, s2), block<T>(rhs, om.hp(), s, s2), mask));
    details.emplace_back(cs.name, to_d(d));
    worst = std::max(worst, d);
  }
  // e_00 as the limit of Z^n: ||alpha(Z^n) - alpha(e_00)|| <= q^{2n}
  const double q2 = q.q() * q.q();
  const int n = std::clamp(static_cast<int>(std::ceil(std::log(1e-10) / std::log(q2))), 1, ctx.trunc.N - smax - 2);
  SpMat<T> zt = theta_coproduct(om, cases[0].tilde);
  SpMat<T> power = zt;
  for (int j = 1; j < n; ++j) power = SpMat<T>((zt * power).pruned());
  T d00(0);
  const InteriorMask low{0, ctx.trunc.N - 1 - smax};
  for (int s = 0; s <= smax; ++s)
    for (int s2 = 0; s2 <= smax; ++s2) {
      Op direct = om.gmatrix(0, s).adjoint() * om.gmatrix(0, s2);
      d00 = std::max(d00, masked_defect(direct, block<T>(power, om.hp(), s, s2), low));
    }
  const T allowance = pow_int(T(q2), n);
  T d00_net = std::max(T(0), d00 - allowance);
  details.insert(details.end(), {{"e00_power", n}, {"e00_raw", to_d(d00)}, {"e00_allowance", to_d(allowance)},
                                 {"e00_net", to_d(d00_net)}});
  worst = std::max(worst, d00_net);
  return numeric_report("alpha", q, ctx, to_d(worst), 1e-8,
                        "max column 2-norm of G^dag (1 (x) x) G - (id (x) theta) Delta(x~) on blocks s,s' <= 3", details);
}

}  // namespace

VerifyReport suite_alpha(const SuiteContext& ctx, const QPoint& q) {
  if (ctx.precision == "mp50") return alpha_impl<mp50>(ctx, q);
  return alpha_impl<double>(ctx, q);
}

}  // namespace qtorsor
