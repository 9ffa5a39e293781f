#include <algorithm>
#include <cmath>

#include "series_ops.hpp"
#include "suites_numeric.hpp"

namespace qtorsor {

using detail::numeric_report;
using detail::SeriesKit;

namespace {

template <class T>
double to_d(const T& v) {
  return static_cast<double>(v);
}

const char* kGraded = "max 2-norm of the defect on interior basis tensors, components of total n-grade <= P";

template <class T>
VerifyReport theocomu_impl(const SuiteContext& ctx, const QPoint& q) {
  using Vec = TensorVec<T>;
  OperatorModel<T> om(q, ctx.trunc);
  SeriesKit<T> kit{om, ctx.series_terms};
  const int P = ctx.series_terms, rmax = 3;
  const std::vector<TruncSpace> in{om.hp(), om.hp()}, out{om.hz(), om.hz()};
  T worst(0), worst_unnormalized(0);
  int inputs = 0;
  for (int r = 0; r <= rmax; ++r) {
    using std::sqrt;
    const T norm = sqrt(om.qsq_poch(r));
    for (int n1 = 0; n1 < ctx.trunc.N - r; ++n1)
      for (int n2 = 0; n2 < ctx.trunc.N - r; ++n2) {
        std::vector<int> key = SeriesKit<T>::key_of(in, {n1, n2});
        Vec x = basis_vector<T>(key);
        Vec lhs;
        for (int t = 0; t <= P; ++t) {
          if (2 * t + r > P) break;
          axpy(lhs, kit.apply_legs({&om.gmatrix(0, t), &om.gmatrix(t, r)}, x));
        }
        Vec y = x;
        for (int j = 0; j < r; ++j) y = kit.delta_b(false, 0, y);
        Vec rhs = kit.delta_vl(r, 0, y, P, -r);
        lhs = keep_grades_up_to(lhs, P, out, in, key);
        rhs = keep_grades_up_to(rhs, P, out, in, key);
        Vec scaled;
        axpy(scaled, lhs, norm);
        worst = std::max(worst, distance(scaled, rhs));
        worst_unnormalized = std::max(worst_unnormalized, distance(lhs, rhs));
        ++inputs;
      }
  }
  return numeric_report("theocomu", q, ctx, to_d(worst), 1e-8, kGraded,
                        {{"rmax", rmax}, {"P", P}, {"inputs", inputs},
                         {"series_tail_bound", kit.tail_bound()},
                         {"without_poch_normalization", to_d(worst_unnormalized)}});
}


/// (Delta (x) id) Delta(L) against (id (x) Delta) Delta(L) on e_{n1} (x) e_{n2} (x) e_{n3}.
template <class T>
VerifyReport coassociativity_impl(const SuiteContext& ctx, const QPoint& q) {
  using Vec = TensorVec<T>;
  OperatorModel<T> om(q, ctx.trunc);
  SeriesKit<T> kit{om, ctx.series_terms};
  const int P = ctx.series_terms;
  // Delta(b)^p raises one leg by at most P/2 on the surviving grades
  const int nmax = std::min(8, ctx.trunc.N - 1 - P / 2);
  const std::vector<TruncSpace> in{om.hp(), om.hp(), om.hp()}, out{om.hz(), om.hz(), om.hz()};
  const T mq = -om.q();
  T worst(0), scale(0);
  int inputs = 0;
  for (int n1 = 0; n1 <= nmax; ++n1)
    for (int n2 = 0; n2 <= nmax; ++n2)
      for (int n3 = 0; n3 <= nmax; ++n3) {
        std::vector<int> key = SeriesKit<T>::key_of(in, {n1, n2, n3});
        const Vec x = basis_vector<T>(key);
        Vec left, right;
        Vec yb = x, ybs = x;
        for (int p = 0; 2 * p <= P; ++p) {
          // sum_p c_p Delta(v^p L b^p) (x) v^p L (-q b^*)^p
          Vec l3 = kit.apply_one(om.vlb(p, 0, p), 2, yb);
          axpy(left, kit.delta_vl(p, 0, l3, P, -p), kit.coef(p) * pow_int(mq, p));
          // sum_p c_p v^p L b^p (x) Delta(v^p L (-q b^*)^p)
          Vec r1 = kit.apply_one(om.vlb(p, p, 0), 0, ybs);
          axpy(right, kit.delta_vl(p, 1, r1, P, -p), kit.coef(p) * pow_int(mq, p));
          yb = kit.delta_b(false, 0, yb);
          ybs = kit.delta_b(true, 1, ybs);
        }
        left = keep_grades_up_to(left, P, out, in, key);
        right = keep_grades_up_to(right, P, out, in, key);
        worst = std::max(worst, distance(left, right));
        scale = std::max(scale, norm(left));
        ++inputs;
      }
  return numeric_report("coassociativity", q, ctx, to_d(worst), 1e-8, kGraded,
                        {{"P", P}, {"input_nmax", nmax}, {"inputs", inputs}, {"max_output_norm", to_d(scale)},
                         {"series_tail_bound", kit.tail_bound()}});
}


/// Coproducts of v0 and n0 through Delta(L): v0^* L = L a^* and n0 L = L b.
template <class T>
VerifyReport h_coproducts_impl(const SuiteContext& ctx, const QPoint& q) {
  using Vec = TensorVec<T>;
  using Op = SparseOperator<T>;
  OperatorModel<T> om(q, ctx.trunc);
  SeriesKit<T> kit{om, ctx.series_terms};
  const int P = ctx.series_terms;
  const std::vector<TruncSpace> in{om.hp(), om.hp()}, out{om.hz(), om.hz()};
  const Op& v = om.gen("v0");
  const Op& vs = om.gen("v0star");
  const Op& n0 = om.gen("n0");
  T d_v(0), d_n(0);
  for (int n1 = 0; n1 < ctx.trunc.N - 1; ++n1)
    for (int n2 = 0; n2 < ctx.trunc.N - 1; ++n2) {
      std::vector<int> key = SeriesKit<T>::key_of(in, {n1, n2});
      const Vec x = basis_vector<T>(key);
      const Vec dl = kit.delta_vl(0, 0, x, P + 2, -2);
      // (v0^* (x) v0^*) Delta(L) = Delta(L) Delta(a^*)
      Vec lhs = kit.apply_one(vs, 0, kit.apply_one(vs, 1, dl));
      Vec rhs = kit.delta_vl(0, 0, kit.delta_astar(0, x), P + 2, -2);
      d_v = std::max(d_v, distance(keep_grades_up_to(lhs, P, out, in, key), keep_grades_up_to(rhs, P, out, in, key)));
      // (n0 (x) v0 + v0^* (x) n0) Delta(L) = Delta(L) Delta(b)
      lhs = kit.apply_one(n0, 0, kit.apply_one(v, 1, dl));
      axpy(lhs, kit.apply_one(vs, 0, kit.apply_one(n0, 1, dl)));
      rhs = kit.delta_vl(0, 0, kit.delta_b(false, 0, x), P + 2, -2);
      d_n = std::max(d_n, distance(keep_grades_up_to(lhs, P, out, in, key), keep_grades_up_to(rhs, P, out, in, key)));
    }
  // on e_0 (x) e_0 the n0 identity telescopes: coefficient (-1)^p l_0^2 (c_p - c_{p-1})
  T d_tel(0);
  {
    std::vector<int> key = SeriesKit<T>::key_of(in, {0, 0});
    const Vec x = basis_vector<T>(key);
    const Vec dl = kit.delta_vl(0, 0, x, 2 * P + 2);
    Vec lhs = kit.apply_one(n0, 0, kit.apply_one(v, 1, dl));
    axpy(lhs, kit.apply_one(vs, 0, kit.apply_one(n0, 1, dl)));
    const T l0sq = om.l_weight(0) * om.l_weight(0);
    for (int p = 1; p <= P / 2; ++p) {
      std::vector<int> k{om.hz().index(1 - p, p), om.hz().index(-p, 1 - p)};
      auto it = lhs.find(k);
      T got = it == lhs.end() ? T(0) : it->second;
      T expect = (p % 2 ? T(-1) : T(1)) * l0sq * (kit.coef(p) - kit.coef(p - 1));
      d_tel = std::max(d_tel, T(abs(got - expect)));
    }
  }
  // v0 n0 v0^* = q n0, entrywise relative on H0+
  T d_rel(0);
  {
    const InteriorMask mask{1, 1};
    Op lhs = v * Op(n0 * vs);
    Op rhs = om.q() * n0;
    for (int n : mask.n_values(om.hz())) {
      T e = rhs.entry(n, 1, n, 0);
      d_rel = std::max(d_rel, T(abs(lhs.entry(n, 1, n, 0) - e) / abs(e)));
    }
  }
  double defect = to_d(std::max({d_v, d_n, d_tel, d_rel}));
  return numeric_report("h-coproducts", q, ctx, defect, 1e-8, kGraded,
                        {{"P", P}, {"v0_identity", to_d(d_v)}, {"n0_identity", to_d(d_n)},
                         {"n0_telescoping", to_d(d_tel)}, {"v0_n0_v0star_relative", to_d(d_rel)},
                         {"series_tail_bound", kit.tail_bound()}});
}

}  // namespace

VerifyReport suite_h_coproducts(const SuiteContext& ctx, const QPoint& q) {
  if (ctx.precision == "mp50") return h_coproducts_impl<mp50>(ctx, q);
  return h_coproducts_impl<double>(ctx, q);
}

VerifyReport suite_coassociativity(const SuiteContext& ctx, const QPoint& q) {
  if (ctx.precision == "mp50") return coassociativity_impl<mp50>(ctx, q);
  return coassociativity_impl<double>(ctx, q);
}

VerifyReport suite_theocomu(const SuiteContext& ctx, const QPoint& q) {
  if (ctx.precision == "mp50") return theocomu_impl<mp50>(ctx, q);
  return theocomu_impl<double>(ctx, q);
}

}  // namespace qtorsor
