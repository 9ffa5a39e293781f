#include <algorithm>
#include <cmath>

#include "series_ops.hpp"
#include "suites_numeric.hpp"

namespace qtorsor {

using detail::kColumnNorm;
using detail::numeric_report;
using detail::assemble_g;
using detail::SpMat;

namespace {

template <class T>
double to_d(const T& v) {
  return static_cast<double>(v);
}

constexpr int kRowMargin = 12;

template <class T>
SparseOperator<T> block_of(const SpMat<T>& m, const TruncSpace& sp, int row_block, int col_block) {
  const int d = sp.dim();
  return {sp, sp, SpMat<T>(m.block(row_block * d, col_block * d, d, d))};
}

/// H0+ interior for the row sums: sum_s G_{t,s} G_{t',s}^dag e_m needs s up to about -m,
/// and G_{t',s}^dag e_m lands on e_{m+s+t'} which must stay inside H+.
inline InteriorMask unitarity_row_mask(const SuiteContext& ctx) {
  const int lo = -(ctx.unitarity_terms - kRowMargin);
  const int hi = ctx.trunc.N - 1 - kRowMargin;
  return {lo + ctx.trunc.M, ctx.trunc.M - hi};
}

/// diag (q^{2n+2}; q^2)_inf on H+.
template <class T>
SparseOperator<T> tail_product(const OperatorModel<T>& om) {
  const T q2 = om.q() * om.q();
  return SparseOperator<T>::weighted_shift(om.hp(), om.hp(), 0, 0, [q2](int n) {
    return poch_inf_to_precision(pow_int(q2, n + 1), q2);
  });
}

template <class T>
VerifyReport proprow_impl(const SuiteContext& ctx, const QPoint& q) {
  using Op = SparseOperator<T>;
  OperatorModel<T> om(q, ctx.trunc);
  const int S = 5;
  const InteriorMask mask{0, S + 1};
  const Op D = tail_product(om);
  const SpMat<T> big = assemble_g(om, S);
  SpMat<T> proj(big.rows(), big.rows());
  {
    std::vector<Eigen::Triplet<T>> trip;
    for (int i = 0; i < om.hz().dim(); ++i) trip.emplace_back(i, i, T(1));
    proj.setFromTriplets(trip.begin(), trip.end());
  }
  const SpMat<T> alpha = SpMat<T>(big.transpose()) * proj * big;
  T d_closed(0), d_block(0);
  for (int s = 0; s <= S; ++s)
    for (int t = 0; t <= S; ++t) {
      Op direct = om.gmatrix(0, s).adjoint() * om.gmatrix(0, t);
      Op closed = Op::identity(om.hp());
      for (int j = 0; j < t; ++j) closed = om.gen("b") * closed;
      for (int j = 0; j < s; ++j) closed = om.gen("astar") * closed;
      closed = D * closed;
      for (int j = 0; j < t; ++j) closed = om.gen("a") * closed;
      for (int j = 0; j < s; ++j) closed = om.gen("bstar") * closed;
      using std::sqrt;
      closed = (T(1) / sqrt(om.qsq_poch(s) * om.qsq_poch(t))) * closed;
      d_closed = std::max(d_closed, masked_defect(direct, closed, mask));
      d_block = std::max(d_block, masked_defect(direct, block_of<T>(alpha, om.hp(), s, t), mask));
    }
  // x0^* x0 is diagonal with entries (q^{2n+2}; q^2)_inf
  const Op& g00 = om.gmatrix(0, 0);
  T d_diag = masked_defect(Op(g00.adjoint() * g00), D, mask);
  double defect = to_d(std::max({d_closed, d_block, d_diag}));
  return numeric_report("proprow", q, ctx, defect, 1e-10, kColumnNorm,
                        {{"smax", S}, {"direct_vs_closed", to_d(d_closed)},
                         {"direct_vs_block_assembly", to_d(d_block)}, {"x0star_x0_diagonal", to_d(d_diag)}});
}


template <class T>
VerifyReport limit_impl(const SuiteContext& ctx, const QPoint& q) {
  using Op = SparseOperator<T>;
  OperatorModel<T> om(q, ctx.trunc);
  const int n_lo = 6, n_hi = 14, st_max = 3;
  const InteriorMask mask{0, n_hi};
  const T floor = ctx.precision == "mp50" ? T(1e-40) : T(1e-13);
  const Op D = tail_product(om);
  const Op& a = om.gen("a");
  const Op& as = om.gen("astar");
  std::vector<Op> apow{Op::identity(om.hp())}, aspow{Op::identity(om.hp())};
  for (int j = 1; j <= n_hi; ++j) {
    apow.push_back(a * apow.back());
    aspow.push_back(as * aspow.back());
  }
  const double q2 = q.q() * q.q();
  double worst_rel = 0, worst_ratio = 0;
  int nonmonotone = 0, fitted = 0, too_few = 0;
  for (int s = 0; s <= st_max; ++s)
    for (int t = 0; t <= st_max; ++t) {
      Op target = apow[t] * Op(D * aspow[s]);
      std::vector<double> xs, ys;
      double prev = INFINITY;
      for (int n = n_lo; n <= n_hi; ++n) {
        double d = to_d(masked_defect(Op(apow[n - s] * aspow[n - t]), target, mask));
        if (d > prev * (1 + 1e-9) && d > to_d(floor)) ++nonmonotone;
        prev = d;
        if (d > to_d(floor)) {
          xs.push_back(n);
          ys.push_back(std::log(d));
        }
      }
      if (xs.size() < 3) {
        ++too_few;
        continue;
      }
      double mx = 0, my = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
      mx /= xs.size();
      my /= xs.size();
      double sxy = 0, sxx = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) sxy += (xs[i] - mx) * (ys[i] - my), sxx += (xs[i] - mx) * (xs[i] - mx);
      double ratio = std::exp(sxy / sxx);
      ++fitted;
      double rel = std::abs(ratio - q2) / q2;
      if (rel > worst_rel) worst_rel = rel, worst_ratio = ratio;
    }
  double defect = too_few || nonmonotone ? INFINITY : worst_rel;
  return numeric_report("limit", q, ctx, defect, 0.2,
                        "max over s,t <= 3 of |fitted decay ratio - q^2| / q^2, defects of a^{n-s} a*^{n-t} "
                        "against a^t (q^2 b*b; q^2)_inf a*^s for n = 6..14",
                        {{"q_squared", q2}, {"worst_ratio", worst_ratio}, {"fitted_pairs", fitted},
                         {"pairs_below_noise_floor", too_few}, {"nonmonotone_steps", nonmonotone}});
}

/// Column sums: sum_t G_{t,s}^dag G_{t,s'} on H+; row sums: sum_s G_{t,s} G_{t',s}^dag on H0+.
template <class T>
VerifyReport unitarity_impl(const SuiteContext& ctx, const QPoint& q) {
  using Op = SparseOperator<T>;
  OperatorModel<T> om(q, ctx.trunc);
  const int S = ctx.unitarity_terms, fixed = 3;
  const InteriorMask col_mask{0, fixed + 1};
  const InteriorMask row_mask = unitarity_row_mask(ctx);
  T d_col(0), d_row(0);
  for (int s = 0; s <= fixed; ++s)
    for (int s2 = 0; s2 <= fixed; ++s2) {
      Op sum = Op::zero(om.hp(), om.hp());
      for (int t = 0; t <= S; ++t) sum = sum + Op(om.gmatrix(t, s).adjoint() * om.gmatrix(t, s2));
      Op expect = s == s2 ? Op::identity(om.hp()) : Op::zero(om.hp(), om.hp());
      d_col = std::max(d_col, masked_defect(sum, expect, col_mask));
    }
  for (int t = 0; t <= fixed; ++t)
    for (int t2 = 0; t2 <= fixed; ++t2) {
      Op sum = Op::zero(om.hz(), om.hz());
      for (int s = 0; s <= S; ++s) sum = sum + Op(om.gmatrix(t, s) * om.gmatrix(t2, s).adjoint());
      Op expect = t == t2 ? Op::identity(om.hz()) : Op::zero(om.hz(), om.hz());
      d_row = std::max(d_row, masked_defect(sum, expect, row_mask));
    }
  double defect = to_d(std::max(d_col, d_row));
  return numeric_report("unitarity", q, ctx, defect, 1e-8, kColumnNorm,
                        {{"terms", S}, {"column_sums", to_d(d_col)}, {"row_sums", to_d(d_row)},
                         {"row_interior_min", ctx.trunc.M * -1.0 + row_mask.below},
                         {"row_interior_max", ctx.trunc.M - row_mask.above * 1.0}});
}

}  // namespace

VerifyReport suite_proprow(const SuiteContext& ctx, const QPoint& q) {
  if (ctx.precision == "mp50") return proprow_impl<mp50>(ctx, q);
  return proprow_impl<double>(ctx, q);
}

}  // namespace qtorsor

namespace qtorsor {

VerifyReport suite_limit(const SuiteContext& ctx, const QPoint& q) {
  if (ctx.precision == "mp50") return limit_impl<mp50>(ctx, q);
  return limit_impl<double>(ctx, q);
}

VerifyReport suite_unitarity(const SuiteContext& ctx, const QPoint& q) {
  if (ctx.precision == "mp50") return unitarity_impl<mp50>(ctx, q);
  return unitarity_impl<double>(ctx, q);
}

}  // namespace qtorsor
