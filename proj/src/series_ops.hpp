#pragma once

#include <cmath>
#include <map>
#include <tuple>
#include <vector>

#include "qtorsor/operators.hpp"
#include "qtorsor/pol.hpp"
#include "qtorsor/tensor.hpp"

namespace qtorsor::detail {

/// Tensor-vector helpers for identities between series of weighted shifts.
template <class T>
struct SeriesKit {
  using Op = SparseOperator<T>;
  using Vec = TensorVec<T>;

  SeriesKit(OperatorModel<T>& model, int terms) : om(model), P(terms) {}

  OperatorModel<T>& om;
  int P;

  T coef(int p) const { return T(1) / om.qsq_poch(p); }

  Vec apply_legs(const std::vector<const Op*>& legs, const Vec& x, T c = T(1)) const {
    return apply_tensor(TensorOp<T>{{c, legs}}, x);
  }

  /// Apply op on one leg, identity elsewhere.
  Vec apply_one(const Op& op, std::size_t leg, const Vec& x) const {
    Vec out;
    for (const auto& [k, v] : x)
      for (typename Op::Matrix::InnerIterator it(op.m, k[leg]); it; ++it) {
        std::vector<int> key = k;
        key[leg] = static_cast<int>(it.row());
        out[key] += v * it.value();
      }
    return out;
  }

  /// Pol(+) coproduct of b (star = false) or b^* (star = true) on legs i, i+1.
  Vec delta_b(bool star, std::size_t i, const Vec& x) const {
    const Op& a = om.gen("a");
    const Op& as = om.gen("astar");
    const Op& b = om.gen(star ? "bstar" : "b");
    // Delta b = b (x) a + a^* (x) b,  Delta b^* = b^* (x) a^* + a (x) b^*
    Vec out = apply_one(b, i, apply_one(star ? as : a, i + 1, x));
    axpy(out, apply_one(star ? a : as, i, apply_one(b, i + 1, x)));
    return out;
  }

  static const char* gen_name(PolGen g) {
    switch (g) {
      case PolGen::A: return "a";
      case PolGen::Astar: return "astar";
      case PolGen::B: return "b";
      case PolGen::Bstar: return "bstar";
    }
    return "";
  }

  /// Delta_+(g) on legs i, i+1 from the generator coproduct table.
  Vec delta_gen(PolGen g, std::size_t i, const Vec& x) const {
    using std::sqrt;
    Vec out;
    for (const auto& img : pol_generator_coproduct(Sign::Plus, g)) {
      const T c = img.c.template eval<T>(sqrt(om.q())).re;
      axpy(out, apply_one(om.gen(gen_name(img.left)), i, apply_one(om.gen(gen_name(img.right)), i + 1, x)), c);
    }
    return out;
  }

  /// (Delta_+ (x) id) Delta_+(g) on legs i, i+1, i+2.
  Vec delta2_gen(PolGen g, std::size_t i, const Vec& x) const {
    using std::sqrt;
    Vec out;
    for (const auto& img : pol_generator_coproduct(Sign::Plus, g)) {
      const T c = img.c.template eval<T>(sqrt(om.q())).re;
      axpy(out, delta_gen(img.left, i, apply_one(om.gen(gen_name(img.right)), i + 2, x)), c);
    }
    return out;
  }

  /// Delta a^* = a^* (x) a^* - q b (x) b^* on legs i, i+1.
  Vec delta_astar(std::size_t i, const Vec& x) const {
    Vec out = apply_one(om.gen("astar"), i, apply_one(om.gen("astar"), i + 1, x));
    axpy(out, apply_one(om.gen("b"), i, apply_one(om.gen("bstar"), i + 1, x)), -om.q());
    return out;
  }

  /// (v0^r (x) v0^r) Delta(L) on legs i, i+1, summing p <= P and skipping terms whose
  /// output grade provably exceeds max_grade (grade of term p is >= 2(r + p) + min_shift).
  Vec delta_vl(int r, std::size_t i, const Vec& x, int max_grade, int min_shift = 0) const {
    Vec out;
    const T mq = -om.q();
    for (int p = 0; p <= P; ++p) {
      if (2 * (r + p) + min_shift > max_grade) break;
      const Op& left = om.vlb(r + p, p, 0);
      const Op& right = om.vlb(r + p, 0, p);
      Vec y = apply_one(left, i, apply_one(right, i + 1, x));
      axpy(out, y, coef(p) * pow_int(mq, p));
    }
    return out;
  }

  /// Adjoint of (v0^r (x) v0^r) Delta(L) on legs i, i+1, all p <= P.
  Vec delta_vl_adjoint(int r, std::size_t i, const Vec& x) const {
    Vec out;
    const T mq = -om.q();
    for (int p = 0; p <= P; ++p) {
      Vec y = apply_one(vlb_adjoint(r + p, p, 0), i, apply_one(vlb_adjoint(r + p, 0, p), i + 1, x));
      axpy(out, y, coef(p) * pow_int(mq, p));
    }
    return out;
  }

  const Op& vlb_adjoint(int r, int s, int t) const {
    auto key = std::make_tuple(r, s, t);
    auto it = adj_cache.find(key);
    if (it != adj_cache.end()) return it->second;
    return adj_cache.emplace(key, om.vlb(r, s, t).adjoint()).first->second;
  }

  mutable std::map<std::tuple<int, int, int>, Op> adj_cache;

  static std::vector<int> key_of(const std::vector<TruncSpace>& sp, const std::vector<int>& n) {
    std::vector<int> k;
    for (std::size_t i = 0; i < n.size(); ++i) k.push_back(sp[i].index(n[i], 0));
    return k;
  }

  double tail_bound() const {
    double q = static_cast<double>(om.q()), sum = 0, poch = 1, qp = 1;
    for (int p = 1; p <= P + 200; ++p) {
      poch *= 1 - std::pow(q, 2 * p);
      qp *= q;
      if (p > P) sum += qp / poch;
    }
    return sum;
  }
};

template <class T>
using SpMat = typename SparseOperator<T>::Matrix;

/// Block operator with blocks G_{t,s} (t, s <= S) from H+ (x) l2(0..S) to H0+ (x) l2(0..S).
template <class T>
SpMat<T> assemble_g(OperatorModel<T>& om, int S) {
  const int dp = om.hp().dim(), dz = om.hz().dim();
  std::vector<Eigen::Triplet<T>> trip;
  for (int t = 0; t <= S; ++t)
    for (int s = 0; s <= S; ++s) {
      const auto& g = om.gmatrix(t, s).m;
      for (int j = 0; j < g.outerSize(); ++j)
        for (typename SpMat<T>::InnerIterator it(g, j); it; ++it)
          trip.emplace_back(t * dz + static_cast<int>(it.row()), s * dp + j, it.value());
    }
  SpMat<T> big(dz * (S + 1), dp * (S + 1));
  big.setFromTriplets(trip.begin(), trip.end());
  return big;
}

}  // namespace qtorsor::detail
