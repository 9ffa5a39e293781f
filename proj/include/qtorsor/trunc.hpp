#pragma once

#include <Eigen/Sparse>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtorsor {

using mp50 = boost::multiprecision::cpp_bin_float_50;

enum class SpaceKind { HPlus, HZeroPlus, Podles };

/// Truncated basis e_n (x) e_k.  The k axis is a periodic window of 2W+1 sites
/// (absent for Podles); n runs over [n_min, n_max].
struct TruncSpace {
  SpaceKind kind = SpaceKind::HPlus;
  int n_min = 0;
  int n_max = 0;
  int W = 0;

  static TruncSpace h_plus(int N, int W) { return {SpaceKind::HPlus, 0, N - 1, W}; }
  static TruncSpace h_zeroplus(int M, int W) { return {SpaceKind::HZeroPlus, -M, M, W}; }
  static TruncSpace podles(int N) { return {SpaceKind::Podles, 0, N - 1, 0}; }

  int n_count() const { return n_max - n_min + 1; }
  int k_count() const { return kind == SpaceKind::Podles ? 1 : 2 * W + 1; }
  int dim() const { return n_count() * k_count(); }
  bool has_n(int n) const { return n >= n_min && n <= n_max; }
  int wrap_k(int k) const {
    int c = k_count();
    int r = ((k + W) % c + c) % c;
    return r - W;
  }
  int index(int n, int k) const { return (n - n_min) * k_count() + (wrap_k(k) + W); }
  int n_of(int i) const { return n_min + i / k_count(); }
  int k_of(int i) const { return i % k_count() - W; }

  std::string name() const;
  friend bool operator==(const TruncSpace& a, const TruncSpace& b) {
    return a.kind == b.kind && a.n_min == b.n_min && a.n_max == b.n_max && a.W == b.W;
  }
};

inline std::string TruncSpace::name() const {
  switch (kind) {
    case SpaceKind::HPlus: return "H+(N=" + std::to_string(n_count()) + ",W=" + std::to_string(W) + ")";
    case SpaceKind::HZeroPlus: return "H0+(M=" + std::to_string(n_max) + ",W=" + std::to_string(W) + ")";
    case SpaceKind::Podles: return "l2(N=" + std::to_string(n_count()) + ")";
  }
  return "?";
}

/// Basis vectors kept at distance >= below / above from truncation edges of the n axis.
/// The lower edge n = 0 of H+ and of the Podles space is a true edge, not a truncation.
struct InteriorMask {
  int below = 0;
  int above = 0;

  bool contains(const TruncSpace& s, int n) const {
    int lo = s.kind == SpaceKind::HZeroPlus ? s.n_min + below : s.n_min;
    return n >= lo && n <= s.n_max - above;
  }
  std::vector<int> n_values(const TruncSpace& s) const {
    std::vector<int> out;
    for (int n = s.n_min; n <= s.n_max; ++n)
      if (contains(s, n)) out.push_back(n);
    return out;
  }
};

/// Real sparse operator between truncated spaces.  All operators of the model
/// have real matrix elements at real q, so the adjoint is the transpose.
template <class T>
struct SparseOperator {
  using Matrix = Eigen::SparseMatrix<T, Eigen::ColMajor>;
  TruncSpace domain;
  TruncSpace codomain;
  Matrix m;

  static SparseOperator zero(const TruncSpace& dom, const TruncSpace& cod) {
    return {dom, cod, Matrix(cod.dim(), dom.dim())};
  }
  static SparseOperator identity(const TruncSpace& s) {
    Matrix id(s.dim(), s.dim());
    id.setIdentity();
    return {s, s, id};
  }
  /// e_{n,k} -> w(n) e_{n+dn, k+dk}; targets outside the codomain are clipped.
  static SparseOperator weighted_shift(const TruncSpace& dom, const TruncSpace& cod, int dn, int dk,
                                       const std::function<T(int)>& w) {
    std::vector<Eigen::Triplet<T>> trip;
    for (int n = dom.n_min; n <= dom.n_max; ++n) {
      if (!cod.has_n(n + dn)) continue;
      T v = w(n);
      if (v == T(0)) continue;
      for (int k = -dom.W; k <= dom.W; ++k) {
        if (dom.kind == SpaceKind::Podles && k != 0) continue;
        trip.emplace_back(cod.index(n + dn, k + dk), dom.index(n, k), v);
      }
    }
    Matrix m(cod.dim(), dom.dim());
    m.setFromTriplets(trip.begin(), trip.end());
    return {dom, cod, m};
  }

  SparseOperator adjoint() const { return {codomain, domain, Matrix(m.transpose())}; }

  T entry(int n_out, int k_out, int n_in, int k_in) const {
    return m.coeff(codomain.index(n_out, k_out), domain.index(n_in, k_in));
  }

  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    if (!(a.domain == b.codomain))
      throw std::invalid_argument("operator chain mismatch: " + a.domain.name() + " vs " + b.codomain.name());
    return {b.domain, a.codomain, Matrix((a.m * b.m).pruned())};
  }
  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    check_same(a, b);
    return {a.domain, a.codomain, Matrix(a.m + b.m)};
  }
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    check_same(a, b);
    return {a.domain, a.codomain, Matrix(a.m - b.m)};
  }
  friend SparseOperator operator*(const T& c, const SparseOperator& a) {
    return {a.domain, a.codomain, Matrix(c * a.m)};
  }

 private:
  static void check_same(const SparseOperator& a, const SparseOperator& b) {
    if (!(a.domain == b.domain && a.codomain == b.codomain))
      throw std::invalid_argument("operator sum between different spaces");
  }
};

template <class T>
T pow_int(const T& x, int e) {
  T v(1);
  for (int k = 0; k < (e < 0 ? -e : e); ++k) v *= x;
  return e < 0 ? T(1) / v : v;
}

/// Maximum column 2-norm of D over masked domain columns.
template <class T>
T masked_column_norm(const SparseOperator<T>& d, const InteriorMask& mask) {
  using std::sqrt;
  T worst(0);
  for (int j = 0; j < d.m.outerSize(); ++j) {
    if (!mask.contains(d.domain, d.domain.n_of(j))) continue;
    T sq(0);
    for (typename SparseOperator<T>::Matrix::InnerIterator it(d.m, j); it; ++it) sq += it.value() * it.value();
    T nrm = sqrt(sq);
    if (nrm > worst) worst = nrm;
  }
  return worst;
}

template <class T>
T masked_defect(const SparseOperator<T>& a, const SparseOperator<T>& b, const InteriorMask& mask) {
  return masked_column_norm(SparseOperator<T>(a - b), mask);
}

}  // namespace qtorsor
