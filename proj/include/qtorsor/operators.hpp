#pragma once

#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qtorsor/pol.hpp"
#include "qtorsor/qspecial.hpp"
#include "qtorsor/trunc.hpp"

namespace qtorsor {

struct Truncation {
  int N = 24;
  int M = 32;
  int W = 16;
};

/// Concrete operators on H+ = l2(N) (x) l2(Z), H0+ = l2(Z) (x) l2(Z) and the Podles space l2(N).
///   a e_{n,k} = sqrt(1-q^{2n}) e_{n-1,k}      b e_{n,k} = q^n e_{n,k+1}
///   v0 e_{n,k} = e_{n-1,k}                    n0 e_{n,k} = q^n e_{n,k+1}
///   L e_{n,k} = ((q^2;q^2)_inf/(q^2;q^2)_n)^{1/2} e_{n,k}
///   X e_k = q^k sqrt(1-q^{2k}) e_{k-1}        Z e_k = q^{2k} e_k
///   A e_k = sqrt(1-q^{2k}) e_{k-1}            B e_k = q^k e_k
template <class T>
class OperatorModel {
 public:
  using Op = SparseOperator<T>;

  OperatorModel(const QPoint& q, const Truncation& tr);

  const T& q() const { return q_; }
  const mpq_class& q_exact() const { return q_exact_; }
  const Truncation& truncation() const { return tr_; }
  const TruncSpace& hp() const { return hp_; }
  const TruncSpace& hz() const { return hz_; }
  const TruncSpace& pd() const { return pd_; }

  /// Names: a astar b bstar (H+), v0 v0star n0 n0star (H0+), L Lstar, X Xstar Z A Astar B (Podles).
  const Op& gen(const std::string& name) const;
  /// Product of named generators, leftmost applied last.
  Op eval_word(const std::vector<std::string>& word) const;
  Op eval_word(const std::vector<std::string>& word, const TruncSpace& empty_space) const;

  /// a^r b^s (b^*)^t on H+ (r < 0 means (a^*)^{-r}).
  const Op& pol_monomial(const PolMonomial& m);
  /// Image of a^r b^s (b^*)^t under a -> A, b -> B on the Podles space.
  const Op& theta_monomial(const PolMonomial& m);
  /// v0^r L b^s (b^*)^t : H+ -> H0+, assembled as a single weighted shift.
  const Op& vlb(int r, int s, int t);
  /// Corepresentation entry G_{t,s} : H+ -> H0+ from the Wall polynomial formula.
  const Op& gmatrix(int t, int s);

  T qsq_poch(int n) const;
  T qsq_poch_inf() const { return poch_inf_; }
  /// Matrix element of L on e_n.
  T l_weight(int n) const;

  std::size_t nnz_budget = 50'000'000;

 private:
  mpq_class q_exact_;
  T q_;
  Truncation tr_;
  TruncSpace hp_, hz_, pd_;
  T poch_inf_;
  std::map<std::string, Op> gens_;
  std::map<PolMonomial, Op> pol_cache_;
  std::map<PolMonomial, Op> theta_cache_;
  std::map<std::tuple<int, int, int>, Op> vlb_cache_;
  std::map<std::pair<int, int>, Op> g_cache_;
};

template <class T>
T poch_inf_to_precision(const T& a, const T& q) {
  using std::abs;
  const T tol = std::numeric_limits<T>::epsilon() / 1000;
  T result(1), qk(1);
  for (int k = 0; k < 100000; ++k) {
    T term = qk * a;
    result *= T(1) - term;
    if (abs(term) < tol) return result;
    qk *= q;
  }
  throw ConvergenceError("q-product did not converge");
}

template <class T>
OperatorModel<T>::OperatorModel(const QPoint& qp, const Truncation& tr)
    : q_exact_(qp.q_exact()),
      q_(gauss_real_to<T>(qp.q_exact())),
      tr_(tr),
      hp_(TruncSpace::h_plus(tr.N, tr.W)),
      hz_(TruncSpace::h_zeroplus(tr.M, tr.W)),
      pd_(TruncSpace::podles(tr.N)) {
  using std::sqrt;
  const T q = q_;
  if (tr.N < 4 || tr.M < 4 || tr.W < 4) throw std::invalid_argument("OperatorModel: truncation below 4");
  if (tr.M < tr.N) throw std::invalid_argument("OperatorModel: requires M >= N");
  const T q2 = q * q;
  poch_inf_ = poch_inf_to_precision(q2, q2);
  auto lower = [q2](int n) { return sqrt(T(1) - pow_int(q2, n)); };
  gens_.emplace("a", Op::weighted_shift(hp_, hp_, -1, 0, lower));
  gens_.emplace("b", Op::weighted_shift(hp_, hp_, 0, 1, [q](int n) { return pow_int(q, n); }));
  gens_.emplace("v0", Op::weighted_shift(hz_, hz_, -1, 0, [](int) { return T(1); }));
  gens_.emplace("n0", Op::weighted_shift(hz_, hz_, 0, 1, [q](int n) { return pow_int(q, n); }));
  gens_.emplace("L", Op::weighted_shift(hp_, hz_, 0, 0, [this](int n) { return l_weight(n); }));
  gens_.emplace("X", Op::weighted_shift(pd_, pd_, -1, 0, [q, lower](int n) { return pow_int(q, n) * lower(n); }));
  gens_.emplace("Z", Op::weighted_shift(pd_, pd_, 0, 0, [q2](int n) { return pow_int(q2, n); }));
  gens_.emplace("A", Op::weighted_shift(pd_, pd_, -1, 0, lower));
  gens_.emplace("B", Op::weighted_shift(pd_, pd_, 0, 0, [q](int n) { return pow_int(q, n); }));
  for (const char* base : {"a", "b", "v0", "n0", "L", "X", "A"})
    gens_.emplace(std::string(base) + "star", gens_.at(base).adjoint());
}

template <class T>
const SparseOperator<T>& OperatorModel<T>::gen(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw std::invalid_argument("unknown generator '" + name + "'");
  return it->second;
}

template <class T>
SparseOperator<T> OperatorModel<T>::eval_word(const std::vector<std::string>& word) const {
  if (word.empty()) throw std::invalid_argument("eval_word: empty word needs a space");
  Op out = gen(word.back());
  for (std::size_t i = word.size() - 1; i-- > 0;) out = gen(word[i]) * out;
  return out;
}

template <class T>
SparseOperator<T> OperatorModel<T>::eval_word(const std::vector<std::string>& word,
                                              const TruncSpace& empty_space) const {
  if (word.empty()) return Op::identity(empty_space);
  return eval_word(word);
}

template <class T>
T OperatorModel<T>::qsq_poch(int n) const {
  return qpoch<T>(q_ * q_, q_ * q_, n);
}

template <class T>
T OperatorModel<T>::l_weight(int n) const {
  using std::sqrt;
  return sqrt(poch_inf_ / qsq_poch(n));
}

template <class T>
const SparseOperator<T>& OperatorModel<T>::pol_monomial(const PolMonomial& m) {
  auto it = pol_cache_.find(m);
  if (it != pol_cache_.end()) return it->second;
  Op out = Op::identity(hp_);
  for (int j = 0; j < m.t; ++j) out = gen("bstar") * out;
  for (int j = 0; j < m.s; ++j) out = gen("b") * out;
  for (int j = 0; j < std::abs(m.r); ++j) out = gen(m.r > 0 ? "a" : "astar") * out;
  return pol_cache_.emplace(m, std::move(out)).first->second;
}

template <class T>
const SparseOperator<T>& OperatorModel<T>::theta_monomial(const PolMonomial& m) {
  auto it = theta_cache_.find(m);
  if (it != theta_cache_.end()) return it->second;
  Op out = Op::identity(pd_);
  for (int j = 0; j < m.s + m.t; ++j) out = gen("B") * out;
  for (int j = 0; j < std::abs(m.r); ++j) out = gen(m.r > 0 ? "A" : "Astar") * out;
  return theta_cache_.emplace(m, std::move(out)).first->second;
}

template <class T>
const SparseOperator<T>& OperatorModel<T>::vlb(int r, int s, int t) {
  auto key = std::make_tuple(r, s, t);
  auto it = vlb_cache_.find(key);
  if (it != vlb_cache_.end()) return it->second;
  const T q = q_;
  Op out = Op::weighted_shift(hp_, hz_, -r, s - t, [this, q, s, t](int n) { return l_weight(n) * pow_int(q, n * (s + t)); });
  return vlb_cache_.emplace(key, std::move(out)).first->second;
}

template <class T>
const SparseOperator<T>& OperatorModel<T>::gmatrix(int t, int s) {
  using std::sqrt;
  auto key = std::make_pair(t, s);
  auto it = g_cache_.find(key);
  if (it != g_cache_.end()) return it->second;
  if (t < 0 || s < 0) throw std::domain_error("gmatrix: indices must be nonnegative");
  const int lo = std::min(t, s), hi = std::max(t, s), d = hi - lo;
  // the Wall sum cancels badly in floating point; its rational part is exact in q
  const mpq_class q = q_exact_, q2 = q * q;
  mpq_class pre = pow_int(q, lo * (lo - hi)) / qpoch<mpq_class>(q2, q2, d);
  if (t > s) pre *= pow_int(mpq_class(-q), d);
  const mpq_class a = pow_int(q2, d);
  const T root = sqrt(qsq_poch(hi) / qsq_poch(lo));
  Op out = Op::weighted_shift(hp_, hz_, -(s + t), s - t, [&](int n) {
    mpq_class exact = pre * pow_int(q, n * d) * wall<mpq_class>(lo, pow_int(q2, n), a, q2);
    return gauss_real_to<T>(exact) * root * l_weight(n);
  });
  return g_cache_.emplace(key, std::move(out)).first->second;
}

}  // namespace qtorsor
