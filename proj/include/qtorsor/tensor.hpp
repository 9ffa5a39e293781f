#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qtorsor/trunc.hpp"

namespace qtorsor {

/// Memory guard for sparse tensor evaluations.
struct MemoryGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sparse vector on a tensor product of truncated spaces; key = flat index per leg.
template <class T>
using TensorVec = std::map<std::vector<int>, T>;

/// coef * (legs[0] (x) legs[1] (x) ...).
template <class T>
struct TensorTerm {
  T coef;
  std::vector<const SparseOperator<T>*> legs;
};

template <class T>
using TensorOp = std::vector<TensorTerm<T>>;

template <class T>
TensorVec<T> basis_vector(std::vector<int> key) {
  return {{std::move(key), T(1)}};
}

template <class T>
void axpy(TensorVec<T>& into, const TensorVec<T>& x, const T& c = T(1)) {
  for (const auto& [k, v] : x) into[k] += c * v;
}

template <class T>
TensorVec<T> apply_tensor(const TensorOp<T>& op, const TensorVec<T>& x, std::size_t budget = 20'000'000) {
  TensorVec<T> out;
  std::vector<int> key;
  for (const auto& term : op) {
    if (term.coef == T(0)) continue;
    for (const auto& [k, v] : x) {
      if (k.size() != term.legs.size()) throw std::invalid_argument("tensor apply: leg count mismatch");
      key.assign(k.size(), 0);
      // depth-first expansion over the column entries of each leg
      auto rec = [&](auto&& self, std::size_t leg, T acc) -> void {
        if (leg == k.size()) {
          out[key] += acc;
          if (out.size() > budget) throw MemoryGuardError("tensor vector exceeded the memory guard");
          return;
        }
        using It = typename SparseOperator<T>::Matrix::InnerIterator;
        for (It it(term.legs[leg]->m, k[leg]); it; ++it) {
          key[leg] = static_cast<int>(it.row());
          self(self, leg + 1, acc * it.value());
        }
      };
      rec(rec, 0, term.coef * v);
    }
  }
  return out;
}

/// Kronecker product of tensor operators: (A (x) B) with A acting on the first legs.
template <class T>
TensorOp<T> kron(const TensorOp<T>& a, const TensorOp<T>& b) {
  TensorOp<T> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      TensorTerm<T> t{x.coef * y.coef, x.legs};
      t.legs.insert(t.legs.end(), y.legs.begin(), y.legs.end());
      out.push_back(std::move(t));
    }
  return out;
}

template <class T>
T norm(const TensorVec<T>& x) {
  using std::sqrt;
  T s(0);
  for (const auto& [k, v] : x) s += v * v;
  return sqrt(s);
}

template <class T>
T distance(const TensorVec<T>& a, const TensorVec<T>& b) {
  TensorVec<T> d = a;
  axpy(d, b, T(-1));
  return norm(d);
}

/// Total n-grade of an output key relative to an input key: sum over legs of n_in - n_out.
inline int tensor_grade(const std::vector<TruncSpace>& out_spaces, const std::vector<int>& out_key,
                        const std::vector<TruncSpace>& in_spaces, const std::vector<int>& in_key) {
  int g = 0;
  for (std::size_t i = 0; i < out_key.size(); ++i)
    g += in_spaces[i].n_of(in_key[i]) - out_spaces[i].n_of(out_key[i]);
  return g;
}

template <class T>
TensorVec<T> keep_grades_up_to(const TensorVec<T>& x, int max_grade, const std::vector<TruncSpace>& out_spaces,
                               const std::vector<TruncSpace>& in_spaces, const std::vector<int>& in_key) {
  TensorVec<T> out;
  for (const auto& [k, v] : x)
    if (tensor_grade(out_spaces, k, in_spaces, in_key) <= max_grade) out.emplace(k, v);
  return out;
}

}  // namespace qtorsor
