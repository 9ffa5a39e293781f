#pragma once

#include <map>
#include <vector>

#include "qtorsor/exact_scalar.hpp"

namespace qtorsor {

enum class Sign : int { Zero = 0, Plus = 1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }
inline const char* sign_name(Sign s) { return s == Sign::Plus ? "+" : "0"; }

struct SignPair {
  Sign mu = Sign::Plus;
  Sign nu = Sign::Plus;
  auto operator<=>(const SignPair&) const = default;
  SignPair swapped() const { return {nu, mu}; }
  bool diagonal() const { return mu == nu; }
};

inline std::string tag_name(SignPair t) { return std::string(sign_name(t.mu)) + sign_name(t.nu); }

/// Sparse linear combination with exact coefficients; zero entries are never stored.
template <class Key>
using Terms = std::map<Key, ExactScalar>;

template <class Key>
void add_term(Terms<Key>& terms, const Key& key, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

template <class Key>
void add_terms(Terms<Key>& into, const Terms<Key>& from, const ExactScalar& scale = ExactScalar(1)) {
  if (scale.is_zero()) return;
  for (const auto& [k, c] : from) add_term(into, k, scale.is_one() ? c : c * scale);
}

/// Multi-leg tensor with one tag per leg.
template <class Mono, class Tag>
struct Tensor {
  std::vector<Tag> tags;
  Terms<std::vector<Mono>> terms;

  std::size_t legs() const { return tags.size(); }
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.tags == b.tags && a.terms == b.terms; }
};

}  // namespace qtorsor
