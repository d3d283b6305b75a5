#pragma once

#include <glinf_qva/rational.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

namespace glinf {

/// Finite rational combination of basis keys. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
template <class Key, class Compare = std::less<Key>>
class LinearCombination {
 public:
  using map_type = std::map<Key, Rational, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  LinearCombination(const Key& key, Rational coeff) { add_term(key, std::move(coeff)); }

  void add_term(const Key& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, q);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, -q);
    return *this;
  }
  LinearCombination& operator*=(const Rational& q) {
    if (q.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= q;
    return *this;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 protected:
  map_type terms_;
};

}  // namespace glinf
