#pragma once

// Exponential polynomials: the Q-span of t^r e^{ct} (r, c integers) inside
// the formal Laurent series Q((t)). The family {t^r e^{ct}} is linearly
// independent, so a reduced term map is a canonical form.

#include <glinf_qva/linear_combination.hpp>
#include <glinf_qva/rational.hpp>

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glinf {

/// The basis element t^r e^{ct}.
struct ExpTerm {
  int r = 0;
  int c = 0;
  friend auto operator<=>(const ExpTerm&, const ExpTerm&) = default;
};

class ExpPoly : public LinearCombination<ExpTerm> {
 public:
  using LinearCombination::LinearCombination;

  static ExpPoly monomial(int r, int c = 0, Rational q = 1) { return ExpPoly(ExpTerm{r, c}, std::move(q)); }

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) {
    a += b;
    return a;
  }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) {
    a -= b;
    return a;
  }
  friend ExpPoly operator*(const Rational& q, ExpPoly a) {
    a *= q;
    return a;
  }
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
    return static_cast<const LinearCombination&>(a) == static_cast<const LinearCombination&>(b);
  }
};

inline ExpPoly ep_add(const ExpPoly& a, const ExpPoly& b) { return a + b; }
inline ExpPoly ep_scale(const Rational& q, const ExpPoly& a) { return q * a; }

/// Multiplication by e^{dt}: every (r, c) becomes (r, c + d).
inline ExpPoly ep_mul_exp(const ExpPoly& a, int d) {
  if (d == 0) return a;
  ExpPoly out;
  for (const auto& [term, q] : a) out.add_term(ExpTerm{term.r, term.c + d}, q);
  return out;
}

/// Coefficient of t^n in the Laurent expansion of t^r e^{ct}:
/// c^{n-r}/(n-r)! for n >= r, with 0^0 = 1.
inline Rational exp_term_mode(const ExpTerm& term, int n) {
  if (n < term.r) return Rational(0);
  int k = n - term.r;
  if (term.c == 0) return k == 0 ? Rational(1) : Rational(0);
  return power(Rational(term.c), k) / factorial(k);
}

/// Coefficient of t^n in a.
inline Rational ep_mode(const ExpPoly& a, int n) {
  Rational acc;
  for (const auto& [term, q] : a) {
    if (n < term.r) continue;
    acc += q * exp_term_mode(term, n);
  }
  return acc;
}

/// Res_t a(t) e^{dt}, i.e. the coefficient of t^{-1} in a(t) e^{dt}.
inline Rational ep_residue_twisted(const ExpPoly& a, int d) {
  Rational acc;
  for (const auto& [term, q] : a) {
    if (term.r > -1) continue;
    acc += q * exp_term_mode(ExpTerm{term.r, term.c + d}, -1);
  }
  return acc;
}

/// Coefficients of t^n for n in [lo, hi].
inline std::vector<std::pair<int, Rational>> ep_mode_window(const ExpPoly& a, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("ep_mode_window: lo > hi");
  std::vector<std::pair<int, Rational>> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) out.emplace_back(n, ep_mode(a, n));
  return out;
}

/// Smallest n with a nonzero t^n coefficient. a must be nonzero; the search
/// terminates because distinct t^r e^{ct} are linearly independent.
inline int ep_lowest_degree(const ExpPoly& a) {
  if (a.is_zero()) throw std::domain_error("ep_lowest_degree of zero");
  int n = a.begin()->first.r;
  for (const auto& [term, q] : a) n = std::min(n, term.r);
  while (ep_mode(a, n).is_zero()) ++n;
  return n;
}

/// `q * t^r * exp(c*t)` terms joined by ` + ` / ` - `; a unit coefficient and
/// `exp(0*t)` are elided; the zero polynomial prints as `0`.
inline std::string to_string(const ExpPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [term, q] : a) {
    Rational mag = q.sign() < 0 ? -q : q;
    if (first) {
      if (q.sign() < 0) out += "-";
    } else {
      out += q.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != Rational(1)) out += mag.str() + " * ";
    out += "t^" + std::to_string(term.r);
    if (term.c != 0) out += " * exp(" + std::to_string(term.c) + "*t)";
  }
  return out;
}

inline bool is_zero(const ExpPoly& a) { return a.is_zero(); }
inline ExpPoly scale(const Rational& q, const ExpPoly& a) { return q * a; }

}  // namespace glinf
