#pragma once

// Truncated multivariate Laurent series over a generic coefficient space.
//
// A TruncSeries records, besides its terms, the region on which those terms
// are exact:
//   - every coefficient below `lo` (per variable) is zero;
//   - coefficients are known for exponents e with e_v <= hi_v in every
//     variable that is not `complete` (complete variables are known, and
//     zero above hi_v, everywhere);
//   - if `total_hi` is set, additionally only for sum(e) <= total_hi.
// Arithmetic propagates this region, so products never claim coefficients
// they could not have computed. Terms that land outside the exact region
// are dropped and the series is flagged `truncated`.

#include <glinf_qva/rational.hpp>

#include <algorithm>
#include <climits>
#include <concepts>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glinf {

/// Minimal additive-module contract shared by scalar and vector coefficients.
template <class C>
concept Coefficient = std::default_initializable<C> && std::copyable<C> &&
                      requires(C a, const C& b, const Rational& q) {
                        a += b;
                        { scale(q, b) } -> std::convertible_to<C>;
                        { is_zero(b) } -> std::convertible_to<bool>;
                      };

/// Coefficients that print (for reports).
template <class C>
concept PrintableCoefficient = Coefficient<C> && requires(const C& c) {
  { to_string(c) } -> std::convertible_to<std::string>;
};

enum class Var { x = 0, x0 = 1, x1 = 2, x2 = 3 };

inline std::string var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::x0: return "x0";
    case Var::x1: return "x1";
    case Var::x2: return "x2";
  }
  return "?";
}

struct Window {
  int lo = 0;
  int hi = 0;
  bool complete = false;
  friend bool operator==(const Window&, const Window&) = default;
};

using Exponents = std::vector<int>;

namespace detail {
constexpr int kUnbounded = INT_MAX / 4;
}

template <Coefficient C>
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(std::vector<Var> vars, std::vector<Window> windows, std::optional<int> total_hi = std::nullopt)
      : vars_(std::move(vars)), windows_(std::move(windows)), total_hi_(total_hi) {
    if (vars_.size() != windows_.size()) throw std::invalid_argument("TruncSeries: one window per variable");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (windows_[i].lo > windows_[i].hi) throw std::invalid_argument("TruncSeries: empty window");
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[i] == vars_[j]) throw std::invalid_argument("TruncSeries: repeated variable");
    }
  }

  /// Exact Laurent polynomial: every variable complete.
  static TruncSeries polynomial(std::vector<Var> vars, const std::map<Exponents, C>& terms) {
    std::vector<Window> w(vars.size(), Window{0, 0, true});
    bool first = true;
    for (const auto& [e, c] : terms) {
      if (is_zero(c)) continue;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        w[i].lo = first ? e[i] : std::min(w[i].lo, e[i]);
        w[i].hi = first ? e[i] : std::max(w[i].hi, e[i]);
      }
      first = false;
    }
    TruncSeries s(std::move(vars), std::move(w));
    for (const auto& [e, c] : terms) s.add_term(e, c);
    return s;
  }

  /// A single coefficient times a Laurent monomial.
  static TruncSeries monomial(std::vector<Var> vars, const Exponents& e, const C& c) {
    return polynomial(std::move(vars), std::map<Exponents, C>{{e, c}});
  }

  const std::vector<Var>& vars() const { return vars_; }
  const std::vector<Window>& windows() const { return windows_; }
  std::optional<int> total_hi() const { return total_hi_; }
  const std::map<Exponents, C>& terms() const { return terms_; }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }

  std::size_t index_of(Var v) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == v) return i;
    throw std::invalid_argument("TruncSeries: no variable " + var_name(v));
  }
  bool has_var(Var v) const { return std::find(vars_.begin(), vars_.end(), v) != vars_.end(); }

  /// Whether the coefficient at e is exactly known.
  bool in_window(const Exponents& e) const {
    if (e.size() != vars_.size()) return false;
    long sum = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < windows_[i].lo) return false;
      if (!windows_[i].complete && e[i] > windows_[i].hi) return false;
      sum += e[i];
    }
    return !total_hi_ || sum <= *total_hi_;
  }

  /// Whether the coefficient at e is known: inside the exact region, or
  /// below `lo` in some variable (where it is zero).
  bool known(const Exponents& e) const {
    if (e.size() != vars_.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < windows_[i].lo) return true;
    return in_window(e);
  }

  /// The same series with its variables renamed position by position.
  TruncSeries renamed(std::vector<Var> vars) const {
    if (vars.size() != vars_.size()) throw std::invalid_argument("TruncSeries: rename arity");
    TruncSeries out(std::move(vars), windows_, total_hi_);
    out.truncated_ = truncated_;
    out.terms_ = terms_;
    return out;
  }

  /// Adds c at e. Outside the exact region the term is dropped and the series
  /// flagged; a nonzero term below `lo` is a contract violation.
  void add_term(const Exponents& e, const C& c) {
    if (is_zero(c)) return;
    if (e.size() != vars_.size()) throw std::invalid_argument("TruncSeries: exponent arity");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < windows_[i].lo) throw std::logic_error("TruncSeries: term below window");
      if (windows_[i].complete && e[i] > windows_[i].hi) throw std::logic_error("TruncSeries: term above complete window");
    }
    if (!in_window(e)) {
      truncated_ = true;
      return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C{} : it->second;
  }

  /// Reinterprets the series over a superset of variables; new variables get
  /// the exact window [0,0].
  TruncSeries extended_to(const std::vector<Var>& vars) const {
    std::vector<Window> w;
    std::vector<int> src;
    for (Var v : vars) {
      if (has_var(v)) {
        std::size_t i = index_of(v);
        w.push_back(windows_[i]);
        src.push_back(static_cast<int>(i));
      } else {
        w.push_back(Window{0, 0, true});
        src.push_back(-1);
      }
    }
    for (Var v : vars_)
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        throw std::invalid_argument("TruncSeries: cannot drop variable " + var_name(v));
    TruncSeries out(vars, std::move(w), total_hi_);
    out.truncated_ = truncated_;
    for (const auto& [e, c] : terms_) {
      Exponents f(vars.size(), 0);
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (src[i] >= 0) f[i] = e[static_cast<std::size_t>(src[i])];
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Restricts the exact region to `cap` (hi values and total only lower it).
  TruncSeries capped(const std::vector<Window>& cap, std::optional<int> total = std::nullopt) const {
    if (cap.size() != vars_.size()) throw std::invalid_argument("TruncSeries: cap arity");
    std::vector<Window> w = windows_;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int effective = w[i].complete ? detail::kUnbounded : w[i].hi;
      if (cap[i].hi < effective) {
        w[i].hi = std::max(cap[i].hi, w[i].lo);
        w[i].complete = false;
      }
    }
    std::optional<int> t = total_hi_;
    if (total) t = t ? std::min(*t, *total) : *total;
    TruncSeries out(vars_, std::move(w), t);
    out.truncated_ = truncated_;
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
  }

  TruncSeries& operator+=(const TruncSeries& o) { return accumulate(o, Rational(1)); }
  TruncSeries& operator-=(const TruncSeries& o) { return accumulate(o, Rational(-1)); }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  TruncSeries scaled(const Rational& q) const {
    TruncSeries out(vars_, windows_, total_hi_);
    out.truncated_ = truncated_;
    for (const auto& [e, c] : terms_) out.add_term(e, scale(q, c));
    return out;
  }

 private:
  TruncSeries& accumulate(const TruncSeries& o, const Rational& sign) {
    if (vars_ != o.vars_) throw std::invalid_argument("TruncSeries: adding series over different variables");
    std::vector<Window> w(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const Window& a = windows_[i];
      const Window& b = o.windows_[i];
      w[i].lo = std::min(a.lo, b.lo);
      w[i].complete = a.complete && b.complete;
      if (w[i].complete)
        w[i].hi = std::max(a.hi, b.hi);
      else if (a.complete)
        w[i].hi = b.hi;
      else if (b.complete)
        w[i].hi = a.hi;
      else
        w[i].hi = std::min(a.hi, b.hi);
      w[i].hi = std::max(w[i].hi, w[i].lo);
    }
    std::optional<int> t = total_hi_;
    if (o.total_hi_) t = t ? std::min(*t, *o.total_hi_) : *o.total_hi_;
    TruncSeries out(vars_, std::move(w), t);
    out.truncated_ = truncated_ || o.truncated_;
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    for (const auto& [e, c] : o.terms_) out.add_term(e, scale(sign, c));
    *this = std::move(out);
    return *this;
  }

  std::vector<Var> vars_;
  std::vector<Window> windows_;
  std::optional<int> total_hi_;
  std::map<Exponents, C> terms_;
  bool truncated_ = false;
};

namespace detail {

inline std::vector<Var> merged_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> out = a;
  for (Var v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

inline long lo_sum(const std::vector<Window>& w) {
  long s = 0;
  for (const auto& x : w) s += x.lo;
  return s;
}

}  // namespace detail

/// Cauchy product of a scalar series with a series over any coefficient
/// space, restricted to the region where it is exact (and optionally to
/// `cap`). Module-valued times module-valued products do not type-check.
template <Coefficient C>
TruncSeries<C> ts_mul(const TruncSeries<Rational>& a_in, const TruncSeries<C>& b_in,
                      std::optional<std::vector<Window>> cap = std::nullopt) {
  const std::vector<Var> vars = detail::merged_vars(a_in.vars(), b_in.vars());
  const TruncSeries<Rational> a = a_in.extended_to(vars);
  const TruncSeries<C> b = b_in.extended_to(vars);
  std::vector<Window> w(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Window& wa = a.windows()[i];
    const Window& wb = b.windows()[i];
    w[i].lo = wa.lo + wb.lo;
    w[i].complete = wa.complete && wb.complete;
    if (w[i].complete) {
      w[i].hi = wa.hi + wb.hi;
    } else {
      int from_a = wa.complete ? detail::kUnbounded : wa.hi + wb.lo;
      int from_b = wb.complete ? detail::kUnbounded : wb.hi + wa.lo;
      w[i].hi = std::min(from_a, from_b);
    }
    if (cap) {
      if ((*cap)[i].hi < w[i].hi) {
        w[i].hi = (*cap)[i].hi;
        w[i].complete = false;
      }
    }
    w[i].hi = std::max(w[i].hi, w[i].lo);
  }
  std::optional<int> total;
  if (a.total_hi()) total = static_cast<int>(*a.total_hi() + detail::lo_sum(b.windows()));
  if (b.total_hi()) {
    int t = static_cast<int>(*b.total_hi() + detail::lo_sum(a.windows()));
    total = total ? std::min(*total, t) : t;
  }
  TruncSeries<C> out(vars, std::move(w), total);
  if (a.truncated() || b.truncated()) out.mark_truncated();
  Exponents e(vars.size());
  for (const auto& [ea, qa] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, scale(qa, cb));
    }
  }
  return out;
}

/// e^{a(x1 - x2)} expanded to total order `order`:
/// sum_{i+j<=order} a^{i+j} (-1)^j x1^i x2^j / (i! j!).
inline TruncSeries<Rational> ts_exp_diff(int a, int order, Var first = Var::x1, Var second = Var::x2) {
  if (order < 0) throw std::invalid_argument("ts_exp_diff: negative order");
  TruncSeries<Rational> s({first, second}, {Window{0, order}, Window{0, order}}, order);
  if (a == 0) {
    s = TruncSeries<Rational>({first, second}, {Window{0, 0, true}, Window{0, 0, true}});
    s.add_term({0, 0}, Rational(1));
    return s;
  }
  const Rational ar(a);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) {
      Rational c = power(ar, i + j) / (factorial(i) * factorial(j));
      if (j % 2 == 1) c = -c;
      s.add_term({i, j}, c);
    }
  }
  return s;
}

/// Substitution x1 = x2 e^{x0}: x1^n x2^k -> x2^{n+k} sum_j n^j x0^j / j!,
/// with x0 kept to `x0_order`. The input must be a series in x1 (and
/// optionally x2) whose x1-window is complete.
template <Coefficient C>
TruncSeries<C> ts_substitute_phi(const TruncSeries<C>& a_in, int x0_order) {
  if (x0_order < 0) throw std::invalid_argument("ts_substitute_phi: negative order");
  for (Var v : a_in.vars())
    if (v != Var::x1 && v != Var::x2) throw std::invalid_argument("ts_substitute_phi: series must be in x1, x2");
  const TruncSeries<C> a = a_in.extended_to({Var::x1, Var::x2});
  if (a.total_hi()) throw std::invalid_argument("ts_substitute_phi: total-order windows unsupported");
  const Window w1 = a.windows()[0];
  const Window w2 = a.windows()[1];
  if (!w1.complete) throw std::invalid_argument("ts_substitute_phi: x1 exponents must be finite (complete window)");
  Window out2{w1.lo + w2.lo, 0, w2.complete};
  out2.hi = w2.complete ? w1.hi + w2.hi : w1.lo + w2.hi;
  out2.hi = std::max(out2.hi, out2.lo);
  TruncSeries<C> out({Var::x0, Var::x2}, {Window{0, x0_order}, out2});
  if (a.truncated()) out.mark_truncated();
  for (const auto& [e, c] : a.terms()) {
    const Rational n(e[0]);
    for (int j = 0; j <= x0_order; ++j) {
      Rational q = power(n, j) / factorial(j);
      out.add_term({j, e[0] + e[1]}, scale(q, c));
    }
  }
  return out;
}

/// Outcome of a coefficientwise comparison.
struct IdentityReport {
  bool pass = true;
  std::size_t compared = 0;  // exponent vectors with a stored term on either side
  Exponents first_mismatch;
  std::string lhs_coeff;
  std::string rhs_coeff;
};

/// Compares two series coefficientwise wherever both are known, restricted
/// to `window` if given. The first mismatch reported is the first in lhs
/// exponent order, then rhs order. Throws std::invalid_argument when the
/// series live over different variables or the intersection is empty.
template <PrintableCoefficient C>
IdentityReport check_identity(const TruncSeries<C>& lhs, const TruncSeries<C>& rhs,
                              std::optional<std::vector<Window>> window = std::nullopt) {
  if (lhs.vars() != rhs.vars()) throw std::invalid_argument("check_identity: incomparable variable sets");
  const std::size_t nv = lhs.vars().size();
  if (window && window->size() != nv) throw std::invalid_argument("check_identity: window arity");
  std::vector<int> lo(nv), hi(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    const Window& a = lhs.windows()[i];
    const Window& b = rhs.windows()[i];
    lo[i] = std::min(a.lo, b.lo);
    int ha = a.complete ? detail::kUnbounded : a.hi;
    int hb = b.complete ? detail::kUnbounded : b.hi;
    hi[i] = std::min(ha, hb);
    if (a.complete && b.complete) hi[i] = std::max(a.hi, b.hi);
    if (window) {
      lo[i] = std::max(lo[i], (*window)[i].lo);
      hi[i] = std::min(hi[i], (*window)[i].hi);
    }
    if (lo[i] > hi[i]) throw std::invalid_argument("check_identity: incomparable windows (empty intersection)");
  }
  auto inside = [&](const Exponents& e) {
    for (std::size_t i = 0; i < nv; ++i)
      if (e[i] < lo[i] || e[i] > hi[i]) return false;
    return lhs.known(e) && rhs.known(e);
  };
  // lhs terms in exponent order, then the terms present only on the rhs
  std::vector<Exponents> keys;
  for (const auto& [e, c] : lhs.terms()) keys.push_back(e);
  for (const auto& [e, c] : rhs.terms())
    if (!lhs.terms().count(e)) keys.push_back(e);
  IdentityReport rep;
  for (const auto& e : keys) {
    if (!inside(e)) continue;
    ++rep.compared;
    C l = lhs.coefficient(e);
    C r = rhs.coefficient(e);
    C diff = l;
    diff += scale(Rational(-1), r);
    if (!is_zero(diff)) {
      rep.pass = false;
      rep.first_mismatch = e;
      rep.lhs_coeff = to_string(l);
      rep.rhs_coeff = to_string(r);
      return rep;
    }
  }
  return rep;
}

template <PrintableCoefficient C>
std::string to_string(const TruncSeries<C>& s) {
  if (s.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) os << "*" << var_name(s.vars()[i]) << "^" << e[i];
  }
  return os.str();
}

}  // namespace glinf
