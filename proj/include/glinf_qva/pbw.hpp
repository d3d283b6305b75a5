#pragma once

// Generalized Verma modules M(l, lambda) for gl~^e_inf, with the vacuum module
// V(l,0) = M(l,0) as the lambda = 0 case.
//
// As a vector space M(l, lambda) = S(E (x) t^{-1} Q[t^{-1}]); vectors are
// rational combinations of sorted monomials B(m1,r1)...B(mk,rk).v with every
// r_i <= -1. Generators are ordered by mode first, then row index.
//
// Action of X = e_p (x) g on a monomial B(a).w:
//   X B(a) w = B(a) (X w) + [X, B(a)] w,
// with B(a) (.) re-sorted by ordered insertion, which itself commutes past
// smaller generators through the bracket. On the highest-weight vector the
// modes of g act directly: modes <= -1 create, mode 0 multiplies by
// lambda_p, modes >= 1 kill; k acts as l. Every bracket call strictly
// shortens the monomial it acts on, so the recursion terminates.

#include <glinf_qva/exppoly.hpp>
#include <glinf_qva/glinf_e.hpp>
#include <glinf_qva/linear_combination.hpp>
#include <glinf_qva/rational.hpp>
#include <glinf_qva/series.hpp>

#include <compare>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace glinf {

/// B(m,r); ordered by (r, m).
struct Generator {
  int m = 0;
  int r = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    if (auto c = a.r <=> b.r; c != 0) return c;
    return a.m <=> b.m;
  }
};

using PBWMonomial = std::vector<Generator>;

/// Longer monomials first, then lexicographic; the highest-weight vector last.
struct MonomialOrder {
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

class PBWVector : public LinearCombination<PBWMonomial, MonomialOrder> {
 public:
  using LinearCombination::LinearCombination;

  friend PBWVector operator+(PBWVector a, const PBWVector& b) {
    a += b;
    return a;
  }
  friend PBWVector operator-(PBWVector a, const PBWVector& b) {
    a -= b;
    return a;
  }
  friend PBWVector operator*(const Rational& q, PBWVector a) {
    a *= q;
    return a;
  }
  friend bool operator==(const PBWVector& a, const PBWVector& b) {
    return static_cast<const LinearCombination&>(a) == static_cast<const LinearCombination&>(b);
  }

  /// Largest monomial length present (0 for the zero vector).
  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& [mono, q] : *this) d = std::max(d, mono.size());
    return d;
  }
};

inline bool is_zero(const PBWVector& v) { return v.is_zero(); }
inline PBWVector scale(const Rational& q, const PBWVector& v) { return q * v; }

inline bool is_canonical_monomial(const PBWMonomial& mono) {
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i].r > -1) return false;
    if (i > 0 && mono[i] < mono[i - 1]) return false;
  }
  return true;
}

/// `B[0,-1]B[1,-1].1 - B[0,-1].1 + B[1,-1].1 - 2.1`; the highest-weight vector
/// alone is `1`, a fractional multiple of it `5/2 .1`.
inline std::string to_string(const PBWVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, q] : v) {
    Rational mag = q.sign() < 0 ? -q : q;
    if (first)
      out += q.sign() < 0 ? "-" : "";
    else
      out += q.sign() < 0 ? " - " : " + ";
    first = false;
    if (mono.empty()) {
      if (mag == Rational(1))
        out += "1";
      else
        out += mag.str() + (mag.is_integer() ? ".1" : " .1");
      continue;
    }
    if (mag != Rational(1)) out += mag.str() + "*";
    for (const auto& g : mono) out += "B[" + std::to_string(g.m) + "," + std::to_string(g.r) + "]";
    out += ".1";
  }
  return out;
}

struct ModuleParams {
  Rational level;
  std::map<int, Rational> lambda;  // finite support, default 0

  Rational lambda_at(int n) const {
    auto it = lambda.find(n);
    return it == lambda.end() ? Rational(0) : it->second;
  }
};

class VermaModule {
 public:
  explicit VermaModule(ModuleParams params) : params_(std::move(params)) {
    for (auto it = params_.lambda.begin(); it != params_.lambda.end();)
      it = it->second.is_zero() ? params_.lambda.erase(it) : std::next(it);
  }

  const ModuleParams& params() const { return params_; }

  static PBWVector highest_weight() { return PBWVector(PBWMonomial{}, Rational(1)); }

  /// b^{(m)} = B(m,-1).1
  static PBWVector b(int m) { return PBWVector(PBWMonomial{Generator{m, -1}}, Rational(1)); }

  static PBWVector monomial_vector(const PBWMonomial& mono, Rational q = 1) {
    if (!is_canonical_monomial(mono)) throw std::invalid_argument("PBW monomial is not canonically ordered");
    return PBWVector(mono, std::move(q));
  }

  PBWVector act(const GlInfEElem& x, const PBWVector& v) const {
    PBWVector out;
    for (const auto& [mono, q] : v) {
      PBWVector piece = act_on_monomial(x, mono);
      piece *= q;
      out += piece;
    }
    return out;
  }

  PBWVector mode_apply(int m, int r, const PBWVector& v) const { return act(GlInfEElem::B(m, r), v); }

  /// Applies the generators right to left to the highest-weight vector.
  PBWVector apply_word(const std::vector<Generator>& word) const {
    PBWVector v = highest_weight();
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = mode_apply(it->m, it->r, v);
    return v;
  }

  /// sum_{n in [lo,hi]} B(m,n) v x^{-n-1}. The window claims that modes above
  /// `hi` annihilate v, which holds on V(l,0) for hi >= -1.
  TruncSeries<PBWVector> vertex_series(int m, const PBWVector& v, int lo, int hi) const {
    if (lo > hi) throw std::invalid_argument("vertex_series: lo > hi");
    TruncSeries<PBWVector> s({Var::x}, {Window{-hi - 1, -lo - 1}});
    for (int n = lo; n <= hi; ++n) s.add_term({-n - 1}, mode_apply(m, n, v));
    return s;
  }

  /// b^{(m)}_k b^{(n)} = B(m,k) B(n,-1).1
  PBWVector composite_mode(int m, int k, int n) const { return mode_apply(m, k, b(n)); }

  /// Left multiplication by a creation generator (r <= -1).
  PBWVector create(const Generator& a, const PBWVector& v) const {
    if (a.r > -1) throw std::invalid_argument("create: generator is not a creation mode");
    PBWVector out;
    for (const auto& [mono, q] : v) {
      PBWVector piece = create_monomial(a, mono);
      piece *= q;
      out += piece;
    }
    return out;
  }

  std::size_t cache_size() const {
    std::lock_guard lock(mutex_);
    return act_cache_.size() + create_cache_.size();
  }

 private:
  using ActKey = std::tuple<int, int, int, PBWMonomial>;
  using CreateKey = std::pair<Generator, PBWMonomial>;

  PBWVector act_on_monomial(const GlInfEElem& x, const PBWMonomial& mono) const {
    PBWVector out;
    for (const auto& [p, g] : x.parts) {
      for (const auto& [term, q] : g) {
        PBWVector piece = act_basis(p, term, mono);
        piece *= q;
        out += piece;
      }
    }
    if (!x.central.is_zero()) out.add_term(mono, x.central * params_.level);
    return out;
  }

  /// (e_p (x) t^r e^{ct}) . mono
  PBWVector act_basis(int p, const ExpTerm& term, const PBWMonomial& mono) const {
    if (term.c == 0 && term.r <= -1) return create_monomial(Generator{p, term.r}, mono);
    ActKey key{p, term.r, term.c, mono};
    {
      std::lock_guard lock(mutex_);
      if (auto it = act_cache_.find(key); it != act_cache_.end()) return it->second;
    }
    PBWVector out;
    if (mono.empty()) {
      for (int n = term.r; n <= -1; ++n) {
        Rational q = exp_term_mode(term, n);
        if (!q.is_zero()) out.add_term(PBWMonomial{Generator{p, n}}, q);
      }
      if (term.r <= 0) {
        Rational lam = params_.lambda_at(p);
        if (!lam.is_zero()) out.add_term(PBWMonomial{}, lam * exp_term_mode(term, 0));
      }
    } else {
      const Generator head = mono.front();
      const PBWMonomial rest(mono.begin() + 1, mono.end());
      out = create(head, act_basis(p, term, rest));
      GlInfEElem br = e_bracket_parts(p, ExpPoly(term, Rational(1)), head.m, ExpPoly::monomial(head.r));
      out += act_on_monomial(br, rest);
    }
    std::lock_guard lock(mutex_);
    act_cache_.emplace(std::move(key), out);
    return out;
  }

  /// B(a) . mono for a creation generator a.
  PBWVector create_monomial(const Generator& a, const PBWMonomial& mono) const {
    if (mono.empty() || !(mono.front() < a)) {
      PBWMonomial out;
      out.reserve(mono.size() + 1);
      out.push_back(a);
      out.insert(out.end(), mono.begin(), mono.end());
      return PBWVector(out, Rational(1));
    }
    CreateKey key{a, mono};
    {
      std::lock_guard lock(mutex_);
      if (auto it = create_cache_.find(key); it != create_cache_.end()) return it->second;
    }
    // B(a) B(h) w = B(h) B(a) w + [B(a), B(h)] w  with h < a
    const Generator head = mono.front();
    const PBWMonomial rest(mono.begin() + 1, mono.end());
    PBWVector out = create(head, create_monomial(a, rest));
    GlInfEElem br = e_bracket_parts(a.m, ExpPoly::monomial(a.r), head.m, ExpPoly::monomial(head.r));
    out += act_on_monomial(br, rest);
    std::lock_guard lock(mutex_);
    create_cache_.emplace(std::move(key), out);
    return out;
  }

  ModuleParams params_;
  mutable std::mutex mutex_;
  mutable std::map<ActKey, PBWVector> act_cache_;
  mutable std::map<CreateKey, PBWVector> create_cache_;
};

}  // namespace glinf
