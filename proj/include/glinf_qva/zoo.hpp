#pragma once

// Concrete gl_inf-modules in the category C_fin (every E(m,x) acts by Laurent
// polynomials), viewed as level-0 modules of gl~_inf and, through
// Bbar(m,x) = E(m,e^x), as restricted modules of gl~^e_inf.
//
//   CInf     the natural module, basis v_k, E_{i,j} v_k = d_{j,k} v_i
//   Sym(r)   degree-r polynomials in x_n (n in Z), E_{i,j} = x_i d/dx_j
//   Ext(r)   r-th exterior power, E_{i,j} acting by derivations
//   VSA      prod_{j in S} x_j^{alpha_j} Q[x_j^{+-1} | j in S] (x) Q[x_n | n not in S],
//            alpha_j not integral, E_{i,j} = x_i d/dx_j

#include <glinf_qva/exppoly.hpp>
#include <glinf_qva/glinf.hpp>
#include <glinf_qva/glinf_e.hpp>
#include <glinf_qva/linear_combination.hpp>
#include <glinf_qva/rational.hpp>
#include <glinf_qva/series.hpp>

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glinf {

/// Basis label. CInf: indices = {k}. Sym: sorted multiset of size r.
/// Ext: strictly increasing r-tuple. VSA: offsets[i] is the integer shift a_j
/// of the exponent alpha_j + a_j for the i-th element of S (ascending), and
/// indices is a sorted multiset over Z \ S.
struct ZooLabel {
  std::vector<int> offsets;
  std::vector<int> indices;
  friend auto operator<=>(const ZooLabel&, const ZooLabel&) = default;
};

class ZooVector : public LinearCombination<ZooLabel> {
 public:
  using LinearCombination::LinearCombination;

  friend ZooVector operator+(ZooVector a, const ZooVector& b) {
    a += b;
    return a;
  }
  friend ZooVector operator-(ZooVector a, const ZooVector& b) {
    a -= b;
    return a;
  }
  friend ZooVector operator*(const Rational& q, ZooVector a) {
    a *= q;
    return a;
  }
  friend bool operator==(const ZooVector& a, const ZooVector& b) {
    return static_cast<const LinearCombination&>(a) == static_cast<const LinearCombination&>(b);
  }
};

inline bool is_zero(const ZooVector& v) { return v.is_zero(); }
inline ZooVector scale(const Rational& q, const ZooVector& v) { return q * v; }

/// Raised when a vector does not have the shape of the module's basis.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a caller-supplied bound or hypothesis does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct LevelWitness {
  int m = 0;  // negative index outside S
  int n = 0;  // positive index outside S
  std::set<int> support;
  ZooVector forced_central;  // k.w implied by the bracket; zero for a consistent module
};

enum class ZooKind { CInf, Sym, Ext, VSA };

class ZooModule {
 public:
  static ZooModule cinf() { return ZooModule(ZooKind::CInf, 1, {}); }
  static ZooModule sym(int r) {
    if (r < 0) throw std::invalid_argument("sym: negative degree");
    return ZooModule(ZooKind::Sym, r, {});
  }
  static ZooModule ext(int r) {
    if (r < 0) throw std::invalid_argument("ext: negative degree");
    return ZooModule(ZooKind::Ext, r, {});
  }
  static ZooModule vsa(std::map<int, Rational> alpha) {
    if (alpha.empty()) throw std::invalid_argument("vsa: S must be nonempty");
    for (const auto& [j, a] : alpha)
      if (a.is_integer()) throw std::invalid_argument("vsa: alpha_" + std::to_string(j) + " must not be an integer");
    return ZooModule(ZooKind::VSA, 0, std::move(alpha));
  }

  ZooKind kind() const { return kind_; }
  int rank() const { return rank_; }
  const std::map<int, Rational>& alpha() const { return alpha_; }

  /// cinf, sym:r, ext:r, vsa:{"j":"alpha_j",...}
  std::string selector() const;

  void validate(const ZooLabel& l) const {
    auto sorted = [](const std::vector<int>& v) { return std::is_sorted(v.begin(), v.end()); };
    switch (kind_) {
      case ZooKind::CInf:
        if (!l.offsets.empty() || l.indices.size() != 1) throw ShapeError("cinf vectors are single basis vectors v[k]");
        return;
      case ZooKind::Sym:
        if (!l.offsets.empty() || static_cast<int>(l.indices.size()) != rank_ || !sorted(l.indices))
          throw ShapeError("sym:" + std::to_string(rank_) + " needs monomials of degree " + std::to_string(rank_));
        return;
      case ZooKind::Ext:
        if (!l.offsets.empty() || static_cast<int>(l.indices.size()) != rank_ ||
            std::adjacent_find(l.indices.begin(), l.indices.end(), std::greater_equal<>()) != l.indices.end())
          throw ShapeError("ext:" + std::to_string(rank_) + " needs strictly increasing wedges of length " +
                           std::to_string(rank_));
        return;
      case ZooKind::VSA:
        if (l.offsets.size() != alpha_.size() || !sorted(l.indices))
          throw ShapeError("vsa label must carry one exponent per element of S");
        for (int i : l.indices)
          if (alpha_.count(i)) throw ShapeError("vsa polynomial part must avoid S");
        return;
    }
  }

  void validate(const ZooVector& w) const {
    for (const auto& [l, q] : w) validate(l);
  }

  /// E_{i,j} w.
  ZooVector act_E(int i, int j, const ZooVector& w) const {
    validate(w);
    ZooVector out;
    for (const auto& [l, q] : w) act_label(i, j, l, q, out);
    return out;
  }

  /// Action of gl~_inf at level 0.
  ZooVector act_gl(const GlInfElem& x, const ZooVector& w) const {
    ZooVector out;
    for (const auto& [u, q] : x.matrix) {
      ZooVector piece = act_E(u.i, u.j, w);
      piece *= q;
      out += piece;
    }
    return out;
  }

  /// Indices j for which d/dx_j (E_{.,j}) can act nontrivially on w.
  std::set<int> support(const ZooVector& w) const {
    std::set<int> s;
    for (const auto& [l, q] : w) {
      s.insert(l.indices.begin(), l.indices.end());
      if (kind_ == ZooKind::VSA)
        for (const auto& [j, a] : alpha_) s.insert(j);
    }
    return s;
  }

  /// E(m,x) w = sum_n E_{m,m+n} w x^{-n}, an exact Laurent polynomial.
  TruncSeries<ZooVector> E_series(int m, const ZooVector& w) const {
    std::map<Exponents, ZooVector> terms;
    for (int j : support(w)) {
      ZooVector c = act_E(m, j, w);
      if (!c.is_zero()) terms[{-(j - m)}] += c;
    }
    if (terms.empty()) return TruncSeries<ZooVector>({Var::x}, {Window{0, 0, true}});
    return TruncSeries<ZooVector>::polynomial({Var::x}, terms);
  }

  /// The same restricted to n in [lo, hi] (x exponents in [-hi, -lo]).
  TruncSeries<ZooVector> E_series(int m, const ZooVector& w, int lo, int hi) const {
    if (lo > hi) throw std::invalid_argument("E_series: lo > hi");
    TruncSeries<ZooVector> s({Var::x}, {Window{-hi, -lo}});
    for (int n = lo; n <= hi; ++n) s.add_term({-n}, act_E(m, m + n, w));
    return s;
  }

  /// Bbar(m,-k-1) w = sum_n (1/k!) (-n)^k E_{m,m+n} w.
  ZooVector bbar_mode(int m, int k, const ZooVector& w) const {
    if (k < 0) throw std::invalid_argument("bbar_mode: k must be non-negative");
    ZooVector out;
    const Rational inv_fact = Rational(1) / factorial(k);
    for (int j : support(w)) {
      const int n = j - m;
      Rational c = power(Rational(-n), k) * inv_fact;
      if (c.is_zero()) continue;
      ZooVector piece = act_E(m, j, w);
      piece *= c;
      out += piece;
    }
    return out;
  }

  /// Bbar(m,r) w; zero for r >= 0.
  ZooVector bbar(int m, int r, const ZooVector& w) const {
    if (r >= 0) return {};
    return bbar_mode(m, -r - 1, w);
  }

  /// Bbar(m,x) w = sum_n E_{m,m+n} w e^{-nx} to order `order` in x.
  TruncSeries<ZooVector> bbar_series(int m, const ZooVector& w, int order) const {
    if (order < 0) throw std::invalid_argument("bbar_series: negative order");
    TruncSeries<ZooVector> s({Var::x}, {Window{0, order}});
    for (int k = 0; k <= order; ++k) s.add_term({k}, bbar_mode(m, k, w));
    return s;
  }

  /// Action of gl~^e_inf at level 0: e_p (x) g acts as sum_{q <= -1} g_q Bbar(p,q).
  ZooVector act_e(const GlInfEElem& x, const ZooVector& w) const {
    ZooVector out;
    for (const auto& [p, g] : x.parts) {
      if (g.is_zero()) continue;
      int lowest = g.begin()->first.r;
      for (const auto& [term, q] : g) lowest = std::min(lowest, term.r);
      for (int q = lowest; q <= -1; ++q) {
        Rational c = ep_mode(g, q);
        if (c.is_zero()) continue;
        ZooVector piece = bbar(p, q, w);
        piece *= c;
        out += piece;
      }
    }
    return out;
  }

  /// Recovers E_{m,m+n} w for n in [-N, N] from the modes Bbar(m,-k-1) w,
  /// k = 0..2N, by an exact solve of sum_n n^k y_n = (-1)^k k! Bbar(m,-k-1) w.
  std::map<int, ZooVector> recover_E(int m, const ZooVector& w, int N) const {
    if (N < 0) throw std::invalid_argument("recover_E: N must be non-negative");
    for (int j : support(w)) {
      const int n = j - m;
      if (std::abs(n) > N && !act_E(m, j, w).is_zero())
        throw PreconditionError("recover_E: E_{" + std::to_string(m) + "," + std::to_string(j) +
                                "} w is nonzero at n = " + std::to_string(n) + " outside [-" + std::to_string(N) +
                                "," + std::to_string(N) + "]");
    }
    const int size = 2 * N + 1;
    // Gauss-Jordan on [V | I] with V[k][i] = n_i^k.
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size),
                                         std::vector<Rational>(static_cast<std::size_t>(2 * size)));
    for (int k = 0; k < size; ++k) {
      for (int i = 0; i < size; ++i) a[k][i] = power(Rational(i - N), k);
      a[k][size + k] = 1;
    }
    for (int col = 0; col < size; ++col) {
      int piv = col;
      while (piv < size && a[piv][col].is_zero()) ++piv;
      if (piv == size) throw std::logic_error("recover_E: singular Vandermonde system");
      std::swap(a[col], a[piv]);
      const Rational inv = Rational(1) / a[col][col];
      for (auto& x : a[col]) x *= inv;
      for (int row = 0; row < size; ++row) {
        if (row == col || a[row][col].is_zero()) continue;
        const Rational f = a[row][col];
        for (int c = 0; c < 2 * size; ++c) a[row][c] -= f * a[col][c];
      }
    }
    std::vector<ZooVector> rhs;
    rhs.reserve(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) {
      Rational sgn_fact = factorial(k);
      if (k % 2 == 1) sgn_fact = -sgn_fact;
      rhs.push_back(sgn_fact * bbar_mode(m, k, w));
    }
    std::map<int, ZooVector> out;
    for (int i = 0; i < size; ++i) {
      ZooVector y;
      for (int k = 0; k < size; ++k) {
        const Rational& c = a[i][size + k];
        if (c.is_zero()) continue;
        y += c * rhs[k];
      }
      out[i - N] = y;
    }
    return out;
  }

  /// For w supported on a finite S, picks m < 0 < n outside S and evaluates
  /// [E_{m,n}, E_{n,m}] w both as a commutator of actions and through the
  /// bracket; the difference is the central action forced on w.
  LevelWitness level_witness(const ZooVector& w, int scan = 64) const {
    validate(w);
    LevelWitness rep;
    rep.support = support(w);
    for (int p = -scan; p <= scan; ++p) {
      if (rep.support.count(p)) continue;
      for (int q = -scan; q <= scan; ++q) {
        if (rep.support.count(q)) continue;
        if (!act_E(p, q, w).is_zero())
          throw PreconditionError("level_witness: E_{" + std::to_string(p) + "," + std::to_string(q) +
                                  "} w != 0 with both indices outside the support");
      }
    }
    int m = -1;
    while (m >= -scan && rep.support.count(m)) --m;
    int n = 1;
    while (n <= scan && rep.support.count(n)) ++n;
    if (m < -scan || n > scan) throw PreconditionError("level_witness: no indices m < 0 < n outside S in scan window");
    rep.m = m;
    rep.n = n;
    ZooVector commutator = act_E(m, n, act_E(n, m, w)) - act_E(n, m, act_E(m, n, w));
    GlInfElem br = gl_bracket(GlInfElem::E(m, n), GlInfElem::E(n, m));
    ZooVector matrix_part = act_gl(br, w);
    rep.forced_central = (Rational(1) / br.central) * (commutator - matrix_part);
    return rep;
  }

  /// Grading degree of a basis label: r for Sym/Ext/CInf, total exponent for VSA.
  Rational degree(const ZooLabel& l) const {
    if (kind_ != ZooKind::VSA) return Rational(static_cast<long>(l.indices.size()));
    Rational d(static_cast<long>(l.indices.size()));
    std::size_t i = 0;
    for (const auto& [j, a] : alpha_) d += a + Rational(l.offsets[i++]);
    return d;
  }

  std::string format(const ZooVector& w) const;

 private:
  ZooModule(ZooKind kind, int rank, std::map<int, Rational> alpha)
      : kind_(kind), rank_(rank), alpha_(std::move(alpha)) {}

  int s_position(int j) const {
    int i = 0;
    for (const auto& [s, a] : alpha_) {
      if (s == j) return i;
      ++i;
    }
    return -1;
  }

  void act_label(int i, int j, const ZooLabel& l, const Rational& q, ZooVector& out) const {
    switch (kind_) {
      case ZooKind::CInf:
        if (l.indices[0] == j) out.add_term(ZooLabel{{}, {i}}, q);
        return;
      case ZooKind::Sym: {
        auto mult = std::count(l.indices.begin(), l.indices.end(), j);
        if (mult == 0) return;
        ZooLabel nl = l;
        nl.indices.erase(std::find(nl.indices.begin(), nl.indices.end(), j));
        nl.indices.insert(std::upper_bound(nl.indices.begin(), nl.indices.end(), i), i);
        out.add_term(nl, q * Rational(static_cast<long>(mult)));
        return;
      }
      case ZooKind::Ext: {
        auto pos = std::find(l.indices.begin(), l.indices.end(), j);
        if (pos == l.indices.end()) return;
        if (i != j && std::find(l.indices.begin(), l.indices.end(), i) != l.indices.end()) return;
        std::vector<int> v = l.indices;
        v[static_cast<std::size_t>(pos - l.indices.begin())] = i;
        // bubble into place, tracking permutation parity
        int sign = 1;
        for (std::size_t a = 0; a < v.size(); ++a)
          for (std::size_t b = 0; b + 1 < v.size() - a; ++b)
            if (v[b] > v[b + 1]) {
              std::swap(v[b], v[b + 1]);
              sign = -sign;
            }
        out.add_term(ZooLabel{{}, v}, q * Rational(sign));
        return;
      }
      case ZooKind::VSA: {
        ZooLabel nl = l;
        Rational c;
        if (int sj = s_position(j); sj >= 0) {
          c = std::next(alpha_.begin(), sj)->second + Rational(l.offsets[static_cast<std::size_t>(sj)]);
          nl.offsets[static_cast<std::size_t>(sj)] -= 1;
        } else {
          auto mult = std::count(l.indices.begin(), l.indices.end(), j);
          if (mult == 0) return;
          c = Rational(static_cast<long>(mult));
          nl.indices.erase(std::find(nl.indices.begin(), nl.indices.end(), j));
        }
        if (int si = s_position(i); si >= 0)
          nl.offsets[static_cast<std::size_t>(si)] += 1;
        else
          nl.indices.insert(std::upper_bound(nl.indices.begin(), nl.indices.end(), i), i);
        out.add_term(nl, q * c);
        return;
      }
    }
  }

  ZooKind kind_;
  int rank_;
  std::map<int, Rational> alpha_;
};

inline std::string ZooModule::selector() const {
  switch (kind_) {
    case ZooKind::CInf: return "cinf";
    case ZooKind::Sym: return "sym:" + std::to_string(rank_);
    case ZooKind::Ext: return "ext:" + std::to_string(rank_);
    case ZooKind::VSA: {
      std::string s = "vsa:{";
      bool first = true;
      for (const auto& [j, a] : alpha_) {
        if (!first) s += ",";
        first = false;
        s += "\"" + std::to_string(j) + "\":\"" + a.str() + "\"";
      }
      return s + "}";
    }
  }
  return {};
}

/// Vector grammar: `v[k]`; `x[1]*x[3]^2`; `v[1]^v[2]`; `x[0]^{1/2-1}*x[4]`.
/// Terms are `coef*basis`, the empty product prints as `1`.
inline std::string ZooModule::format(const ZooVector& w) const {
  if (w.is_zero()) return "0";
  auto label_str = [&](const ZooLabel& l) {
    std::string s;
    auto sep = [&] {
      if (!s.empty()) s += (kind_ == ZooKind::Ext ? "^" : "*");
    };
    if (kind_ == ZooKind::CInf) return "v[" + std::to_string(l.indices[0]) + "]";
    if (kind_ == ZooKind::Ext) {
      for (int i : l.indices) {
        sep();
        s += "v[" + std::to_string(i) + "]";
      }
      return s.empty() ? std::string("1") : s;
    }
    if (kind_ == ZooKind::VSA) {
      std::size_t k = 0;
      for (const auto& [j, a] : alpha_) {
        sep();
        int off = l.offsets[k++];
        s += "x[" + std::to_string(j) + "]^{" + a.str();
        if (off != 0) s += (off < 0 ? "-" : "+") + std::to_string(std::abs(off));
        s += "}";
      }
    }
    for (std::size_t p = 0; p < l.indices.size();) {
      std::size_t q = p;
      while (q < l.indices.size() && l.indices[q] == l.indices[p]) ++q;
      sep();
      s += "x[" + std::to_string(l.indices[p]) + "]";
      if (q - p > 1) s += "^" + std::to_string(q - p);
      p = q;
    }
    return s.empty() ? std::string("1") : s;
  };
  std::string out;
  bool first = true;
  for (const auto& [l, q] : w) {
    Rational mag = q.sign() < 0 ? -q : q;
    if (first)
      out += q.sign() < 0 ? "-" : "";
    else
      out += q.sign() < 0 ? " - " : " + ";
    first = false;
    std::string ls = label_str(l);
    if (mag != Rational(1)) {
      out += mag.str();
      if (ls != "1") out += "*" + ls;
    } else {
      out += ls;
    }
  }
  return out;
}

/// Applies E(m,v) termwise to an exact Laurent polynomial with vector
/// coefficients; the result lives over the variables of s plus v.
inline TruncSeries<ZooVector> apply_E_series(const ZooModule& mod, int m, Var v, const TruncSeries<ZooVector>& s) {
  for (const auto& w : s.windows())
    if (!w.complete) throw std::invalid_argument("apply_E_series: input must be a Laurent polynomial");
  std::vector<Var> vars = s.vars();
  if (!s.has_var(v)) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  const TruncSeries<ZooVector> base = s.extended_to(vars);
  const std::size_t at = base.index_of(v);
  std::map<Exponents, ZooVector> out;
  for (const auto& [e, w] : base.terms()) {
    const TruncSeries<ZooVector> ew = mod.E_series(m, w);
    for (const auto& [f, c] : ew.terms()) {
      Exponents g = e;
      g[at] += f[0];
      out[g] += c;
    }
  }
  return TruncSeries<ZooVector>::polynomial(vars, out);
}

/// Generic text for ZooVector coefficients in reports (module-agnostic).
inline std::string to_string(const ZooVector& w) {
  if (w.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [l, q] : w) {
    if (!first) out += " + ";
    first = false;
    out += q.str() + "*[";
    for (std::size_t i = 0; i < l.offsets.size(); ++i) out += (i ? "," : "") + std::to_string(l.offsets[i]);
    out += "|";
    for (std::size_t i = 0; i < l.indices.size(); ++i) out += (i ? "," : "") + std::to_string(l.indices[i]);
    out += "]";
  }
  return out;
}

}  // namespace glinf
