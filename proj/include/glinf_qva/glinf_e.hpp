#pragma once

// The Lie algebra gl~^e_inf = E (x) Q((t)) + Qk, computed inside the
// bracket-closed subring R = span{t^r e^{ct}} of Q((t)).
//
// For X = e_m (x) g and Y = e_n (x) h the defining double residue
//
//   Res_{x1} Res_{x2} g(x1) h(x2) e^{(m-n)(x1-x2)} (B_t(m,x2) - B_t(n,x1) + f(m,n) k)
//
// factorises, using Res_x u(x) B_t(p,x) = e_p (x) u(t), into
//
//   [X, Y] = R_g e_m (x) h e^{(n-m)t} - R_h e_n (x) g e^{(m-n)t} + R_g R_h f(m,n) k,
//   R_g = Res_t g e^{(m-n)t},   R_h = Res_t h e^{(n-m)t}.
//
// Closure: both terms multiply by e^{+-(m-n)t} with an integer rate and the
// residues are rational, so R is preserved.

#include <glinf_qva/exppoly.hpp>
#include <glinf_qva/glinf.hpp>
#include <glinf_qva/rational.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace glinf {

struct GlInfEElem {
  std::map<int, ExpPoly> parts;  // m -> g(t) for e_m (x) g(t)
  Rational central;

  /// B(m,r) = e_m (x) t^r.
  static GlInfEElem B(int m, int r, Rational q = 1) { return EB(m, r, 0, std::move(q)); }
  /// e_m (x) t^r e^{ct}.
  static GlInfEElem EB(int m, int r, int c, Rational q = 1) {
    GlInfEElem x;
    x.add(m, ExpPoly::monomial(r, c, std::move(q)));
    return x;
  }
  static GlInfEElem K(Rational q = 1) {
    GlInfEElem x;
    x.central = std::move(q);
    return x;
  }

  void add(int m, const ExpPoly& g) {
    if (g.is_zero()) return;
    auto [it, inserted] = parts.try_emplace(m, g);
    if (!inserted) {
      it->second += g;
      if (it->second.is_zero()) parts.erase(it);
    }
  }

  bool is_zero() const { return parts.empty() && central.is_zero(); }

  GlInfEElem& operator+=(const GlInfEElem& o) {
    for (const auto& [m, g] : o.parts) add(m, g);
    central += o.central;
    return *this;
  }
  GlInfEElem& operator-=(const GlInfEElem& o) {
    for (const auto& [m, g] : o.parts) add(m, Rational(-1) * g);
    central -= o.central;
    return *this;
  }
  GlInfEElem& operator*=(const Rational& q) {
    if (q.is_zero()) {
      parts.clear();
      central = 0;
      return *this;
    }
    for (auto& [m, g] : parts) g *= q;
    central *= q;
    return *this;
  }
  friend GlInfEElem operator+(GlInfEElem a, const GlInfEElem& b) { return a += b; }
  friend GlInfEElem operator-(GlInfEElem a, const GlInfEElem& b) { return a -= b; }
  friend GlInfEElem operator*(const Rational& q, GlInfEElem a) { return a *= q; }
  friend bool operator==(const GlInfEElem&, const GlInfEElem&) = default;
};

inline bool is_zero(const GlInfEElem& a) { return a.is_zero(); }
inline GlInfEElem scale(const Rational& q, const GlInfEElem& a) { return q * a; }

/// [e_m (x) g, e_n (x) h] for single parts.
inline GlInfEElem e_bracket_parts(int m, const ExpPoly& g, int n, const ExpPoly& h) {
  GlInfEElem out;
  const Rational rg = ep_residue_twisted(g, m - n);
  const Rational rh = ep_residue_twisted(h, n - m);
  if (!rg.is_zero()) out.add(m, rg * ep_mul_exp(h, n - m));
  if (!rh.is_zero()) out.add(n, (-rh) * ep_mul_exp(g, m - n));
  if (!rg.is_zero() && !rh.is_zero()) out.central += rg * rh * Rational(f_fn(m, n));
  return out;
}

inline GlInfEElem e_bracket(const GlInfEElem& x, const GlInfEElem& y) {
  GlInfEElem out;
  for (const auto& [m, g] : x.parts)
    for (const auto& [n, h] : y.parts) out += e_bracket_parts(m, g, n, h);
  return out;
}

/// [[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y]; zero for a Lie algebra.
inline GlInfEElem jacobi_residual(const GlInfEElem& x, const GlInfEElem& y, const GlInfEElem& z) {
  GlInfEElem out = e_bracket(e_bracket(x, y), z);
  out += e_bracket(e_bracket(y, z), x);
  out += e_bracket(e_bracket(z, x), y);
  return out;
}

/// Largest n with X in gl~^e[n], where gl~^e[n] = E (x) t^n Q[[t]] (+ Qk when
/// n <= 0). std::nullopt stands for +infinity (the zero element).
inline std::optional<int> filtration_degree(const GlInfEElem& x) {
  if (x.is_zero()) return std::nullopt;
  std::optional<int> deg;
  for (const auto& [m, g] : x.parts) {
    int d = ep_lowest_degree(g);
    deg = deg ? std::min(*deg, d) : d;
  }
  if (!x.central.is_zero()) deg = deg ? std::min(*deg, 0) : 0;
  return deg;
}

/// Projection of X onto the modes e_m (x) t^p with p in [lo, hi]; the result
/// has only pure t^p terms.
inline GlInfEElem mode_projection(const GlInfEElem& x, int lo, int hi) {
  GlInfEElem out;
  out.central = x.central;
  for (const auto& [m, g] : x.parts) {
    ExpPoly proj;
    for (const auto& [p, q] : ep_mode_window(g, lo, hi)) proj.add_term(ExpTerm{p, 0}, q);
    out.add(m, proj);
  }
  return out;
}

/// `B[m,r]` for e_m (x) t^r, `EB[m;r;c]` for e_m (x) t^r e^{ct}, `K` last.
inline std::string to_string(const GlInfEElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  auto emit = [&](const Rational& q, const std::string& atom) {
    Rational mag = q.sign() < 0 ? -q : q;
    if (first)
      out += q.sign() < 0 ? "-" : "";
    else
      out += q.sign() < 0 ? " - " : " + ";
    first = false;
    if (mag != Rational(1)) out += mag.str() + "*";
    out += atom;
  };
  for (const auto& [m, g] : a.parts) {
    for (const auto& [term, q] : g) {
      if (term.c == 0)
        emit(q, "B[" + std::to_string(m) + "," + std::to_string(term.r) + "]");
      else
        emit(q, "EB[" + std::to_string(m) + ";" + std::to_string(term.r) + ";" + std::to_string(term.c) + "]");
    }
  }
  if (!a.central.is_zero()) emit(a.central, "K");
  return out;
}

}  // namespace glinf
