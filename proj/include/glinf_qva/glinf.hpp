#pragma once

// The centrally extended Lie algebra gl~_inf = gl_inf + Qk.

#include <glinf_qva/linear_combination.hpp>
#include <glinf_qva/rational.hpp>

#include <compare>
#include <string>
#include <utility>

namespace glinf {

/// f(m,n) = 1 if m <= 0 < n, -1 if n <= 0 < m, 0 otherwise.
constexpr int f_fn(int m, int n) {
  if (m <= 0 && n >= 1) return 1;
  if (n <= 0 && m >= 1) return -1;
  return 0;
}

/// The 2-cocycle on basis elements: psi(E_{i,j}, E_{m,n}) = d_{i,n} d_{j,m} f(i,j).
constexpr int psi(int i, int j, int m, int n) { return (i == n && j == m) ? f_fn(i, j) : 0; }

/// Matrix unit E_{i,j}; ordered row-major.
struct MatrixUnit {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const MatrixUnit&, const MatrixUnit&) = default;
};

struct GlInfElem {
  LinearCombination<MatrixUnit> matrix;
  Rational central;

  static GlInfElem E(int i, int j, Rational q = 1) {
    GlInfElem x;
    x.matrix.add_term(MatrixUnit{i, j}, q);
    return x;
  }
  static GlInfElem K(Rational q = 1) {
    GlInfElem x;
    x.central = std::move(q);
    return x;
  }

  bool is_zero() const { return matrix.is_zero() && central.is_zero(); }

  GlInfElem& operator+=(const GlInfElem& o) {
    matrix += o.matrix;
    central += o.central;
    return *this;
  }
  GlInfElem& operator-=(const GlInfElem& o) {
    matrix -= o.matrix;
    central -= o.central;
    return *this;
  }
  GlInfElem& operator*=(const Rational& q) {
    matrix *= q;
    central *= q;
    return *this;
  }
  friend GlInfElem operator+(GlInfElem a, const GlInfElem& b) { return a += b; }
  friend GlInfElem operator-(GlInfElem a, const GlInfElem& b) { return a -= b; }
  friend GlInfElem operator*(const Rational& q, GlInfElem a) { return a *= q; }
  friend bool operator==(const GlInfElem&, const GlInfElem&) = default;
};

inline bool is_zero(const GlInfElem& a) { return a.is_zero(); }
inline GlInfElem scale(const Rational& q, const GlInfElem& a) { return q * a; }

/// Bilinear extension of
/// [E_{m,n}, E_{r,s}] = d_{n,r} E_{m,s} - d_{m,s} E_{r,n} + psi(E_{m,n}, E_{r,s}) k.
inline GlInfElem gl_bracket(const GlInfElem& a, const GlInfElem& b) {
  GlInfElem out;
  for (const auto& [u, p] : a.matrix) {
    for (const auto& [v, q] : b.matrix) {
      Rational pq = p * q;
      if (u.j == v.i) out.matrix.add_term(MatrixUnit{u.i, v.j}, pq);
      if (u.i == v.j) out.matrix.add_term(MatrixUnit{v.i, u.j}, -pq);
      if (int c = psi(u.i, u.j, v.i, v.j); c != 0) out.central += pq * Rational(c);
    }
  }
  return out;
}

/// Bracket without the central term.
inline GlInfElem gl_bracket_matrix(const GlInfElem& a, const GlInfElem& b) {
  GlInfElem out = gl_bracket(a, b);
  out.central = 0;
  return out;
}

/// psi extended bilinearly (central parts ignored).
inline Rational psi_form(const GlInfElem& a, const GlInfElem& b) {
  Rational out;
  for (const auto& [u, p] : a.matrix)
    for (const auto& [v, q] : b.matrix)
      if (int c = psi(u.i, u.j, v.i, v.j); c != 0) out += p * q * Rational(c);
  return out;
}

/// Coefficient of x^e in E(m,x) = sum_n E_{m,m+n} x^{-n}.
inline GlInfElem genfn_coefficient(int m, int e) { return GlInfElem::E(m, m - e); }

/// Coefficient of x1^a x2^b in [E(m,x1), E(n,x2)].
inline GlInfElem genfn_commutator_lhs(int m, int n, int a, int b) {
  return gl_bracket(genfn_coefficient(m, a), genfn_coefficient(n, b));
}

/// Coefficient of x1^a x2^b in (x1/x2)^{m-n} (E(m,x2) - E(n,x1) + f(m,n) k).
inline GlInfElem genfn_commutator_rhs(int m, int n, int a, int b) {
  const int d = m - n;
  const int alpha = a - d;
  const int beta = b + d;
  GlInfElem out;
  if (alpha == 0) out += genfn_coefficient(m, beta);
  if (beta == 0) out -= genfn_coefficient(n, alpha);
  if (alpha == 0 && beta == 0) out.central += Rational(f_fn(m, n));
  return out;
}

/// Z-grading deg E_{i,j} = j - i; k has degree 0.
struct GlDegree {
  enum class Kind { homogeneous, mixed, zero };
  Kind kind = Kind::zero;
  int value = 0;
  friend bool operator==(const GlDegree&, const GlDegree&) = default;
};

inline GlDegree gl_degree(const GlInfElem& a) {
  if (a.is_zero()) return {GlDegree::Kind::zero, 0};
  bool have = false;
  int d = 0;
  auto see = [&](int deg) {
    if (!have) {
      have = true;
      d = deg;
      return true;
    }
    return deg == d;
  };
  if (!a.central.is_zero()) see(0);
  for (const auto& [u, q] : a.matrix)
    if (!see(u.j - u.i)) return {GlDegree::Kind::mixed, 0};
  return {GlDegree::Kind::homogeneous, d};
}

/// Canonical text: `3/2*E[0,1] + K - E[2,2]` style, matrix units in row-major
/// order, central term last, `0` for zero.
inline std::string to_string(const GlInfElem& a) {
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
  for (const auto& [u, q] : a.matrix) emit(q, "E[" + std::to_string(u.i) + "," + std::to_string(u.j) + "]");
  if (!a.central.is_zero()) emit(a.central, "K");
  return out;
}

}  // namespace glinf
