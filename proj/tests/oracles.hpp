#pragma once

// Independent reference computations. These deliberately avoid the library's
// closed forms: exponentials are expanded by their recurrence, products are
// plain Cauchy products over mpq_class, and module actions are re-derived
// from the defining differential operators.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Coefficients a_0..a_order of e^{ct}: a_{k+1} = a_k c / (k+1).
inline std::vector<mpq_class> exp_coeffs(long c, int order) {
  std::vector<mpq_class> a(static_cast<std::size_t>(order + 1));
  a[0] = 1;
  for (int k = 0; k < order; ++k) {
    a[k + 1] = a[k] * mpq_class(c) / mpq_class(k + 1);
    a[k + 1].canonicalize();
  }
  return a;
}

/// Coefficient of t^n in t^r e^{ct}.
inline mpq_class term_mode(int r, long c, int n) {
  if (n < r) return 0;
  return exp_coeffs(c, n - r)[static_cast<std::size_t>(n - r)];
}

/// Res_t t^r e^{ct} e^{dt} by multiplying the two exponential series.
inline mpq_class twisted_residue(int r, long c, long d) {
  if (r > -1) return 0;
  const int need = -r - 1;
  auto a = exp_coeffs(c, need), b = exp_coeffs(d, need);
  mpq_class acc = 0;
  for (int i = 0; i <= need; ++i) acc += a[i] * b[need - i];
  return acc;
}

/// Laurent series in one variable, truncated: exponent -> coefficient.
using Series1 = std::map<int, mpq_class>;

inline Series1 mul(const Series1& a, const Series1& b, int hi) {
  Series1 out;
  for (const auto& [i, p] : a)
    for (const auto& [j, q] : b)
      if (i + j <= hi) out[i + j] += p * q;
  return out;
}

inline Series1 exp_series(long c, int order) {
  Series1 s;
  auto a = exp_coeffs(c, order);
  for (int k = 0; k <= order; ++k) s[k] = a[k];
  return s;
}

/// g = t^r e^{ct} as a truncated series up to t^hi.
inline Series1 exp_term(int r, long c, int hi) {
  Series1 s;
  if (hi < r) return s;
  auto a = exp_coeffs(c, hi - r);
  for (int k = 0; k <= hi - r; ++k) s[r + k] = a[k];
  return s;
}

/// Components of [e_m (x) t^r e^{c t}, e_n (x) t^s e^{d t}] from the double
/// residue
///   Res_{x1} Res_{x2} g(x1) h(x2) e^{(m-n)(x1-x2)} (B_t(m,x2) - B_t(n,x1) + f k)
/// with B_t(p,x) = sum_q (e_p (x) t^q) x^{-q-1}. Returns the t^q coefficient
/// of the e_m part, of the e_n part (for m == n they add up), and k.
struct BracketModes {
  std::map<int, std::map<int, mpq_class>> parts;  // row -> mode -> coefficient
  mpq_class central;
};

inline int f_ref(int m, int n) {
  if (m <= 0 && 0 < n) return 1;
  if (n <= 0 && 0 < m) return -1;
  return 0;
}

inline BracketModes double_residue_bracket(int m, int r, long c, int n, int s, long d, int q_lo, int q_hi) {
  const long a = m - n;
  // Series in x1 and in x2 separately; they multiply as a product of one
  // variable series since g(x1) e^{a x1} and h(x2) e^{-a x2} separate.
  const int hi = q_hi + 2 + (r < 0 ? -r : 0) + (s < 0 ? -s : 0);
  const Series1 g1 = mul(exp_term(r, c, hi), exp_series(a, hi), hi);   // g(x1) e^{a x1}
  const Series1 h2 = mul(exp_term(s, d, hi), exp_series(-a, hi), hi);  // h(x2) e^{-a x2}
  auto coeff = [](const Series1& f, int e) {
    auto it = f.find(e);
    return it == f.end() ? mpq_class(0) : it->second;
  };
  BracketModes out;
  const mpq_class res1 = coeff(g1, -1), res2 = coeff(h2, -1);
  for (int q = q_lo; q <= q_hi; ++q) {
    // B_t(m,x2) contributes e_m (x) t^q with Res_{x2} h2(x2) x2^{-q-1} = [x2^q] h2.
    mpq_class from_m = res1 * coeff(h2, q);
    // -B_t(n,x1) contributes e_n (x) t^q with -[x1^q] g1 times Res_{x2} h2.
    mpq_class from_n = -coeff(g1, q) * res2;
    if (from_m != 0) out.parts[m][q] += from_m;
    if (from_n != 0) out.parts[n][q] += from_n;
  }
  out.central = res1 * res2 * f_ref(m, n);
  return out;
}

/// Polynomial in variables x_i with exponent vectors, for Sym(r) and VSA
/// actions: monomial (sorted (index, exponent) pairs) -> coefficient.
using Monomial = std::map<int, mpq_class>;  // index -> exponent (rational for VSA)
using Poly = std::map<Monomial, mpq_class>;

/// x_i d/dx_j applied to a polynomial with rational exponents.
inline Poly x_d(int i, int j, const Poly& p) {
  Poly out;
  for (const auto& [mono, q] : p) {
    auto it = mono.find(j);
    if (it == mono.end() || it->second == 0) continue;
    Monomial nm = mono;
    mpq_class e = it->second;
    nm[j] -= 1;
    if (nm[j] == 0) nm.erase(j);
    nm[i] += 1;
    if (nm[i] == 0) nm.erase(i);
    out[nm] += q * e;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// E_{i,j} on a wedge of basis vectors, by expanding the derivation and
/// sorting with an explicit transposition count.
inline std::map<std::vector<int>, mpq_class> wedge_E(int i, int j, const std::vector<int>& wedge) {
  std::map<std::vector<int>, mpq_class> out;
  for (std::size_t pos = 0; pos < wedge.size(); ++pos) {
    if (wedge[pos] != j) continue;
    std::vector<int> v = wedge;
    v[pos] = i;
    int swaps = 0;
    bool dup = false;
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b) {
        if (v[a] == v[b]) dup = true;
        if (v[a] > v[b]) ++swaps;  // inversions
      }
    if (dup) continue;
    std::sort(v.begin(), v.end());
    out[v] += (swaps % 2 ? -1 : 1);
  }
  return out;
}

}  // namespace oracle
