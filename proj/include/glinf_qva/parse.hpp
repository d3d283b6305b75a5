#pragma once

// Text grammars. Every parser accepts exactly what the matching printer
// emits (plus insignificant whitespace) and reports the failing byte offset.
//
//   rational   p | -p | p/q
//   glinf      [coef*]E[i,j] | [coef*]K, joined by + and -
//   glinf-e    B[m,r] | EB[m;r;c] | K with the same coefficient syntax
//   word       B[m,r] B[m',r'] ...            (applied right to left)
//   pbw        [coef*]B[..]B[..].1 | [coef ].1 | coef, joined by + and -
//   zoo        per module: v[k] | x[1]*x[3]^2 | v[1]^v[2] | x[0]^{1/2-1}*x[4]
//   selector   cinf | sym:r | ext:r | vsa:{"j":"alpha_j",...}
//   lambda     {"n":"p/q",...}

#include <glinf_qva/glinf.hpp>
#include <glinf_qva/glinf_e.hpp>
#include <glinf_qva/pbw.hpp>
#include <glinf_qva/rational.hpp>
#include <glinf_qva/zoo.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <climits>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glinf {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : s_(text) {}

  std::size_t pos() const { return i_; }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ == s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  /// Next character without skipping whitespace.
  char peek_raw() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  bool starts_with(std::string_view t) {
    skip_ws();
    return s_.substr(i_, t.size()) == t;
  }
  bool accept(std::string_view t) {
    if (!starts_with(t)) return false;
    i_ += t.size();
    return true;
  }
  void expect(std::string_view t) {
    if (!accept(t)) fail("expected '" + std::string(t) + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(i_, what); }

  int integer() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) {
      i_ = start;
      fail("expected integer");
    }
    long long v = 0;
    try {
      v = std::stoll(std::string(s_.substr(start, i_ - start)));
    } catch (const std::out_of_range&) {
      i_ = start;
      fail("integer out of range");
    }
    if (v < INT_MIN / 4 || v > INT_MAX / 4) {
      i_ = start;
      fail("integer out of range");
    }
    return static_cast<int>(v);
  }

  bool at_digit() {
    skip_ws();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }

  /// Unsigned p or p/q.
  Rational unsigned_rational() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start) fail("expected number");
    if (i_ < s_.size() && s_[i_] == '/') {
      ++i_;
      std::size_t den = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ == den) fail("expected denominator");
    }
    try {
      return Rational::parse(s_.substr(start, i_ - start));
    } catch (const std::invalid_argument& e) {
      i_ = start;
      fail(e.what());
    }
  }

  Rational signed_rational() {
    bool neg = false;
    if (accept("-"))
      neg = true;
    else
      accept("+");
    Rational q = unsigned_rational();
    return neg ? -q : q;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

/// Parses `term ((+|-) term)*` with an optional leading sign; each term is an
/// optional `coef*` followed by whatever `atom` consumes. `atom` receives the
/// signed coefficient.
template <class Atom>
void parse_sum(Cursor& c, Atom&& atom) {
  if (c.at_end()) c.fail("empty expression");
  bool first = true;
  while (!c.at_end()) {
    Rational sign(1);
    if (c.accept("-"))
      sign = Rational(-1);
    else if (!c.accept("+") && !first)
      c.fail("expected '+' or '-'");
    first = false;
    Rational coef(1);
    bool explicit_coef = false;
    if (c.at_digit()) {
      coef = c.unsigned_rational();
      explicit_coef = true;
    }
    atom(c, sign * coef, explicit_coef);
  }
}

/// The printers render the zero element as `0`.
inline bool zero_literal(Cursor& c) {
  if (!c.accept("0")) return false;
  c.finish();
  return true;
}

inline std::pair<int, int> bracket_pair(Cursor& c, std::string_view sep = ",") {
  c.expect("[");
  int a = c.integer();
  c.expect(sep);
  int b = c.integer();
  c.expect("]");
  return {a, b};
}

}  // namespace detail

inline Rational parse_rational(std::string_view text) {
  detail::Cursor c(text);
  Rational q = c.signed_rational();
  c.finish();
  return q;
}

inline GlInfElem parse_glinf(std::string_view text) {
  detail::Cursor c(text);
  GlInfElem out;
  if (detail::zero_literal(c)) return out;
  detail::parse_sum(c, [&](detail::Cursor& c, const Rational& q, bool explicit_coef) {
    if (explicit_coef) c.expect("*");
    if (c.accept("K")) {
      out.central += q;
      return;
    }
    if (!c.accept("E")) c.fail("expected E[i,j] or K");
    auto [i, j] = detail::bracket_pair(c);
    out.matrix.add_term(MatrixUnit{i, j}, q);
  });
  return out;
}

inline GlInfEElem parse_glinf_e(std::string_view text) {
  detail::Cursor c(text);
  GlInfEElem out;
  if (detail::zero_literal(c)) return out;
  detail::parse_sum(c, [&](detail::Cursor& c, const Rational& q, bool explicit_coef) {
    if (explicit_coef) c.expect("*");
    if (c.accept("K")) {
      out.central += q;
      return;
    }
    if (c.accept("EB")) {
      c.expect("[");
      int m = c.integer();
      c.expect(";");
      int r = c.integer();
      c.expect(";");
      int k = c.integer();
      c.expect("]");
      out.add(m, ExpPoly::monomial(r, k, q));
      return;
    }
    if (!c.accept("B")) c.fail("expected B[m,r], EB[m;r;c] or K");
    auto [m, r] = detail::bracket_pair(c);
    out.add(m, ExpPoly::monomial(r, 0, q));
  });
  return out;
}

/// Space-separated generators, leftmost applied last.
inline std::vector<Generator> parse_word(std::string_view text) {
  detail::Cursor c(text);
  std::vector<Generator> word;
  while (!c.at_end()) {
    if (!c.accept("B")) c.fail("expected B[m,r]");
    auto [m, r] = detail::bracket_pair(c);
    word.push_back(Generator{m, r});
  }
  return word;
}

inline PBWVector parse_pbw(std::string_view text) {
  detail::Cursor c(text);
  PBWVector out;
  if (detail::zero_literal(c)) return out;
  detail::parse_sum(c, [&](detail::Cursor& c, const Rational& q, bool explicit_coef) {
    if (c.accept(".1")) {
      out.add_term(PBWMonomial{}, q);
      return;
    }
    if (!explicit_coef || c.accept("*")) {
      PBWMonomial mono;
      while (c.starts_with("B")) {
        c.expect("B");
        auto [m, r] = detail::bracket_pair(c);
        mono.push_back(Generator{m, r});
      }
      if (mono.empty()) {
        if (explicit_coef) c.fail("expected B[m,r]");
        c.fail("expected a coefficient or B[m,r]");
      }
      if (!is_canonical_monomial(mono)) c.fail("monomial is not in canonical order");
      c.expect(".1");
      out.add_term(mono, q);
      return;
    }
    // a bare coefficient denotes a multiple of the highest-weight vector
    out.add_term(PBWMonomial{}, q);
  });
  return out;
}

/// Vectors in the module's own grammar: `v[3]`, `x[1]*x[3]^2`, `v[0]^v[2]`,
/// and for VSA `x[0]^{1/2-1}*x[4]` (a bare `x[0]^{1/2}` means offset 0).
inline ZooVector parse_zoo(const ZooModule& mod, std::string_view text) {
  detail::Cursor c(text);
  ZooVector out;
  if (detail::zero_literal(c)) return out;
  const std::size_t s_size = mod.alpha().size();
  auto parse_label = [&](detail::Cursor& c) {
    ZooLabel l;
    switch (mod.kind()) {
      case ZooKind::CInf: {
        c.expect("v");
        c.expect("[");
        l.indices.push_back(c.integer());
        c.expect("]");
        return l;
      }
      case ZooKind::Ext: {
        do {
          c.expect("v");
          c.expect("[");
          l.indices.push_back(c.integer());
          c.expect("]");
        } while (c.accept("^"));
        return l;
      }
      case ZooKind::Sym:
      case ZooKind::VSA: {
        std::vector<std::optional<int>> offs(s_size);
        do {
          const std::size_t at = c.pos();
          c.expect("x");
          c.expect("[");
          int j = c.integer();
          c.expect("]");
          auto it = mod.alpha().find(j);
          if (it != mod.alpha().end()) {
            c.expect("^");
            c.expect("{");
            if (c.signed_rational() != it->second) c.fail("exponent base must be alpha_" + std::to_string(j));
            bool neg = false;
            int off = 0;
            if (!c.accept("}")) {
              if (c.accept("-"))
                neg = true;
              else
                c.expect("+");
              off = c.integer();
              c.expect("}");
            }
            auto idx = static_cast<std::size_t>(std::distance(mod.alpha().begin(), it));
            if (offs[idx]) throw ParseError(at, "repeated factor x[" + std::to_string(j) + "]");
            offs[idx] = neg ? -off : off;
            continue;
          }
          int mult = 1;
          if (c.peek() == '^' && c.peek_raw() == '^') {
            c.expect("^");
            mult = c.integer();
            if (mult < 1) c.fail("exponent must be positive");
          }
          for (int k = 0; k < mult; ++k) l.indices.push_back(j);
        } while (c.accept("*"));
        for (std::size_t k = 0; k < s_size; ++k) {
          if (!offs[k]) c.fail("every element of S needs a factor x[j]^{alpha+a}");
          l.offsets.push_back(*offs[k]);
        }
        std::sort(l.indices.begin(), l.indices.end());
        return l;
      }
    }
    return l;
  };
  detail::parse_sum(c, [&](detail::Cursor& c, const Rational& q, bool explicit_coef) {
    ZooLabel l;
    const std::size_t at = c.pos();
    if (explicit_coef && !c.accept("*")) {
      // bare coefficient: the empty product
    } else if (!explicit_coef && c.accept("1")) {
      // `1` itself
    } else {
      l = parse_label(c);
    }
    try {
      mod.validate(l);
    } catch (const ShapeError& e) {
      throw ShapeError(std::string(e.what()) + " (term at position " + std::to_string(at) + ")");
    }
    out.add_term(l, q);
  });
  return out;
}

inline ZooModule parse_selector(std::string_view text) {
  auto tail_int = [&](std::size_t skip) {
    detail::Cursor c(text.substr(skip));
    int r = c.integer();
    c.finish();
    if (r < 0) throw ParseError(skip, "degree must be non-negative");
    return r;
  };
  if (text == "cinf") return ZooModule::cinf();
  if (text.substr(0, 4) == "sym:") return ZooModule::sym(tail_int(4));
  if (text.substr(0, 4) == "ext:") return ZooModule::ext(tail_int(4));
  if (text.substr(0, 4) == "vsa:") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text.substr(4));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(4 + e.byte, "malformed vsa JSON");
    }
    if (!j.is_object() || j.empty()) throw ParseError(4, "vsa expects a nonempty JSON object {\"j\":\"alpha_j\"}");
    std::map<int, Rational> alpha;
    for (const auto& [k, v] : j.items()) {
      int idx = detail::Cursor(k).integer();
      if (std::to_string(idx) != k) throw ParseError(4, "vsa key is not an integer: " + k);
      if (!v.is_string()) throw ParseError(4, "vsa exponents must be rational strings");
      Rational a = parse_rational(v.get<std::string>());
      if (a.is_integer()) throw ParseError(4, "alpha_" + k + " must not be an integer");
      alpha[idx] = a;
    }
    return ZooModule::vsa(std::move(alpha));
  }
  throw ParseError(0, "unknown module selector (cinf, sym:r, ext:r, vsa:{...})");
}

/// {"n": "p/q", ...}; integer JSON values are accepted as well.
inline std::map<int, Rational> parse_lambda(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "malformed lambda JSON");
  }
  if (!j.is_object()) throw ParseError(0, "lambda must be a JSON object");
  std::map<int, Rational> out;
  for (const auto& [k, v] : j.items()) {
    int idx = 0;
    try {
      detail::Cursor c(k);
      idx = c.integer();
      c.finish();
    } catch (const ParseError&) {
      throw ParseError(0, "lambda key is not an integer: " + k);
    }
    Rational q;
    if (v.is_string())
      q = parse_rational(v.get<std::string>());
    else if (v.is_number_integer())
      q = Rational(v.get<long>());
    else
      throw ParseError(0, "lambda values must be rational strings");
    if (!q.is_zero()) out[idx] = q;
  }
  return out;
}

inline std::string format_lambda(const std::map<int, Rational>& lambda) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : lambda) j[std::to_string(k)] = v.str();
  return j.dump();
}

}  // namespace glinf
