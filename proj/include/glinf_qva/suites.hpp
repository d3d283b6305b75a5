#pragma once

// Verification suites. Each suite enumerates (or samples, from a seeded
// mt19937_64) a list of independent cases, runs them on GLINF_QVA_WORKERS
// threads and reports failures in case order, so the report for a fixed
// seed is identical whatever the worker count.

#include <glinf_qva/exppoly.hpp>
#include <glinf_qva/glinf.hpp>
#include <glinf_qva/glinf_e.hpp>
#include <glinf_qva/pbw.hpp>
#include <glinf_qva/rational.hpp>
#include <glinf_qva/series.hpp>
#include <glinf_qva/zoo.hpp>

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace glinf::suites {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::size_t kMaxReportedFailures = 20;

struct Params {
  int window = 0;
  Rational level;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct Failure {
  std::string id;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  Params params;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  double wall_ms = 0;

  bool passed() const { return failures.empty(); }
};

inline nlohmann::ordered_json to_json(const Report& r, bool timing) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = r.suite;
  j["params"] = {{"window", r.params.window}, {"level", r.params.level.str()}, {"seed", r.params.seed}};
  j["cases"] = r.cases;
  j["passed"] = r.passed();
  j["failure_count"] = r.failures.size();
  auto& fs = j["failures"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < kMaxReportedFailures; ++i) {
    const Failure& f = r.failures[i];
    fs.push_back({{"case", f.id}, {"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  }
  if (timing) j["wall_time_ms"] = r.wall_ms;
  return j;
}

inline std::string to_text(const Report& r, bool timing) {
  std::string out = "suite: " + r.suite + "\n";
  out += "params: window=" + std::to_string(r.params.window) + " level=" + r.params.level.str() +
         " seed=" + std::to_string(r.params.seed) + "\n";
  out += "cases: " + std::to_string(r.cases) + "\n";
  out += std::string("result: ") + (r.passed() ? "PASS" : "FAIL") + "\n";
  if (!r.passed()) out += "failures: " + std::to_string(r.failures.size()) + "\n";
  for (std::size_t i = 0; i < r.failures.size() && i < kMaxReportedFailures; ++i) {
    const Failure& f = r.failures[i];
    out += "  " + f.id + ": " + f.inputs + "\n    expected: " + f.expected + "\n    actual:   " + f.actual + "\n";
  }
  if (timing) out += "wall_time_ms: " + std::to_string(r.wall_ms) + "\n";
  return out;
}

/// GLINF_QVA_WORKERS, defaulting to 1.
inline unsigned workers_from_env() {
  const char* v = std::getenv("GLINF_QVA_WORKERS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) return 1;
  return static_cast<unsigned>(std::min(n, 256L));
}

using Case = std::function<std::optional<Failure>()>;

inline Report run_cases(std::string name, const Params& params, std::vector<Case> cases) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::optional<Failure>> results(cases.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = cases[i]();
    } catch (const std::exception& e) {
      results[i] = Failure{"case " + std::to_string(i), "", "no exception", std::string("exception: ") + e.what()};
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(params.workers, static_cast<unsigned>(cases.size())));
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) run_one(i);
      });
    for (auto& th : pool) th.join();
  }
  Report r;
  r.suite = std::move(name);
  r.params = params;
  r.cases = cases.size();
  for (auto& f : results)
    if (f) r.failures.push_back(std::move(*f));
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::optional<Failure> expect_equal(std::string id, std::string inputs, const std::string& expected,
                                           const std::string& actual) {
  if (expected == actual) return std::nullopt;
  return Failure{std::move(id), std::move(inputs), expected, actual};
}

template <class T>
std::optional<Failure> expect_zero(std::string id, std::string inputs, const T& value) {
  if (is_zero(value)) return std::nullopt;
  return Failure{std::move(id), std::move(inputs), "0", to_string(value)};
}

template <class C>
std::optional<Failure> expect_identity(std::string id, std::string inputs, const TruncSeries<C>& lhs,
                                       const TruncSeries<C>& rhs,
                                       std::optional<std::vector<Window>> window = std::nullopt) {
  IdentityReport rep = check_identity(lhs, rhs, std::move(window));
  if (rep.pass) return std::nullopt;
  std::string at;
  for (std::size_t i = 0; i < rep.first_mismatch.size(); ++i)
    at += (i ? "," : "") + std::to_string(rep.first_mismatch[i]);
  return Failure{std::move(id), inputs + " at exponent (" + at + ")", rep.lhs_coeff, rep.rhs_coeff};
}

/// Seeded sampling with plain modular reduction, identical on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
    return lo + static_cast<int>(eng_() % span);
  }
  bool coin() { return (eng_() & 1U) != 0; }
  std::uint64_t next() { return eng_(); }

  /// Nonzero p/q with |p| <= 5, q <= 3.
  Rational coefficient() {
    int p = uniform(1, 5) * (coin() ? 1 : -1);
    return Rational(p, uniform(1, 3));
  }

 private:
  std::mt19937_64 eng_;
};

inline std::string str(int v) { return std::to_string(v); }

inline std::string gen_str(const Generator& g) { return "B[" + str(g.m) + "," + str(g.r) + "]"; }

inline std::vector<GlInfEElem> generator_range(int m_lo, int m_hi, int r_lo, int r_hi) {
  std::vector<GlInfEElem> out;
  for (int m = m_lo; m <= m_hi; ++m)
    for (int r = r_lo; r <= r_hi; ++r) out.push_back(GlInfEElem::B(m, r));
  return out;
}

/// Random PBW vector: 1..2 terms, monomials of depth <= max_depth with rows
/// in [-2,2] and modes in [-3,-1].
inline PBWVector random_pbw(Sampler& s, int max_depth, int exact_depth = -1) {
  PBWVector v;
  const int terms = exact_depth >= 0 ? 1 : s.uniform(1, 2);
  for (int t = 0; t < terms; ++t) {
    const int d = exact_depth >= 0 ? exact_depth : s.uniform(0, max_depth);
    PBWMonomial mono;
    for (int i = 0; i < d; ++i) mono.push_back(Generator{s.uniform(-2, 2), s.uniform(-3, -1)});
    std::sort(mono.begin(), mono.end());
    v.add_term(mono, s.coefficient());
  }
  return v;
}

/// The four module kinds exercised by the zoo suites.
inline std::vector<ZooModule> zoo_kinds() {
  return {ZooModule::cinf(), ZooModule::sym(2), ZooModule::ext(2),
          ZooModule::vsa({{0, Rational(1, 2)}, {2, Rational(-1, 3)}})};
}

inline ZooLabel random_label(Sampler& s, const ZooModule& mod, int lo, int hi) {
  ZooLabel l;
  switch (mod.kind()) {
    case ZooKind::CInf: l.indices = {s.uniform(lo, hi)}; break;
    case ZooKind::Sym:
      for (int i = 0; i < mod.rank(); ++i) l.indices.push_back(s.uniform(lo, hi));
      std::sort(l.indices.begin(), l.indices.end());
      break;
    case ZooKind::Ext: {
      if (hi - lo + 1 < mod.rank()) throw std::invalid_argument("random_label: index range too small");
      while (static_cast<int>(l.indices.size()) < mod.rank()) {
        int k = s.uniform(lo, hi);
        if (std::find(l.indices.begin(), l.indices.end(), k) == l.indices.end()) l.indices.push_back(k);
      }
      std::sort(l.indices.begin(), l.indices.end());
      break;
    }
    case ZooKind::VSA: {
      for (std::size_t i = 0; i < mod.alpha().size(); ++i) l.offsets.push_back(s.uniform(-2, 2));
      const int extra = s.uniform(0, 2);
      for (int i = 0; i < extra; ++i) {
        int k = s.uniform(lo, hi);
        if (!mod.alpha().count(k)) l.indices.push_back(k);
      }
      std::sort(l.indices.begin(), l.indices.end());
      break;
    }
  }
  return l;
}

inline ZooVector random_zoo(Sampler& s, const ZooModule& mod, int lo, int hi, int max_terms = 2) {
  ZooVector w;
  const int terms = s.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) w.add_term(random_label(s, mod, lo, hi), s.coefficient());
  if (w.is_zero()) w.add_term(random_label(s, mod, lo, hi), Rational(1));
  return w;
}

// ---------------------------------------------------------------- glinf_core

/// f antisymmetry and additivity, and psi(E_ij, E_ji) = f(i,j).
inline Report f_cocycle(const Params& p) {
  const int W = p.window;
  std::vector<Case> cases;
  for (int m = -W; m <= W; ++m)
    for (int n = -W; n <= W; ++n)
      for (int r = -W; r <= W; ++r)
        cases.push_back([m, n, r]() -> std::optional<Failure> {
          const std::string in = "m=" + str(m) + " n=" + str(n) + " r=" + str(r);
          if (f_fn(m, n) != -f_fn(n, m))
            return Failure{"antisymmetry", in, str(-f_fn(n, m)), str(f_fn(m, n))};
          if (f_fn(m, n) + f_fn(n, r) != f_fn(m, r))
            return Failure{"additivity", in, str(f_fn(m, r)), str(f_fn(m, n) + f_fn(n, r))};
          if (psi(m, n, n, m) != f_fn(m, n)) return Failure{"psi", in, str(f_fn(m, n)), str(psi(m, n, n, m))};
          return std::nullopt;
        });
  return run_cases("f-cocycle", p, std::move(cases));
}

/// Jacobi and the 2-cocycle identity on all basis triples, antisymmetry and
/// grading on all basis pairs, indices in [-W, W].
inline Report gl_jacobi(const Params& p) {
  const int W = p.window;
  std::vector<MatrixUnit> basis;
  for (int i = -W; i <= W; ++i)
    for (int j = -W; j <= W; ++j) basis.push_back({i, j});
  auto name = [](const MatrixUnit& u) { return "E[" + str(u.i) + "," + str(u.j) + "]"; };
  std::vector<Case> cases;
  for (const auto& u : basis)
    for (const auto& v : basis)
      cases.push_back([u, v, name]() -> std::optional<Failure> {
        const GlInfElem a = GlInfElem::E(u.i, u.j), b = GlInfElem::E(v.i, v.j);
        const GlInfElem ab = gl_bracket(a, b);
        const std::string in = name(u) + ", " + name(v);
        if (auto f = expect_zero("antisymmetry", in, ab + gl_bracket(b, a))) return f;
        if (!ab.is_zero() && gl_degree(ab) != GlDegree{GlDegree::Kind::homogeneous, (u.j - u.i) + (v.j - v.i)})
          return Failure{"grading", in, str((u.j - u.i) + (v.j - v.i)), to_string(ab)};
        return std::nullopt;
      });
  for (const auto& u : basis)
    for (const auto& v : basis)
      for (const auto& w : basis)
        cases.push_back([u, v, w, name]() -> std::optional<Failure> {
          const GlInfElem a = GlInfElem::E(u.i, u.j), b = GlInfElem::E(v.i, v.j), c = GlInfElem::E(w.i, w.j);
          const std::string in = name(u) + ", " + name(v) + ", " + name(w);
          GlInfElem jac = gl_bracket(gl_bracket(a, b), c) + gl_bracket(gl_bracket(b, c), a) +
                          gl_bracket(gl_bracket(c, a), b);
          if (auto f = expect_zero("jacobi", in, jac)) return f;
          Rational coc = psi_form(gl_bracket_matrix(a, b), c) + psi_form(gl_bracket_matrix(b, c), a) +
                         psi_form(gl_bracket_matrix(c, a), b);
          return expect_zero("cocycle", in, coc);
        });
  return run_cases("gl-jacobi", p, std::move(cases));
}

/// [E(m,x1), E(n,x2)] = (x1/x2)^{m-n} (E(m,x2) - E(n,x1) + f(m,n) k),
/// coefficient by coefficient for m,n in [-W,W] and exponents in [-W-2, W+2].
inline Report generating_commutator(const Params& p) {
  const int W = p.window;
  const int M = W + 2;
  std::vector<Case> cases;
  for (int m = -W; m <= W; ++m)
    for (int n = -W; n <= W; ++n)
      cases.push_back([m, n, M]() -> std::optional<Failure> {
        const std::vector<Window> box{Window{-M, M}, Window{-M, M}};
        TruncSeries<GlInfElem> lhs({Var::x1, Var::x2}, box), rhs({Var::x1, Var::x2}, box);
        for (int a = -M; a <= M; ++a)
          for (int b = -M; b <= M; ++b) {
            lhs.add_term({a, b}, genfn_commutator_lhs(m, n, a, b));
            rhs.add_term({a, b}, genfn_commutator_rhs(m, n, a, b));
          }
        return expect_identity("coefficient", "m=" + str(m) + " n=" + str(n), lhs, rhs, box);
      });
  return run_cases("lemma2.1", p, std::move(cases));
}

// ------------------------------------------------------------- glinf_e_core

/// Jacobi on all ordered generator triples B(m,r), m in [-W,W], r in
/// [-W-1, W]; antisymmetry on twisted generators; B^+ abelian; Jacobi on
/// sampled triples with exponential rates.
inline Report e_jacobi(const Params& p) {
  const int W = p.window;
  std::vector<Case> cases;
  const auto gens = generator_range(-W, W, -W - 1, W);
  for (int m = -W; m <= W; ++m)
    for (int r = -W - 1; r <= W; ++r)
      for (int c = -1; c <= 1; ++c)
        for (int n = -W; n <= W; ++n)
          for (int s = -W - 1; s <= W; ++s)
            cases.push_back([=]() -> std::optional<Failure> {
              const GlInfEElem x = GlInfEElem::EB(m, r, c), y = GlInfEElem::EB(n, s, -c);
              const std::string in = to_string(x) + ", " + to_string(y);
              if (auto f = expect_zero("antisymmetry", in, e_bracket(x, y) + e_bracket(y, x))) return f;
              if (c == 0 && r >= 0 && s >= 0) return expect_zero("abelian", in, e_bracket(x, y));
              return std::nullopt;
            });
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens)
        cases.push_back([x, y, z]() {
          return expect_zero("jacobi", to_string(x) + ", " + to_string(y) + ", " + to_string(z),
                             jacobi_residual(x, y, z));
        });
  Sampler s(p.seed);
  auto random_elem = [&] {
    GlInfEElem x;
    const int terms = s.uniform(1, 2);
    for (int t = 0; t < terms; ++t) x += GlInfEElem::EB(s.uniform(-W, W), s.uniform(-W - 1, W), s.uniform(-2, 2), s.coefficient());
    if (s.uniform(0, 3) == 0) x += GlInfEElem::K(s.coefficient());
    return x;
  };
  for (int i = 0; i < 200; ++i) {
    GlInfEElem x = random_elem(), y = random_elem(), z = random_elem();
    cases.push_back([x, y, z]() {
      return expect_zero("jacobi-sampled", to_string(x) + ", " + to_string(y) + ", " + to_string(z),
                         jacobi_residual(x, y, z));
    });
  }
  return run_cases("e-jacobi", p, std::move(cases));
}

/// filtration_degree([X,Y]) >= filtration_degree(X) + filtration_degree(Y)
/// on 512 sampled pairs.
inline Report filtration(const Params& p) {
  const int W = p.window;
  Sampler s(p.seed);
  auto random_elem = [&] {
    GlInfEElem x;
    const int terms = s.uniform(1, 3);
    for (int t = 0; t < terms; ++t)
      x += GlInfEElem::EB(s.uniform(-W, W), s.uniform(-W - 1, W), s.uniform(-2, 2), s.coefficient());
    if (s.uniform(0, 4) == 0) x += GlInfEElem::K(s.coefficient());
    return x;
  };
  std::vector<Case> cases;
  for (int i = 0; i < 512; ++i) {
    GlInfEElem x = random_elem(), y = random_elem();
    cases.push_back([x, y]() -> std::optional<Failure> {
      const auto dx = filtration_degree(x), dy = filtration_degree(y);
      const GlInfEElem xy = e_bracket(x, y);
      const auto dxy = filtration_degree(xy);
      if (!dx || !dy || !dxy) return std::nullopt;  // a zero input or bracket
      if (*dxy >= *dx + *dy) return std::nullopt;
      return Failure{"filtration", to_string(x) + ", " + to_string(y), ">= " + str(*dx + *dy),
                     str(*dxy) + " for " + to_string(xy)};
    });
  }
  return run_cases("filtration", p, std::move(cases));
}

/// Sum_{p in [lo,hi]} B(m,p) x^{-p-1}: the projection of B_t(m,x) onto
/// modes <= hi, exact at and above x^{-hi-1} up to x^{-lo-1}.
inline TruncSeries<GlInfEElem> projected_bt(int m, Var v, int lo, int hi) {
  TruncSeries<GlInfEElem> s({v}, {Window{-hi - 1, -lo - 1}});
  for (int q = lo; q <= hi; ++q) s.add_term({-q - 1}, GlInfEElem::B(m, q));
  return s;
}

/// Closed-form e_bracket against the truncated expansion of
/// e^{(m-n)(x1-x2)} (B_t(m,x2) - B_t(n,x1) + f(m,n) k): components on modes
/// [-W-1, W+3] of [B(m,r), B(n,s)] for m,n in [-W,W], r,s in [-W-1, W+1].
inline Report bracket_series(const Params& p) {
  const int W = p.window;
  const int lo = -W - 1, hi = W + 1, top = W + 3;
  const int order = 3 * W + 4;
  std::vector<Case> cases;
  for (int m = -W; m <= W; ++m)
    for (int n = -W; n <= W; ++n)
      cases.push_back([=]() -> std::optional<Failure> {
        const std::vector<Window> box{Window{-hi - 1, -lo - 1}, Window{-hi - 1, -lo - 1}};
        TruncSeries<GlInfEElem> lhs({Var::x1, Var::x2}, box);
        for (int r = lo; r <= hi; ++r)
          for (int s = lo; s <= hi; ++s)
            lhs.add_term({-r - 1, -s - 1}, mode_projection(e_bracket(GlInfEElem::B(m, r), GlInfEElem::B(n, s)), lo, top));
        const TruncSeries<Rational> ex = ts_exp_diff(m - n, order);
        TruncSeries<GlInfEElem> rhs = ts_mul(ex, projected_bt(m, Var::x2, lo, top).extended_to({Var::x1, Var::x2}));
        rhs -= ts_mul(ex, projected_bt(n, Var::x1, lo, top).extended_to({Var::x1, Var::x2}));
        rhs += ts_mul(ex, TruncSeries<GlInfEElem>::monomial({Var::x1, Var::x2}, {0, 0}, GlInfEElem::K(f_fn(m, n))));
        return expect_identity("eq3.3", "m=" + str(m) + " n=" + str(n), lhs, rhs, box);
      });
  return run_cases("eq3.3", p, std::move(cases));
}

// --------------------------------------------------------------- pbw_engine

/// Representation property on all generator pairs, confluence of 200 random
/// triples and the level action, on V(l,0).
inline Report pbw_confluence(const Params& p) {
  const int W = p.window;
  auto mod = std::make_shared<VermaModule>(ModuleParams{p.level, {}});
  const auto gens = generator_range(-W, W, -W - 1, W);
  Sampler s(p.seed);
  std::vector<Case> cases;
  for (const auto& x : gens)
    for (const auto& y : gens) {
      PBWVector v = random_pbw(s, 3);
      cases.push_back([mod, x, y, v]() {
        PBWVector lhs = mod->act(e_bracket(x, y), v);
        PBWVector rhs = mod->act(x, mod->act(y, v)) - mod->act(y, mod->act(x, v));
        return expect_equal("representation", to_string(x) + ", " + to_string(y) + " on " + to_string(v),
                            to_string(rhs), to_string(lhs));
      });
    }
  for (int i = 0; i < 200; ++i) {
    Generator a{s.uniform(-W, W), s.uniform(-W - 1, W)};
    Generator b{s.uniform(-W, W), s.uniform(-W - 1, W)};
    Generator c{s.uniform(-W, W), s.uniform(-W - 1, W)};
    cases.push_back([mod, a, b, c]() -> std::optional<Failure> {
      // a b c . 1 three ways: directly right to left, and after swapping
      // either adjacent pair through the bracket.
      const std::string in = gen_str(a) + " " + gen_str(b) + " " + gen_str(c);
      const auto B = [](const Generator& g) { return GlInfEElem::B(g.m, g.r); };
      const PBWVector direct = mod->apply_word({a, b, c});
      const PBWVector cv = mod->mode_apply(c.m, c.r, VermaModule::highest_weight());
      const PBWVector left = mod->act(B(b), mod->act(B(a), cv)) + mod->act(e_bracket(B(a), B(b)), cv);
      if (auto f = expect_equal("confluence-left", in, to_string(direct), to_string(left))) return f;
      const PBWVector bv = mod->mode_apply(b.m, b.r, VermaModule::highest_weight());
      const PBWVector right = mod->act(B(a), mod->act(B(c), bv) + mod->act(e_bracket(B(b), B(c)), VermaModule::highest_weight()));
      return expect_equal("confluence-right", in, to_string(direct), to_string(right));
    });
  }
  for (int i = 0; i < 50; ++i) {
    PBWVector v = random_pbw(s, 4);
    cases.push_back([mod, v, level = p.level]() {
      return expect_equal("level", to_string(v), to_string(level * v), to_string(mod->act(GlInfEElem::K(), v)));
    });
  }
  return run_cases("pbw-confluence", p, std::move(cases));
}

/// B(m,r) v = 0 for r in [0,3], m in [-W,W], on monomials of every depth
/// 0..4; k acts as l on the same vectors.
inline Report annihilation(const Params& p) {
  const int W = p.window;
  auto mod = std::make_shared<VermaModule>(ModuleParams{p.level, {}});
  Sampler s(p.seed);
  std::vector<Case> cases;
  for (int depth = 0; depth <= 4; ++depth)
    for (int i = 0; i < 8; ++i) {
      PBWVector v = random_pbw(s, 4, depth);
      for (int m = -W; m <= W; ++m)
        for (int r = 0; r <= 3; ++r)
          cases.push_back([mod, v, m, r]() {
            return expect_zero("annihilation", "B[" + str(m) + "," + str(r) + "] on " + to_string(v),
                               mod->mode_apply(m, r, v));
          });
      cases.push_back([mod, v, level = p.level]() {
        return expect_equal("level", to_string(v), to_string(level * v), to_string(mod->act(GlInfEElem::K(), v)));
      });
    }
  return run_cases("annihilation", p, std::move(cases));
}

/// b^{(m)}_k b^{(n)} = 0 for k in [0, W+1], and
/// [Y(b^m,x1), Y(b^n,x2)] v = e^{(m-n)(x1-x2)} (Y(b^m,x2) - Y(b^n,x1) + f(m,n) l) v
/// on modes [-W-1, W+1] for m,n in [-2,2] and sampled v of depth <= 2.
inline Report vertex_relations(const Params& p) {
  const int W = p.window;
  auto mod = std::make_shared<VermaModule>(ModuleParams{p.level, {}});
  Sampler s(p.seed);
  std::vector<Case> cases;
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n)
      for (int k = 0; k <= W + 1; ++k)
        cases.push_back([mod, m, n, k]() {
          return expect_zero("composite", "b^(" + str(m) + ")_" + str(k) + " b^(" + str(n) + ")",
                             mod->composite_mode(m, k, n));
        });
  const int lo = -W - 1, hi = W + 1;
  const int order = 3 * W + 2;
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n) {
      std::vector<PBWVector> samples{VermaModule::highest_weight(), random_pbw(s, 1, 1), random_pbw(s, 2, 2)};
      for (const auto& v : samples)
        cases.push_back([=, level = p.level]() {
          const std::vector<Window> box{Window{-hi - 1, -lo - 1}, Window{-hi - 1, -lo - 1}};
          TruncSeries<PBWVector> lhs({Var::x1, Var::x2}, box);
          for (int r = lo; r <= hi; ++r)
            for (int t = lo; t <= hi; ++t) {
              PBWVector c = mod->mode_apply(m, r, mod->mode_apply(n, t, v)) - mod->mode_apply(n, t, mod->mode_apply(m, r, v));
              lhs.add_term({-r - 1, -t - 1}, c);
            }
          const TruncSeries<Rational> ex = ts_exp_diff(m - n, order);
          const std::vector<Var> xs{Var::x1, Var::x2};
          TruncSeries<PBWVector> rhs = ts_mul(ex, mod->vertex_series(m, v, lo, hi).renamed({Var::x2}).extended_to(xs));
          rhs -= ts_mul(ex, mod->vertex_series(n, v, lo, hi).renamed({Var::x1}).extended_to(xs));
          rhs += ts_mul(ex, TruncSeries<PBWVector>::monomial(xs, {0, 0}, Rational(f_fn(m, n)) * level * v));
          return expect_identity("commutator", "m=" + str(m) + " n=" + str(n) + " v=" + to_string(v), lhs, rhs, box);
        });
    }
  return run_cases("thm3.10", p, std::move(cases));
}

// -------------------------------------------------------------- module_zoo

inline std::string zoo_in(const ZooModule& mod, const ZooVector& w) { return mod.selector() + " " + mod.format(w); }

/// Representation property (level 0) and grading on all basis pairs with
/// indices in [-W,W], plus the generating-function commutator
/// [E(m,x1), E(n,x2)] w = (x1/x2)^{m-n} (E(m,x2) - E(n,x1)) w as exact
/// Laurent polynomials, on all four module kinds.
inline Report zoo_rep(const Params& p) {
  const int W = p.window;
  Sampler s(p.seed);
  std::vector<Case> cases;
  for (const ZooModule& mod : zoo_kinds()) {
    for (int sample = 0; sample < 2; ++sample) {
      const ZooVector w = random_zoo(s, mod, -W, W);
      for (int a = -W; a <= W; ++a)
        for (int b = -W; b <= W; ++b)
          cases.push_back([=]() -> std::optional<Failure> {
            for (int c = -W; c <= W; ++c)
              for (int d = -W; d <= W; ++d) {
                const GlInfElem x = GlInfElem::E(a, b), y = GlInfElem::E(c, d);
                const ZooVector lhs = mod.act_gl(gl_bracket(x, y), w);
                const ZooVector rhs = mod.act_E(a, b, mod.act_E(c, d, w)) - mod.act_E(c, d, mod.act_E(a, b, w));
                if (!(lhs == rhs))
                  return Failure{"representation", to_string(x) + ", " + to_string(y) + " on " + zoo_in(mod, w),
                                 mod.format(rhs), mod.format(lhs)};
              }
            for (const auto& [src, q] : w)
              for (const auto& [l, c] : mod.act_E(a, b, ZooVector(src, q)))
                if (mod.degree(l) != mod.degree(src))
                  return Failure{"grading", "E[" + str(a) + "," + str(b) + "] on " + zoo_in(mod, w),
                                 mod.degree(src).str(), mod.degree(l).str()};
            return std::nullopt;
          });
      for (int m = -W; m <= W; ++m)
        for (int n = -W; n <= W; ++n)
          cases.push_back([=]() {
            const std::vector<Var> xs{Var::x1, Var::x2};
            const auto em2 = mod.E_series(m, w).renamed({Var::x2});
            const auto en1 = mod.E_series(n, w).renamed({Var::x1});
            TruncSeries<ZooVector> lhs = apply_E_series(mod, m, Var::x1, mod.E_series(n, w).renamed({Var::x2}));
            lhs -= apply_E_series(mod, n, Var::x2, mod.E_series(m, w).renamed({Var::x1}));
            const auto shift = TruncSeries<Rational>::monomial(xs, {m - n, n - m}, Rational(1));
            TruncSeries<ZooVector> rhs = ts_mul(shift, em2.extended_to(xs) - en1.extended_to(xs));
            return expect_identity("coefficient", "m=" + str(m) + " n=" + str(n) + " " + zoo_in(mod, w), lhs, rhs);
          });
    }
  }
  return run_cases("zoo-rep", p, std::move(cases));
}

/// Bbar(m,x) w as a series in `v`.
inline TruncSeries<ZooVector> bbar_in(const ZooModule& mod, int m, const ZooVector& w, int order, Var v) {
  return mod.bbar_series(m, w, order).renamed({v});
}

/// [Bbar(m,x1), Bbar(n,x2)] w = e^{(m-n)(x1-x2)} (Bbar(m,x2) - Bbar(n,x1)) w
/// to total order 2W+2 on CInf and Sym(2); and the representation property
/// of gl~^e acting through Bbar on all kinds.
inline Report bbar_bracket(const Params& p) {
  const int W = p.window;
  const int order = 2 * W + 2;
  Sampler s(p.seed);
  std::vector<Case> cases;
  for (const ZooModule& mod : {ZooModule::cinf(), ZooModule::sym(2)}) {
    for (int sample = 0; sample < 2; ++sample) {
      const ZooVector w = random_zoo(s, mod, -3, 3);
      for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n)
          cases.push_back([=]() {
            const std::vector<Var> xs{Var::x1, Var::x2};
            TruncSeries<ZooVector> lhs(xs, {Window{0, order}, Window{0, order}}, order);
            for (int i = 0; i <= order; ++i)
              for (int j = 0; i + j <= order; ++j)
                lhs.add_term({i, j}, mod.bbar_mode(m, i, mod.bbar_mode(n, j, w)) - mod.bbar_mode(n, j, mod.bbar_mode(m, i, w)));
            const auto inner = bbar_in(mod, m, w, order, Var::x2).extended_to(xs) -
                               bbar_in(mod, n, w, order, Var::x1).extended_to(xs);
            const auto rhs = ts_mul(ts_exp_diff(m - n, order), inner);
            return expect_identity("bbar-bracket", "m=" + str(m) + " n=" + str(n) + " " + zoo_in(mod, w), lhs, rhs);
          });
    }
  }
  for (const ZooModule& mod : zoo_kinds()) {
    for (int i = 0; i < 50; ++i) {
      const ZooVector w = random_zoo(s, mod, -3, 3);
      const GlInfEElem x = GlInfEElem::EB(s.uniform(-2, 2), s.uniform(-3, 1), s.uniform(-1, 1), s.coefficient());
      const GlInfEElem y = GlInfEElem::EB(s.uniform(-2, 2), s.uniform(-3, 1), s.uniform(-1, 1), s.coefficient());
      cases.push_back([=]() -> std::optional<Failure> {
        const ZooVector lhs = mod.act_e(e_bracket(x, y), w);
        const ZooVector rhs = mod.act_e(x, mod.act_e(y, w)) - mod.act_e(y, mod.act_e(x, w));
        if (lhs == rhs) return std::nullopt;
        return Failure{"e-representation", to_string(x) + ", " + to_string(y) + " on " + zoo_in(mod, w),
                       mod.format(rhs), mod.format(lhs)};
      });
    }
  }
  return run_cases("prop5.2", p, std::move(cases));
}

/// recover_E round trips against act_E for 30 samples per kind with
/// N <= W, and reports the precondition when N is too small.
inline Report recovery(const Params& p) {
  const int W = p.window;
  Sampler s(p.seed);
  std::vector<Case> cases;
  for (const ZooModule& mod : zoo_kinds()) {
    int made = 0;
    while (made < 30) {
      const int m = s.uniform(-2, 2);
      const ZooVector w = random_zoo(s, mod, m - W, m + W);
      int needed = 0;
      for (int j : mod.support(w))
        if (!mod.act_E(m, j, w).is_zero()) needed = std::max(needed, std::abs(j - m));
      if (needed > W) continue;
      const int N = s.uniform(needed, W);
      ++made;
      cases.push_back([=]() -> std::optional<Failure> {
        const std::string in = "m=" + str(m) + " N=" + str(N) + " " + zoo_in(mod, w);
        const auto rec = mod.recover_E(m, w, N);
        for (int n = -N; n <= N; ++n) {
          const ZooVector direct = mod.act_E(m, m + n, w);
          if (!(rec.at(n) == direct)) return Failure{"round-trip n=" + str(n), in, mod.format(direct), mod.format(rec.at(n))};
        }
        if (needed == 0) return std::nullopt;
        try {
          mod.recover_E(m, w, needed - 1);
        } catch (const PreconditionError&) {
          return std::nullopt;
        }
        return Failure{"precondition", in + " with N=" + str(needed - 1), "PreconditionError", "no error"};
      });
    }
  }
  return run_cases("recovery", p, std::move(cases));
}

/// level_witness forces k = 0 on 25 sampled vectors of every kind.
inline Report level_witness(const Params& p) {
  const int W = p.window;
  Sampler s(p.seed);
  std::vector<Case> cases;
  for (const ZooModule& mod : zoo_kinds())
    for (int i = 0; i < 25; ++i) {
      const ZooVector w = random_zoo(s, mod, -W, W);
      cases.push_back([=]() {
        const LevelWitness rep = mod.level_witness(w);
        return expect_equal("witness", zoo_in(mod, w) + " via m=" + str(rep.m) + " n=" + str(rep.n), "0",
                            mod.format(rep.forced_central));
      });
    }
  return run_cases("level-witness", p, std::move(cases));
}

/// S_trig-locality at level 0: for k in {0,1},
///   (x1-x2)^k E(m,x1)E(n,x2) w = (x1-x2)^k sum_i f_i(x1/x2) Y(v_i,x2) Y(u_i,x1) w
/// with (f_i, v_i, u_i) = (1, b^n, b^m), (z^{m-n}, b^m, 1), (-z^{m-n}, 1, b^n),
/// (f(m,n) l z^{m-n}, 1, 1) and Y(b^p, x) = E(p, x).
inline Report strig_locality(const Params& p) {
  const int W = p.window;
  Sampler s(p.seed);
  std::vector<Case> cases;
  for (const ZooModule& mod : zoo_kinds()) {
    const ZooVector w = random_zoo(s, mod, -W, W);
    for (int m = -W; m <= W; ++m)
      for (int n = -W; n <= W; ++n)
        for (int k = 0; k <= 1; ++k)
          cases.push_back([=]() {
            const std::vector<Var> xs{Var::x1, Var::x2};
            const Rational level(0);
            auto Y = [&](std::optional<int> row, Var v, const TruncSeries<ZooVector>& in) {
              return row ? apply_E_series(mod, *row, v, in) : in.extended_to(xs);
            };
            const auto id = TruncSeries<ZooVector>::monomial(xs, {0, 0}, w);
            const auto zmn = TruncSeries<Rational>::monomial(xs, {m - n, n - m}, Rational(1));
            const auto one = TruncSeries<Rational>::monomial(xs, {0, 0}, Rational(1));
            struct Term {
              TruncSeries<Rational> f;
              std::optional<int> v, u;
            };
            const std::vector<Term> terms{{one, n, m},
                                          {zmn, m, std::nullopt},
                                          {zmn.scaled(-1), std::nullopt, n},
                                          {zmn.scaled(Rational(f_fn(m, n)) * level), std::nullopt, std::nullopt}};
            TruncSeries<ZooVector> rhs = TruncSeries<ZooVector>::polynomial(xs, std::map<Exponents, ZooVector>{});
            for (const auto& t : terms) rhs += ts_mul(t.f, Y(t.v, Var::x2, Y(t.u, Var::x1, id)));
            TruncSeries<ZooVector> lhs = Y(m, Var::x1, Y(n, Var::x2, id));
            std::map<Exponents, Rational> diff;
            for (int i = 0; i <= k; ++i) diff[{k - i, i}] = (i % 2 ? Rational(-1) : Rational(1)) * factorial(k) / (factorial(i) * factorial(k - i));
            const auto pk = TruncSeries<Rational>::polynomial(xs, diff);
            return expect_identity("strig", "m=" + str(m) + " n=" + str(n) + " k=" + str(k) + " " + zoo_in(mod, w),
                                   ts_mul(pk, lhs), ts_mul(pk, rhs));
          });
  }
  return run_cases("strig-locality", p, std::move(cases));
}

// ----------------------------------------------------------------- registry

struct SuiteInfo {
  const char* name;
  int default_window;
  Report (*run)(const Params&);
};

inline const std::vector<SuiteInfo>& registry() {
  static const std::vector<SuiteInfo> suites{
      {"f-cocycle", 10, f_cocycle},
      {"gl-jacobi", 3, gl_jacobi},
      {"e-jacobi", 2, e_jacobi},
      {"filtration", 3, filtration},
      {"lemma2.1", 4, generating_commutator},
      {"eq3.3", 3, bracket_series},
      {"pbw-confluence", 2, pbw_confluence},
      {"annihilation", 3, annihilation},
      {"thm3.10", 3, vertex_relations},
      {"zoo-rep", 3, zoo_rep},
      {"prop5.2", 3, bbar_bracket},
      {"recovery", 4, recovery},
      {"level-witness", 3, level_witness},
      {"strig-locality", 3, strig_locality},
  };
  return suites;
}

inline const SuiteInfo* find_suite(std::string_view name) {
  for (const auto& s : registry())
    if (name == s.name) return &s;
  return nullptr;
}

}  // namespace glinf::suites
