#include <glinf_qva/parse.hpp>
#include <glinf_qva/zoo.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace glinf;

namespace {

const ZooModule cinf = ZooModule::cinf();
const ZooModule sym1 = ZooModule::sym(1);
const ZooModule sym2 = ZooModule::sym(2);
const ZooModule ext2 = ZooModule::ext(2);
const ZooModule vsa_half = ZooModule::vsa({{0, Rational(1, 2)}});

ZooVector V(const ZooModule& mod, const std::string& text) { return parse_zoo(mod, text); }

std::string series_text(const ZooModule& mod, const TruncSeries<ZooVector>& s) {
  std::string out;
  for (const auto& [e, w] : s.terms()) out += "[" + std::to_string(e[0]) + "]" + mod.format(w) + " ";
  return out;
}

// Converts a Sym/VSA basis label to an oracle polynomial.
oracle::Poly to_poly(const ZooModule& mod, const ZooVector& w) {
  oracle::Poly p;
  for (const auto& [l, q] : w) {
    oracle::Monomial mono;
    std::size_t k = 0;
    for (const auto& [j, a] : mod.alpha()) mono[j] = a.value() + l.offsets[k++];
    for (int i : l.indices) mono[i] += 1;
    p[mono] += q.value();
  }
  return p;
}

}  // namespace

TEST(Zoo, ActExamples) {
  EXPECT_EQ(cinf.format(cinf.act_E(0, 1, V(cinf, "v[1]"))), "v[0]");
  EXPECT_EQ(sym2.format(sym2.act_E(0, 1, V(sym2, "x[1]*x[3]"))), "x[0]*x[3]");
  EXPECT_TRUE(ext2.act_E(2, 1, V(ext2, "v[1]^v[2]")).is_zero());
  EXPECT_EQ(vsa_half.format(vsa_half.act_E(1, 0, V(vsa_half, "x[0]^{1/2}"))), "1/2*x[0]^{1/2-1}*x[1]");
}

TEST(Zoo, SymAndVsaMatchDerivationOracle) {
  const ZooModule vsa2 = ZooModule::vsa({{0, Rational(1, 2)}, {2, Rational(-1, 3)}});
  for (const ZooModule* mod : {&sym2, &vsa2}) {
    const ZooVector w = mod == &sym2 ? V(sym2, "x[-1]*x[2] + 3*x[0]^2")
                                     : V(vsa2, "x[0]^{1/2-1}*x[2]^{-1/3}*x[1] - 2*x[0]^{1/2}*x[2]^{-1/3+2}");
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j)
        ASSERT_EQ(to_poly(*mod, mod->act_E(i, j, w)), oracle::x_d(i, j, to_poly(*mod, w))) << i << "," << j;
  }
}

TEST(Zoo, ExtMatchesWedgeOracle) {
  const ZooModule ext3 = ZooModule::ext(3);
  const ZooVector w = V(ext3, "v[-1]^v[0]^v[2]");
  for (int i = -2; i <= 3; ++i)
    for (int j = -2; j <= 3; ++j) {
      const ZooVector got = ext3.act_E(i, j, w);
      auto want = oracle::wedge_E(i, j, {-1, 0, 2});
      std::map<std::vector<int>, mpq_class> have;
      for (const auto& [l, q] : got) have[l.indices] = q.value();
      for (auto it = want.begin(); it != want.end();) it = it->second == 0 ? want.erase(it) : std::next(it);
      ASSERT_EQ(have, want) << i << "," << j;
    }
}

TEST(Zoo, ESeries) {
  EXPECT_EQ(series_text(cinf, cinf.E_series(0, V(cinf, "v[2]"))), "[-2]v[0] ");
  EXPECT_EQ(series_text(cinf, cinf.E_series(4, V(cinf, "v[4]"))), "[0]v[4] ");
  EXPECT_EQ(series_text(sym1, sym1.E_series(0, V(sym1, "x[1]"))), "[-1]x[0] ");
}

TEST(Zoo, BbarModes) {
  EXPECT_EQ(cinf.format(cinf.bbar_mode(2, 1, V(cinf, "v[5]"))), "-3*v[2]");
  for (int j = -3; j <= 3; ++j) EXPECT_EQ(cinf.format(cinf.bbar_mode(1, 0, V(cinf, "v[" + std::to_string(j) + "]"))), "v[1]");
  for (int r = 0; r <= 3; ++r) EXPECT_TRUE(sym2.bbar(0, r, V(sym2, "x[0]*x[1]")).is_zero());
}

TEST(Zoo, BbarSeriesIsExponential) {
  // Bbar(m,x) v_k = v_m e^{(m-k)x}: compare with the recurrence expansion.
  for (int m = -2; m <= 2; ++m)
    for (int k = -2; k <= 2; ++k) {
      const auto s = cinf.bbar_series(m, V(cinf, "v[" + std::to_string(k) + "]"), 4);
      const auto want = oracle::exp_coeffs(m - k, 4);
      for (int i = 0; i <= 4; ++i) {
        const ZooVector c = s.coefficient({i});
        const ZooVector expect = Rational(mpz_class(want[i].get_num()), mpz_class(want[i].get_den())) *
                                 V(cinf, "v[" + std::to_string(m) + "]");
        ASSERT_EQ(c, expect) << m << " " << k << " " << i;
      }
    }
  EXPECT_EQ(series_text(sym1, sym1.bbar_series(0, V(sym1, "x[1]"), 1)), "[0]x[0] [1]-x[0] ");
}

TEST(Zoo, Recovery) {
  const auto rec = cinf.recover_E(2, V(cinf, "v[5]"), 3);
  for (int n = -3; n <= 3; ++n) EXPECT_EQ(rec.at(n), n == 3 ? V(cinf, "v[2]") : ZooVector{});
  for (const auto& [n, y] : cinf.recover_E(0, ZooVector{}, 2)) EXPECT_TRUE(y.is_zero());
  const ZooVector w = V(sym2, "x[0]*x[1]");
  for (const auto& [n, y] : sym2.recover_E(0, w, 2)) EXPECT_EQ(y, sym2.act_E(0, n, w)) << n;
  EXPECT_THROW(cinf.recover_E(0, V(cinf, "v[5]"), 2), PreconditionError);
}

TEST(Zoo, LevelWitness) {
  auto rep = cinf.level_witness(V(cinf, "v[0]"));
  EXPECT_EQ(rep.m, -1);
  EXPECT_EQ(rep.n, 1);
  EXPECT_TRUE(rep.forced_central.is_zero());
  EXPECT_TRUE(sym1.level_witness(V(sym1, "x[0]")).forced_central.is_zero());
  rep = ext2.level_witness(V(ext2, "v[0]^v[1]"));
  EXPECT_EQ(rep.m, -1);
  EXPECT_EQ(rep.n, 2);
  EXPECT_EQ(rep.support, (std::set<int>{0, 1}));
  EXPECT_TRUE(rep.forced_central.is_zero());
}

TEST(Zoo, GeneratingFunctionCommutatorOnNaturalModule) {
  // [E(0,x1), E(1,x2)] v_2 = v_0 x1^-1 x2^-1 - v_1 x1^-2 x2.
  const ZooVector w = V(cinf, "v[2]");
  const auto one = TruncSeries<ZooVector>::monomial({}, {}, w);
  const auto lhs = apply_E_series(cinf, 0, Var::x1, apply_E_series(cinf, 1, Var::x2, one)) -
                   apply_E_series(cinf, 1, Var::x2, apply_E_series(cinf, 0, Var::x1, one));
  std::map<Exponents, ZooVector> want{{{-1, -1}, V(cinf, "v[0]")}, {{-2, 1}, V(cinf, "-v[1]")}};
  const auto expected = TruncSeries<ZooVector>::polynomial({Var::x1, Var::x2}, want);
  EXPECT_TRUE(check_identity(lhs, expected).pass);
  // (x1/x2)^{-1} (E(0,x2) - E(1,x1)) v_2
  const auto shift = TruncSeries<Rational>::monomial({Var::x1, Var::x2}, {-1, 1}, Rational(1));
  const auto rhs = ts_mul(shift, cinf.E_series(0, w).renamed({Var::x2})) -
                   ts_mul(shift, cinf.E_series(1, w).renamed({Var::x1}));
  const auto rep = check_identity(lhs, rhs);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.compared, 2u);
}

TEST(Zoo, ShapeErrors) {
  EXPECT_THROW(V(sym2, "x[1]"), ShapeError);
  EXPECT_THROW(V(ext2, "v[2]^v[1]"), ShapeError);
  EXPECT_THROW(V(ext2, "v[1]^v[1]"), ShapeError);
  EXPECT_THROW(ZooModule::vsa({{0, Rational(2)}}), std::invalid_argument);
  EXPECT_THROW(V(vsa_half, "x[1]"), ParseError);
}
