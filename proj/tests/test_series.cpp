#include <glinf_qva/series.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace glinf;

namespace {

using S = TruncSeries<Rational>;

S poly(std::vector<Var> vars, std::map<Exponents, Rational> terms) { return S::polynomial(std::move(vars), terms); }

Rational R(const mpq_class& q) { return Rational(mpz_class(q.get_num()), mpz_class(q.get_den())); }

}  // namespace

TEST(Series, ProductExamples) {
  const S a = poly({Var::x1}, {{{0}, 1}, {{1}, 1}});
  const S b = poly({Var::x1}, {{{0}, 1}, {{1}, -1}});
  const S ab = ts_mul(a, b);
  EXPECT_EQ(to_string(ab), "(1) + (-1)*x1^2");
  EXPECT_FALSE(ab.truncated());

  EXPECT_EQ(to_string(ts_mul(poly({Var::x1}, {{{-1}, 1}}), poly({Var::x1}, {{{1}, 1}}))), "(1)");

  S w({Var::x1}, {Window{0, 1}});
  w.add_term({0}, 1);
  w.add_term({1}, 1);
  const S sq = ts_mul(w, w);
  EXPECT_EQ(to_string(sq), "(1) + (2)*x1^1");
  EXPECT_TRUE(sq.truncated());
  EXPECT_TRUE(sq.in_window({1}));
  EXPECT_FALSE(sq.in_window({2}));
}

TEST(Series, ExpDiffExamples) {
  EXPECT_EQ(to_string(ts_exp_diff(0, 4)), "(1)");
  const S e = ts_exp_diff(1, 2);
  EXPECT_EQ(e.coefficient({0, 0}), Rational(1));
  EXPECT_EQ(e.coefficient({1, 0}), Rational(1));
  EXPECT_EQ(e.coefficient({0, 1}), Rational(-1));
  EXPECT_EQ(e.coefficient({2, 0}), Rational(1, 2));
  EXPECT_EQ(e.coefficient({1, 1}), Rational(-1));
  EXPECT_EQ(e.coefficient({0, 2}), Rational(1, 2));
  EXPECT_EQ(e.terms().size(), 6u);
  const S swapped = ts_exp_diff(-1, 2, Var::x2, Var::x1).extended_to({Var::x1, Var::x2});
  EXPECT_TRUE(check_identity(e, swapped).pass);
}

TEST(Series, ExpDiffMatchesBinomialOracle) {
  for (int a = -3; a <= 3; ++a) {
    const S e = ts_exp_diff(a, 6);
    const auto p = oracle::exp_coeffs(a, 6), q = oracle::exp_coeffs(-a, 6);
    for (int i = 0; i <= 6; ++i)
      for (int j = 0; i + j <= 6; ++j) ASSERT_EQ(e.coefficient({i, j}).value(), p[i] * q[j]) << a << " " << i << " " << j;
  }
}

TEST(Series, ExpDiffInverse) {
  for (int a = -3; a <= 3; ++a) {
    const S prod = ts_mul(ts_exp_diff(a, 5), ts_exp_diff(-a, 5));
    const auto rep = check_identity(prod, poly({Var::x1, Var::x2}, {{{0, 0}, 1}}));
    ASSERT_TRUE(rep.pass) << a;
    ASSERT_GT(rep.compared, 0u);
  }
}

TEST(Series, SubstitutePhiExamples) {
  const S d = ts_substitute_phi(poly({Var::x1, Var::x2}, {{{1, 0}, 1}, {{0, 1}, -1}}), 4);
  EXPECT_EQ(d.coefficient({0, 1}), Rational(0));
  for (int j = 1; j <= 4; ++j) EXPECT_EQ(d.coefficient({j, 1}).value(), oracle::exp_coeffs(1, 4)[j]);
  EXPECT_EQ(to_string(ts_substitute_phi(poly({Var::x1}, {{{0}, 1}}), 3)), "(1)");
  const S inv = ts_substitute_phi(poly({Var::x1}, {{{-1}, 1}}), 1);
  EXPECT_EQ(to_string(inv), "(1)*x2^-1 + (-1)*x0^1*x2^-1");
}

TEST(Series, SubstitutePhiIsMultiplicative) {
  const S a = poly({Var::x1, Var::x2}, {{{2, 0}, Rational(1, 3)}, {{-1, 1}, 2}, {{0, 0}, -1}});
  const S b = poly({Var::x1, Var::x2}, {{{1, -1}, 5}, {{-2, 0}, Rational(-7, 4)}});
  const int order = 5;
  const S lhs = ts_substitute_phi(ts_mul(a, b), order);
  const S rhs = ts_mul(ts_substitute_phi(a, order), ts_substitute_phi(b, order));
  const auto rep = check_identity(lhs, rhs);
  EXPECT_TRUE(rep.pass) << to_string(lhs) << " vs " << to_string(rhs);
  EXPECT_GT(rep.compared, 10u);
}

TEST(Series, SubstitutePhiOracle) {
  // x1^n -> x2^n sum_j n^j x0^j / j! is x2^n e^{n x0}.
  for (int n = -3; n <= 3; ++n) {
    const S s = ts_substitute_phi(poly({Var::x1}, {{{n}, 1}}), 5);
    const auto want = oracle::exp_coeffs(n, 5);
    for (int j = 0; j <= 5; ++j) ASSERT_EQ(s.coefficient({j, n}), R(want[j]));
  }
}

TEST(Series, CheckIdentity) {
  const S a = poly({Var::x1, Var::x2}, {{{1, 0}, 1}});
  const S b = poly({Var::x1, Var::x2}, {{{0, 1}, 1}});
  EXPECT_TRUE(check_identity(a, a).pass);
  const auto rep = check_identity(a, b);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.first_mismatch, (Exponents{1, 0}));
  EXPECT_EQ(rep.lhs_coeff, "1");
  EXPECT_EQ(rep.rhs_coeff, "0");
  EXPECT_THROW(check_identity(poly({Var::x1}, {{{0}, 1}}), a), std::invalid_argument);
}

TEST(Series, WindowedComparisonIgnoresUnknownRegion) {
  S a({Var::x}, {Window{0, 2}});
  a.add_term({0}, 1);
  a.add_term({2}, 5);
  S b({Var::x}, {Window{0, 1}});
  b.add_term({0}, 1);
  EXPECT_TRUE(check_identity(a, b).pass);
  EXPECT_EQ(check_identity(a, b, std::vector<Window>{Window{0, 1}}).compared, 1u);
  b.add_term({1}, 4);
  EXPECT_FALSE(check_identity(a, b).pass);
  EXPECT_THROW(b.add_term({-1}, Rational(1)), std::logic_error);
}
