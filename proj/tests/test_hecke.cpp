#include <gtest/gtest.h>

#include "oracles.hpp"
#include "padicmf/hecke.hpp"
#include "padicmf/random.hpp"
#include "support.hpp"

using namespace padicmf;
using testing_support::residues;

namespace {

const Profile& P() {
  static const Profile p = Profile::default_profile();
  return p;
}

const oracle::Int& modulus() {
  static const oracle::Int m = oracle::modulus(5, 6);
  return m;
}

NearlyOCForm<PadicInt> diag_form(std::int64_t k, const QSeries<PadicInt>& f) {
  return NearlyOCForm<PadicInt>(classical_char(P(), k), f, kDiagonalSplitting);
}

const HeckeOp kT2{HeckeKind::tl, 2};

}  // namespace

TEST(Up, ExamplesAndLength) {
  const auto diag = diagonal_splitting(P());
  const auto d = u_p(diag_form(12, delta(P())), diag);
  EXPECT_EQ(d.component(0).size(), 13);  // (64 - 1)/5 + 1
  EXPECT_TRUE(d.component(0)[1] == delta(P())[5]);
  EXPECT_TRUE(d.component(0)[2] == delta(P())[10]);

  InputGenerator gen(1);
  const auto F = gen.form(classical_char(P(), 4), 1, kDiagonalSplitting);
  const auto G = u_p(F, diag);
  EXPECT_TRUE(G.component(1)[3] == F.component(1)[15].mul_p_pow(1));
}

TEST(Vp, ExamplesAndRestrictions) {
  const auto diag = diagonal_splitting(P());
  std::vector<PadicInt> ones(8, PadicInt::one(P()));
  ones[0] = PadicInt::zero(P());
  const QSeries<PadicInt> f(P(), ones);
  const auto g = v_p(diag_form(0, f), diag).component(0);
  ASSERT_EQ(g.size(), 40);
  for (int m = 0; m < 40; ++m) EXPECT_TRUE(g[m] == PadicInt(P(), (m % 5 == 0 && m > 0) ? 1 : 0)) << m;

  const auto one = v_p(diag_form(0, QSeries<PadicInt>::one(P())), diag).component(0);
  EXPECT_TRUE(one.truncated(64) == QSeries<PadicInt>::one(P()));

  InputGenerator gen(2);
  EXPECT_THROW(v_p(gen.form(classical_char(P(), 4), 1, kDiagonalSplitting), diag), UnsupportedError);
  for (int t = 0; t < 5; ++t) {
    const auto F = diag_form(4, gen.series(P()));
    EXPECT_TRUE(u_p(v_p(F, diag), diag) == F);
  }
}

TEST(Tell, MatchesClassicalOracle) {
  const auto diag = diagonal_splitting(P());
  struct Case {
    unsigned k;
    oracle::Series f;
  };
  const std::vector<Case> cases{{4, oracle::eisenstein(4, 240, 64)},
                                {6, oracle::eisenstein(6, -504, 64)},
                                {12, oracle::delta(64)},
                                {16, oracle::mul(oracle::eisenstein(4, 240, 64), oracle::delta(64))}};
  for (const auto& c : cases) {
    const QSeries<PadicInt> f = testing_support::series_of(P(), [&] {
      std::vector<std::int64_t> v;
      for (const auto& x : oracle::residues(c.f, modulus())) v.push_back(static_cast<std::int64_t>(x));
      return v;
    }());
    for (unsigned ell : {2u, 3u, 7u}) {
      const auto got = t_ell(diag_form(c.k, f), ell, diag).component(0);
      EXPECT_EQ(residues(got), oracle::residues(oracle::hecke(c.f, ell, c.k), modulus())) << c.k << " " << ell;
    }
  }
}

TEST(Tell, Errors) {
  const auto diag = diagonal_splitting(P());
  const auto F = diag_form(12, delta(P()));
  EXPECT_THROW(t_ell(F, 5, diag), DomainError);
  EXPECT_THROW(t_ell(F, 4, diag), DomainError);
  const auto katz = katz_splitting(P());
  EXPECT_THROW(t_ell(F.relabeled(kKatzSplitting), 2, katz), CoordinateError);
  EXPECT_THROW(t_ell(F.relabeled(kKatzSplitting), 2, diag), CoordinateError);
}

TEST(Tell, OperatorsCommute) {
  const auto diag = diagonal_splitting(P());
  InputGenerator gen(3);
  const auto F = gen.form(classical_char(P(), 8), 2, kDiagonalSplitting);
  const auto a = t_ell(t_ell(F, 2, diag), 3, diag);
  const auto b = t_ell(t_ell(F, 3, diag), 2, diag);
  EXPECT_TRUE(a == b);
}

TEST(Eigenvalue, Examples) {
  const auto diag = diagonal_splitting(P());
  const auto e4 = eisenstein_preset(P(), EisensteinPreset::e4_std);
  auto mu = eigenvalue(diag_form(4, e4), kT2, diag);
  ASSERT_TRUE(std::holds_alternative<PadicInt>(mu));
  EXPECT_TRUE(std::get<PadicInt>(mu) == PadicInt(P(), 9));

  mu = eigenvalue(diag_form(12, delta(P())), kT2, diag);
  ASSERT_TRUE(std::holds_alternative<PadicInt>(mu));
  EXPECT_TRUE(std::get<PadicInt>(mu) == PadicInt(P(), -24));

  mu = eigenvalue(diag_form(12, delta(P())), HeckeOp{HeckeKind::tl, 3}, diag);
  ASSERT_TRUE(std::holds_alternative<PadicInt>(mu));
  EXPECT_TRUE(std::get<PadicInt>(mu) == PadicInt(P(), 252));

  EXPECT_TRUE(std::holds_alternative<NotEigen>(eigenvalue(diag_form(4, e4 + delta(P())), kT2, diag)));
}

TEST(Eigenvalue, NablaDeltaInDiagonalCoordinates) {
  const auto katz = katz_splitting(P());
  const auto diag = diagonal_splitting(P());
  const auto G = nabla(NearlyOCForm<PadicInt>(classical_char(P(), 12), delta(P()), kKatzSplitting), katz);
  const auto D = change_coordinates(G, -e2_over_12(P()), kDiagonalSplitting);
  EXPECT_TRUE(D.component(0) == theta(delta(P())));
  EXPECT_TRUE(D.component(0)[2] == PadicInt(P(), -48));
  EXPECT_TRUE(t_ell(D, 2, diag).component(0)[2] == PadicInt(P(), 2304));
  const auto mu = eigenvalue(D, kT2, diag);
  ASSERT_TRUE(std::holds_alternative<PadicInt>(mu));
  EXPECT_TRUE(std::get<PadicInt>(mu) == PadicInt(P(), -48));
}

TEST(Calibration, TheSecondDerivativeIdentityOverZ) {
  // 13 E2^2 Delta - E4 Delta = 12 theta^2 Delta, and theta^2 Delta is T_2-eigen at weight 16
  const int len = 120;
  const auto e2 = oracle::e2(len), e4 = oracle::eisenstein(4, 240, len), d = oracle::delta(len);
  const auto lhs = oracle::add(oracle::scale(oracle::mul(oracle::mul(e2, e2), d), 13),
                               oracle::scale(oracle::mul(e4, d), -1));
  const auto t2d = oracle::theta(oracle::theta(d));
  EXPECT_EQ(lhs, oracle::scale(t2d, 12));
  const auto image = oracle::hecke(t2d, 2, 16);
  EXPECT_EQ(image, oracle::scale(oracle::Series(t2d.begin(), t2d.begin() + static_cast<long>(image.size())), -96));
}

TEST(Calibration, PassingSetIsALine) {
  const auto cal = calibrate_lambda(P());
  EXPECT_FALSE(cal.unique());
  ASSERT_TRUE(cal.null_direction.has_value());
  const auto [d1, d2] = *cal.null_direction;
  EXPECT_EQ(d1 * -13, d2);
  EXPECT_EQ(cal.passing.size(), 2u * (cal.search_bound / 13) + 1);
  for (const auto& [j1, j2] : cal.passing) EXPECT_EQ(j2, -13 * j1);
  EXPECT_GE(cal.e4_control_residual_index, 0);

  ASSERT_TRUE(cal.lambda_diagonal.has_value());
  EXPECT_TRUE(cal.lambda_diagonal->is_zero());
  const auto e2 = eisenstein_e2(P());
  const auto e4 = eisenstein_preset(P(), EisensteinPreset::e4_std);
  ASSERT_TRUE(cal.lambda_katz.has_value());
  EXPECT_TRUE(*cal.lambda_katz == (e4 - (e2 * e2).scaled(2)) * inverse_of_int(P(), 144));
  EXPECT_FALSE(e4_multiple(*cal.lambda_katz).has_value());

  const auto serre = e4_multiple(serre_splitting(P()).lambda);
  ASSERT_TRUE(serre.has_value());
  EXPECT_TRUE(*serre * PadicInt(P(), 144) == PadicInt(P(), -1));
}
