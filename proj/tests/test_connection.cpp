#include <gtest/gtest.h>

#include "oracles.hpp"
#include "padicmf/connection.hpp"
#include "padicmf/error.hpp"
#include "padicmf/random.hpp"
#include "support.hpp"

using namespace padicmf;
using testing_support::signed_values;

namespace {

const Profile& P() {
  static const Profile p = Profile::default_profile();
  return p;
}

QSeries<PadicInt> over_144(const QSeries<PadicInt>& f) { return f * inverse_of_int(P(), 144); }

NearlyOCForm<PadicInt> scaled_form(const NearlyOCForm<PadicInt>& F, std::int64_t c) {
  std::vector<QSeries<PadicInt>> comps;
  for (const auto& x : F.components()) comps.push_back(x.scaled(c));
  return NearlyOCForm<PadicInt>(F.weight(), std::move(comps), F.splitting());
}

}  // namespace

TEST(PartialPow, Examples) {
  InputGenerator gen(1);
  const auto katz = katz_splitting<PadicInt>(P());
  const auto f = gen.series(P());
  EXPECT_TRUE(partial_pow(f, 0, katz) == theta(f));

  const auto e2 = eisenstein_e2(P());
  const auto e4 = eisenstein_preset(P(), EisensteinPreset::e4_std);
  const auto d2 = partial_pow(katz.alpha0, 2, katz);
  EXPECT_TRUE(d2 == theta(e2) * inverse_of_int(P(), 12) + (e2 * e2) * inverse_of_int(P(), 72));
  // by the Ramanujan identity for theta E2
  EXPECT_TRUE(d2 == over_144((e2 * e2).scaled(3) - e4));

  for (int t = 0; t < 5; ++t) {
    const auto x = gen.series(P()), y = gen.series(P());
    EXPECT_TRUE(partial_pow(x, 1, katz) * y + x * partial_pow(y, -1, katz) == theta(x * y));
  }
}

TEST(PartialChi, Examples) {
  const auto katz = katz_splitting<PadicInt>(P());
  InputGenerator gen(2);
  const auto f = gen.series(P());
  EXPECT_TRUE(partial_chi(f, trivial_char<PadicInt>(P()), katz) == theta(f));

  const auto d = partial_chi(delta(P()), classical_char(P(), 12), katz);
  const std::vector<std::int64_t> expected{0, 2, -96, 1512};
  EXPECT_EQ(signed_values(d, 4), expected);

  const auto universal = universal_char(P());
  const auto katz_family = katz_splitting<FamilyElement>(P());
  for (int t = 0; t < 3; ++t) {
    const auto g = gen.series<FamilyElement>(P());
    for (std::int64_t k : {4, 12}) {
      const PadicInt uk = classical_point(P(), k);
      EXPECT_TRUE(specialize_series(partial_chi(g, universal, katz_family), uk) ==
                  partial_chi(specialize_series(g, uk), classical_char(P(), k), katz));
    }
  }
}

TEST(Nabla, KatzExampleOnDelta) {
  const auto katz = katz_splitting<PadicInt>(P());
  const NearlyOCForm<PadicInt> F(classical_char(P(), 12), delta(P()), katz.name);
  const auto G = nabla(F, katz);
  ASSERT_EQ(G.r(), 1);
  EXPECT_TRUE(G.component(0) == theta(delta(P())).scaled(2));  // theta Delta + E2 Delta
  EXPECT_TRUE(G.component(1) == delta(P()).scaled(12));
  EXPECT_TRUE(G.weight() == classical_char(P(), 14));
}

TEST(Nabla, ConstantHasZeroDerivative) {
  const auto katz = katz_splitting<PadicInt>(P());
  const NearlyOCForm<PadicInt> F(trivial_char<PadicInt>(P()), QSeries<PadicInt>::one(P()), katz.name);
  const auto G = nabla(F, katz);
  EXPECT_TRUE(G.component(0).is_zero());
  EXPECT_TRUE(G.component(1).is_zero());
}

TEST(Nabla, LambdaSlot) {
  const auto katz = katz_splitting<PadicInt>(P());
  const NearlyOCForm<PadicInt> F(classical_char(P(), 14), {QSeries<PadicInt>::zero(P()), delta(P())}, katz.name);
  const auto G = nabla(F, katz);
  EXPECT_TRUE(G.component(0) == katz.lambda * delta(P()));
  // the Katz lambda from the calibrated diagonal splitting is (E4 - 2 E2^2)/144
  const auto e2 = eisenstein_e2(P());
  EXPECT_TRUE(katz.lambda == over_144(eisenstein_preset(P(), EisensteinPreset::e4_std) - (e2 * e2).scaled(2)));
}

TEST(Nabla, DegreeWeightAndTopComponent) {
  InputGenerator gen(4);
  const auto universal = universal_char(P());
  const auto katz_family = katz_splitting<FamilyElement>(P());
  for (int r = 0; r <= 3; ++r) {
    const auto F = gen.form(universal, r, katz_family.name);
    const auto G = nabla(F, katz_family);
    EXPECT_EQ(G.r(), r + 1);
    EXPECT_TRUE(G.weight() == twist(universal, 2));
    EXPECT_TRUE(G.component(r + 1) == F.component(r) * (wt(universal) - FamilyElement::constant(P(), r)));
  }
}

TEST(Nabla, RequiresMatchingCoordinates) {
  const NearlyOCForm<PadicInt> F(classical_char(P(), 12), delta(P()), kDiagonalSplitting);
  EXPECT_THROW(nabla(F, katz_splitting<PadicInt>(P())), CoordinateError);
}

TEST(NablaClassical, AgreesWithTheCharacterPath) {
  InputGenerator gen(5);
  const auto katz = katz_splitting<PadicInt>(P());
  for (std::int64_t k : {4, 6, 12}) {
    for (int r = 0; r <= 2; ++r) {
      const auto F = gen.form(classical_char(P(), k), r, katz.name);
      EXPECT_TRUE(nabla(F, katz) == nabla_classical(F, k, katz)) << k << " " << r;
    }
  }
  const auto f = gen.series(P());
  const auto G = nabla_classical(NearlyOCForm<PadicInt>(classical_char(P(), 0), f, katz.name), 0, katz);
  EXPECT_TRUE(G.component(0) == theta(f));
  EXPECT_TRUE(G.component(1).is_zero());
  EXPECT_THROW(nabla_classical(NearlyOCForm<PadicInt>(classical_char(P(), 4), f, katz.name), 6, katz), DomainError);
}

TEST(SplittingUpdate, Examples) {
  const auto katz = katz_splitting<PadicInt>(P());
  const auto same = splitting_update(katz, QSeries<PadicInt>::zero(P()));
  EXPECT_TRUE(same.alpha0 == katz.alpha0);
  EXPECT_TRUE(same.lambda == katz.lambda);

  const auto e2 = eisenstein_e2(P());
  const auto e4 = eisenstein_preset(P(), EisensteinPreset::e4_std);
  const auto moved = splitting_update(katz, -e2_over_12(P()));
  EXPECT_TRUE(moved.alpha0.is_zero());
  EXPECT_TRUE(moved.lambda == katz.lambda + over_144((e2 * e2).scaled(2) - e4));

  InputGenerator gen(6);
  for (int t = 0; t < 5; ++t) {
    const auto alpha = gen.series(P());
    const auto back = splitting_update(splitting_update(katz, alpha), -alpha);
    EXPECT_TRUE(back.lambda == katz.lambda);
    EXPECT_TRUE(back.alpha0 == katz.alpha0);
  }
  EXPECT_TRUE(serre_splitting<PadicInt>(P()).lambda == over_144(-e4));
}

TEST(ChangeCoordinates, Examples) {
  InputGenerator gen(7);
  const auto chi = classical_char(P(), 8);
  const auto F = gen.form(chi, 1, "katz");
  const auto alpha = gen.series(P());
  EXPECT_TRUE(change_coordinates(F, QSeries<PadicInt>::zero(P()), "katz") == F);

  const auto minus = change_coordinates(F, alpha, "x", CoordinateSign::minus);
  EXPECT_TRUE(minus.component(0) == F.component(0) - alpha * F.component(1));
  EXPECT_TRUE(minus.component(1) == F.component(1));
  const auto plus = change_coordinates(F, alpha, "x");
  EXPECT_TRUE(plus.component(0) == F.component(0) + alpha * F.component(1));
  EXPECT_EQ(plus.splitting(), "x");

  for (int r = 0; r <= 3; ++r) {
    const auto G = gen.form(chi, r, "katz");
    EXPECT_TRUE(change_coordinates(change_coordinates(G, alpha, "x"), -alpha, "katz") == G);
  }
}

TEST(ChangeCoordinates, PlusSignGivesSplittingIndependence) {
  InputGenerator gen(8);
  const auto katz = katz_splitting<PadicInt>(P());
  for (int r = 0; r <= 2; ++r) {
    const auto alpha = gen.series(P());
    const auto moved = splitting_update(katz, alpha, "moved");
    const auto F = gen.form(classical_char(P(), 10), r, katz.name);
    EXPECT_TRUE(change_coordinates(nabla(F, katz), alpha, "moved") == nabla(change_coordinates(F, alpha, "moved"), moved));
    if (r >= 1) {
      EXPECT_FALSE(change_coordinates(nabla(F, katz), alpha, "moved", CoordinateSign::minus) ==
                   nabla(change_coordinates(F, alpha, "moved", CoordinateSign::minus), moved));
    }
  }
}

TEST(SpecializeForm, InterpolatesTheClassicalConnection) {
  InputGenerator gen(9);
  const auto universal = universal_char(P());
  const auto katz_family = katz_splitting<FamilyElement>(P());
  const auto katz = katz_splitting<PadicInt>(P());
  for (int r = 0; r <= 2; ++r) {
    const auto F = gen.form(universal, r, katz.name);
    const auto G = nabla(F, katz_family);
    for (std::int64_t k : {4, 6, 12}) {
      const PadicInt uk = classical_point(P(), k);
      EXPECT_TRUE(specialize_form(G, uk) == nabla_classical(specialize_form(F, uk), k, katz)) << r << " " << k;
    }
  }
  const auto F = gen.form(universal, 1, katz.name);
  const auto F0 = specialize_form(F, PadicInt::zero(P()));
  EXPECT_TRUE(F0.weight().lambda == PadicInt::one(P()));
  const auto H = gen.form(universal, 1, katz.name);
  const PadicInt u0 = gen.padic(P());
  const NearlyOCForm<FamilyElement> sum(universal, {F.component(0) + H.component(0), F.component(1) + H.component(1)},
                                        katz.name);
  const auto s = specialize_form(sum, u0);
  EXPECT_TRUE(s.component(0) == specialize_form(F, u0).component(0) + specialize_form(H, u0).component(0));
}

TEST(MatrixIdentity, PositiveAndNegativeCases) {
  InputGenerator gen(10);
  const auto katz = katz_splitting<PadicInt>(P());
  std::vector<std::pair<QSeries<PadicInt>, QSeries<PadicInt>>> pairs;
  for (int i = 0; i < 10; ++i) pairs.emplace_back(gen.series(P()), gen.series(P()));
  EXPECT_TRUE(matrix_identity_check(katz, QSeries<PadicInt>::zero(P()), pairs));
  const auto alpha = gen.series(P());
  EXPECT_TRUE(matrix_identity_check(katz, alpha, pairs));
  auto bad = splitting_update(katz, alpha);
  bad.lambda[3] = bad.lambda[3] + PadicInt::one(P());
  EXPECT_FALSE(matrix_identity_check(katz, alpha, bad, pairs));
}

TEST(FamilyChangeOfSplitting, OperatorShiftsByWeightTimesAlpha) {
  InputGenerator gen(11);
  const auto universal = universal_char(P());
  const auto katz_family = katz_splitting<FamilyElement>(P());
  for (int t = 0; t < 3; ++t) {
    const auto alpha = to_family(gen.series(P()));
    const auto f = gen.series<FamilyElement>(P());
    EXPECT_TRUE(partial_chi(f, universal, splitting_update(katz_family, alpha)) ==
                partial_chi(f, universal, katz_family) + (alpha * f) * wt(universal));
  }
}

TEST(NearlyOCForm, IncludeAndTruncate) {
  InputGenerator gen(12);
  const auto F = gen.form(classical_char(P(), 4), 1, "katz");
  const auto G = F.include(3);
  EXPECT_EQ(G.r(), 3);
  EXPECT_TRUE(G.truncate(1) == F);
  EXPECT_THROW(F.truncate(0), DomainError);
  EXPECT_THROW(F.include(0), DomainError);
  EXPECT_TRUE(scaled_form(F, 1) == F);
}
