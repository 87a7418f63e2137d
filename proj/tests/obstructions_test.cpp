#include <gtest/gtest.h>

#include "surfgeo/constructors.hpp"
#include "surfgeo/errors.hpp"
#include "surfgeo/obstructions.hpp"

using namespace surfgeo;

TEST(Threshold, ValuesAndNames) {
  EXPECT_EQ(threshold_value(Threshold::one_third), Rational(1, 3));
  EXPECT_EQ(threshold_value(Threshold::twenty_five_57ths), Rational(25, 57));
  EXPECT_EQ(threshold_value(Threshold::two_thirds), Rational(2, 3));
  for (auto t : {Threshold::one_third, Threshold::twenty_five_57ths, Threshold::two_thirds})
    EXPECT_EQ(threshold_from_string(to_string(t)), t);
  EXPECT_THROW(threshold_from_string("1/2"), DomainError);
}

TEST(Obstruction, TwoCubicsBlownUpThreeTimes) {
  std::vector<long> deg{3, 3};
  ObstructionVerdict v = einstein_obstruction(complete_intersection(deg, 4), 3, Threshold::one_third);
  EXPECT_TRUE(v.obstructed);
  EXPECT_TRUE(v.at_equality);
  EXPECT_EQ(v.bound, Rational(3));
}

TEST(Obstruction, SexticBlownUpEightTimes) {
  ObstructionVerdict v = einstein_obstruction(hypersurface_p3(6), 8, Threshold::one_third);
  EXPECT_TRUE(v.obstructed);
  EXPECT_TRUE(v.at_equality);
  EXPECT_EQ(v.bound, Rational(8));
  EXPECT_FALSE(einstein_obstruction(hypersurface_p3(6), 9, Threshold::one_third).at_equality);
  EXPECT_FALSE(einstein_obstruction(hypersurface_p3(6), 7, Threshold::one_third).obstructed);
  EXPECT_FALSE(einstein_obstruction(hypersurface_p3(6), 8, Threshold::two_thirds).obstructed);
}

TEST(Obstruction, DecicThreshold) {
  SurfaceInvariants x = hypersurface_p3(10);
  EXPECT_EQ(einstein_obstruction(x, 120, Threshold::one_third).bound, Rational(120));
  EXPECT_TRUE(einstein_obstruction(x, 120, Threshold::one_third).obstructed);
  EXPECT_FALSE(einstein_obstruction(x, 119, Threshold::one_third).obstructed);
  EXPECT_TRUE(einstein_obstruction(x, 144, Threshold::one_third).obstructed);
}

TEST(Obstruction, NotApplicableOutsideHypotheses) {
  EXPECT_THROW(einstein_obstruction(hypersurface_p3(4), 5, Threshold::one_third), NotApplicable);
  EXPECT_THROW(sw_einstein_floor(horikawa_p1xp1(2, 2)), NotApplicable);
  EXPECT_THROW(einstein_obstruction(hypersurface_p3(6), 0, Threshold::one_third), DomainError);
}

TEST(Obstruction, FloorIsTwoThirdsOfC1Squared) {
  EXPECT_EQ(sw_einstein_floor(hypersurface_p3(6)), Rational(16));
  EXPECT_EQ(sw_einstein_floor(hypersurface_p3(10)), Rational(240));
}

TEST(Obstruction, BudgetIdentity) {
  TopInvariants m = blow_up(derive_topology(hypersurface_p3(10)), 144);
  EXPECT_EQ(einstein_budget_identity(m), 360 - 144);
  CurvatureBudget b = curvature_budget(m);
  EXPECT_EQ(b.two_chi_plus_3tau, 216);
  EXPECT_EQ(b.two_chi_minus_3tau, 2 * 804 + 3 * 464);
}

TEST(ObstructionProperty, ThresholdMonotonicity) {
  for (long d = 5; d <= 20; ++d) {
    SurfaceInvariants x = hypersurface_p3(d);
    for (long k = 1; k <= 300; ++k) {
      bool third = einstein_obstruction(x, k, Threshold::one_third).obstructed;
      bool mid = einstein_obstruction(x, k, Threshold::twenty_five_57ths).obstructed;
      bool two = einstein_obstruction(x, k, Threshold::two_thirds).obstructed;
      if (mid) EXPECT_TRUE(third) << d << "," << k;
      if (two) EXPECT_TRUE(mid) << d << "," << k;
      if (third && k < 300) EXPECT_TRUE(einstein_obstruction(x, k + 1, Threshold::one_third).obstructed);
    }
  }
}

TEST(ObstructionReport, ListsVerdicts) {
  ObstructionReport r = obstruction_report(hypersurface_p3(10), 144, Threshold::one_third);
  EXPECT_EQ(r.hitchin_thorpe, HitchinThorpe::strict);
  ASSERT_EQ(r.verdicts.size(), 3u);
  EXPECT_EQ(r.verdicts[0].criterion, "hitchin-thorpe");
  EXPECT_EQ(r.verdicts[2].criterion, "einstein-obstructed");
  EXPECT_TRUE(r.verdicts[2].holds);
  for (const auto& v : r.verdicts) EXPECT_FALSE(v.provenance.empty());
}
