#include <gtest/gtest.h>

#include "qtorus/poisson.hpp"

using namespace qtorus;

TEST(Pi0, Values) {
  BarCochain pi = pi0_cochain();
  EXPECT_EQ(pi({{1, 0}, {0, 1}}), multiply(TorusElement::U1(), TorusElement::U2()));
  EXPECT_TRUE(pi({{1, 0}, {1, 0}}).is_zero());
  EXPECT_TRUE(vanishes_on_box(bar_differential(pi), 1, 729));
}

TEST(Pi0, CanonicalFormIsMultipleOfGenerator) {
  PoissonStructure p = pi0();
  ASSERT_EQ(p.cls.coefficients.size(), 1u);
  EXPECT_FALSE(p.cls.coefficients[0].is_zero());
}

TEST(PoissonCheck, Pi0AndZero) {
  LiftContext ctx;
  BracketWitness w = poisson_check(ctx, pi0());
  EXPECT_TRUE(w.found);
  EXPECT_TRUE(w.verified);
  EXPECT_EQ(w.degree, 3);
  EXPECT_EQ(w.digest.size(), 16u);

  PoissonStructure zero;
  zero.cls.label = "zero";
  zero.cls.bar = BarCochain::zero(2);
  BracketWitness z = poisson_check(ctx, zero);
  EXPECT_TRUE(vanishes_on_box(*z.witness, 1));
}

TEST(PoissonDifferential, UnitAndOverflow) {
  PoissonStructure p = pi0();
  BarCochain one = BarCochain::constant(TorusElement(Scalar(1)));
  EXPECT_TRUE(vanishes_on_box(poisson_differential(p, one), 2));
  EXPECT_THROW(poisson_differential(p, BarCochain::zero(3)), std::out_of_range);
}

TEST(PoissonTables, Z2MatchesHochschild) {
  auto sg = finite_subgroup(SubgroupLabel::Z2);
  TableOptions opt;
  opt.max_window = 4;
  OrbifoldTable table = orbifold_table(sg, opt);
  LiftContext ctx;
  auto tables = poisson_cohomology_tables(sg, table, ctx);
  ASSERT_EQ(tables.size(), 5u);
  for (const auto& t : tables) {
    EXPECT_TRUE(t.all_verified) << t.structure;
    EXPECT_EQ(t.dims, (std::array<int, 4>{1, 0, 5, 0}));
    // d of the unit, d^2 of the unit, and one bracket per basis structure
    EXPECT_EQ(t.witnesses.size(), 7u);
  }
}
