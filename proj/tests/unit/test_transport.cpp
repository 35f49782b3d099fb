#include <gtest/gtest.h>

#include "qtorus/transport.hpp"

using namespace qtorus;

namespace {

const GroupElement minus_id(-1, 0, 0, -1);
const Scalar lambda = Scalar::lambda_power(1);

}  // namespace

TEST(Lifts, DegreeZeroIsIdentity) {
  LiftContext ctx;
  Tensor t(2);
  t.add_term({{1, 2}, {0, -1}}, Scalar(3));
  EXPECT_EQ(ctx.k_chain(t).parts[0], t);
  KoszulChain c = KoszulChain::zero(0);
  c.parts[0] = t;
  EXPECT_EQ(h_chain(c), t);
}

TEST(Lifts, KoszulGeneratorsMapAsPrescribed) {
  Tensor h1 = h_chain(KoszulChain::generator(1, 0));
  Tensor expected(3);
  expected.add_term({{0, 0}, {1, 0}, {0, 0}}, Scalar(-1));
  EXPECT_EQ(h1, expected);
  LiftContext ctx;
  EXPECT_EQ(ctx.k1({1, 0}), Scalar(-1) * KoszulChain::generator(1, 0));
  EXPECT_EQ(ctx.k1({0, 0}), KoszulChain::zero(1));
}

TEST(Lifts, SquaresCommuteForTwoSeeds) {
  for (unsigned seed : {0u, 7u}) {
    LiftContext ctx(seed);
    ChainMapWitness w = lift_comparison_maps(ctx, 1);
    EXPECT_TRUE(w.h_squares);
    EXPECT_TRUE(w.k_squares);
    EXPECT_TRUE(w.homotopy);
    EXPECT_TRUE(w.bar_homotopy);
    EXPECT_EQ(w.seed, seed);
    EXPECT_GT(w.lifts_cached, 0u);
  }
}

TEST(Lifts, K2IdentityUpToCorrection) {
  LiftContext ctx;
  K2IdentityCertificate c = check_k2_identity(ctx);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.kappa, -lambda);
}

TEST(Transport, IdentityFixesClasses) {
  LiftContext ctx;
  for (const auto& g : {GroupElement(), minus_id}) {
    SectorCohomology h(g, 2, 3);
    for (const auto& rep : h.representatives()) {
      auto x = h.coordinates(transport_action(ctx, GroupElement(), rep));
      EXPECT_EQ(x, h.coordinates(rep));
    }
  }
}

TEST(Transport, UntwistedGeneratorIsInvariant) {
  LiftContext ctx;
  SectorCohomology h(GroupElement(), 2, 3);
  for (const auto& d : finite_subgroup(SubgroupLabel::Z6).elements)
    EXPECT_EQ(h.coordinates(transport_action(ctx, d, h.representatives()[0])), std::vector<Scalar>{Scalar(1)});
}

TEST(Transport, SeedsInduceTheSameAction) {
  LiftContext a(0), b(1009);
  const GroupElement g(0, -1, 1, 0);
  SectorCohomology h(minus_id, 2, 3);
  for (const auto& rep : h.representatives())
    EXPECT_EQ(h.coordinates(transport_action(a, g, rep)), h.coordinates(transport_action(b, g, rep)));
}

TEST(Transport, PushAfterPullIsIdentityOnClasses) {
  LiftContext ctx;
  SectorCohomology h(GroupElement(), 1, 3);
  for (const auto& rep : h.representatives())
    EXPECT_EQ(h.coordinates(push_to_koszul(pull_to_bar(ctx, rep))), h.coordinates(rep));
}

TEST(Witness, EachDegree) {
  LiftContext ctx;
  BarCochain a = BarCochain::constant(TorusElement::monomial(Exponent{1, 1}), minus_id);
  BarCochain c1 = bar_differential(a);
  auto w1 = coboundary_witness(ctx, c1);
  ASSERT_TRUE(w1);
  EXPECT_TRUE(verify_coboundary(*w1, c1, 2));

  BarCochain c2 = bar_differential(derivation_cochain(1) + BarCochain::from_table(1, {}, {{{{1, 0}}, TorusElement::monomial(Exponent{0, 3})}}));
  auto w2 = coboundary_witness(ctx, c2);
  ASSERT_TRUE(w2);
  EXPECT_TRUE(verify_coboundary(*w2, c2, 1));

  BarCochain pi = cup_product(derivation_cochain(1), derivation_cochain(2)) -
                  cup_product(derivation_cochain(2), derivation_cochain(1));
  BarCochain c3 = gerstenhaber_bracket(pi, pi);
  auto w3 = coboundary_witness(ctx, c3);
  ASSERT_TRUE(w3);
  EXPECT_TRUE(verify_coboundary(*w3, c3, 1, 200));
  EXPECT_EQ(cochain_digest(*w3, 1, 20), cochain_digest(*w3, 1, 20));
}

TEST(Witness, NonTrivialClassHasNone) {
  LiftContext ctx;
  SectorCohomology h(GroupElement(), 2, 3);
  EXPECT_FALSE(coboundary_witness(ctx, pull_to_bar(ctx, h.representatives()[0])));
  EXPECT_FALSE(coboundary_witness(ctx, derivation_cochain(2)));
  EXPECT_THROW(coboundary_witness(ctx, BarCochain::zero(0)), std::invalid_argument);
}
