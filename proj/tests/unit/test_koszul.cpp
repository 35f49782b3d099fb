#include <gtest/gtest.h>

#include <random>

#include "qtorus/koszul.hpp"
#include "test_util.hpp"

using namespace qtorus;

namespace {

const Scalar lambda = Scalar::lambda_power(1);
TorusElement mono(int n, int m, Scalar c = Scalar(1)) { return TorusElement::monomial(Exponent{n, m}, c); }

}  // namespace

TEST(Koszul, FirstDifferential) {
  KoszulChain b = resolution_differential(KoszulChain::generator(1, 0));
  Tensor expected(2);
  expected.add_term({{0, 0}, {1, 0}}, Scalar(1));
  expected.add_term({{1, 0}, {0, 0}}, Scalar(-1));
  EXPECT_EQ(b.parts[0], expected);
}

TEST(Koszul, DifferentialSquaresToZero) {
  EXPECT_TRUE(resolution_differential(resolution_differential(KoszulChain::generator(2, 0))).is_zero());
  KoszulChain c = KoszulChain::generator(2, 0, {2, -1}, {-1, 3});
  EXPECT_TRUE(resolution_differential(resolution_differential(c)).is_zero());
  EXPECT_THROW(resolution_differential(KoszulChain::zero(0)), std::out_of_range);
}

TEST(Koszul, AugmentationKillsImage) {
  Tensor t(2);
  t.add_term({{1, 0}, {0, 1}}, Scalar(1));
  KoszulChain c = KoszulChain::zero(0);
  c.parts[0] = t;
  EXPECT_EQ(augmentation(c), mono(1, 1));
  EXPECT_TRUE(augmentation(resolution_differential(KoszulChain::generator(1, 1, {3, 1}, {-2, 0}))).is_zero());
}

TEST(Koszul, Alpha1Examples) {
  const GroupElement id;
  auto [a, b] = alpha1(id, TorusElement(Scalar(1)));
  EXPECT_TRUE(a.is_zero());
  EXPECT_TRUE(b.is_zero());
  auto [c, d] = alpha1(id, TorusElement::U1());
  EXPECT_TRUE(c.is_zero());
  EXPECT_EQ(d, (lambda - Scalar(1)) * mono(1, 1));
  // Images of the order-4 matrix with U1 -> U2^{-1}, U2 -> U1.
  auto [e, f] = alpha1(GroupElement(0, -1, 1, 0).pow(3), TorusElement(Scalar(1)));
  EXPECT_EQ(e, mono(0, -1) - mono(1, 0));
  EXPECT_EQ(f, mono(1, 0) - mono(0, 1));
}

TEST(Koszul, Alpha2Examples) {
  const GroupElement id;
  EXPECT_EQ(alpha2(id, TorusElement(Scalar(1)), TorusElement()), (Scalar(1) - lambda) * mono(0, 1));
  EXPECT_EQ(alpha2(GroupElement(-1, 0, 0, -1), TorusElement(Scalar(1)), TorusElement()),
            mono(0, -1) - lambda * mono(0, 1));
}

TEST(Koszul, ComplexPropertyOnRandomCochains) {
  std::mt19937 rng(17);
  for (auto label : all_subgroup_labels())
    for (const auto& g : finite_subgroup(label).elements)
      for (int i = 0; i < 20; ++i) {
        TorusElement phi = fixtures::random_element(rng, 3, 4);
        auto [p1, p2] = alpha1(g, phi);
        EXPECT_TRUE(alpha2(g, p1, p2).is_zero());
      }
}

TEST(Koszul, CochainEvaluationMatchesAlphaMaps) {
  std::mt19937 rng(23);
  for (const auto& g : finite_subgroup(SubgroupLabel::Z6).elements) {
    TorusElement phi = fixtures::random_element(rng);
    TwistedCochain c0(g, 0, {phi});
    auto [a1, a2] = alpha1(g, phi);
    for (int j = 0; j < 2; ++j) {
      TorusElement v = evaluate(c0, resolution_differential(KoszulChain::generator(1, j)));
      EXPECT_EQ(v, -(j == 0 ? a1 : a2));
    }
    TorusElement f1 = fixtures::random_element(rng), f2 = fixtures::random_element(rng);
    TwistedCochain c1(g, 1, {f1, f2});
    EXPECT_EQ(evaluate(c1, resolution_differential(KoszulChain::generator(2, 0))), alpha2(g, f1, f2));
  }
}

TEST(Koszul, CochainValidation) {
  EXPECT_THROW(TwistedCochain(GroupElement(), 1, {TorusElement()}), ContractViolation);
  EXPECT_THROW(TwistedCochain(GroupElement(), 3, {TorusElement()}), ContractViolation);
  EXPECT_NO_THROW(TwistedCochain(GroupElement(), 2, {TorusElement()}));
}

TEST(Koszul, SupportShiftBound) {
  std::mt19937 rng(29);
  for (auto label : all_subgroup_labels())
    for (const auto& g : finite_subgroup(label).elements) {
      auto shifts = support_shifts(g);
      EXPECT_EQ(max_support_shift(g), 1);
      for (int i = 0; i < 10; ++i) {
        Exponent w{static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 7) - 3};
        auto [a, b] = alpha1(g, mono(w.n, w.m));
        for (const auto* out : {&a, &b})
          for (const auto& [e, c] : out->terms())
            EXPECT_TRUE(std::find(shifts.begin(), shifts.end(), e - w) != shifts.end());
        const TorusElement out2 = alpha2(g, mono(w.n, w.m), mono(w.n, w.m));
        for (const auto& [e, c] : out2.terms())
          EXPECT_TRUE(std::find(shifts.begin(), shifts.end(), e - w) != shifts.end());
      }
    }
}
