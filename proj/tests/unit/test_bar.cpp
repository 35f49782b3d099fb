#include <gtest/gtest.h>

#include <random>

#include "qtorus/bar.hpp"
#include "qtorus/transport.hpp"
#include "test_util.hpp"

using namespace qtorus;

namespace {

const GroupElement minus_id(-1, 0, 0, -1);
TorusElement mono(int n, int m) { return TorusElement::monomial(Exponent{n, m}); }

BarCochain random_cochain(std::mt19937& rng, int degree, GroupElement sector = {}) {
  std::map<BarCochain::Args, TorusElement> table;
  std::uniform_int_distribution<int> e(-1, 1);
  for (int i = 0; i < 30; ++i) {
    BarCochain::Args a;
    for (int k = 0; k < degree; ++k) a.push_back({e(rng), e(rng)});
    table[a] = fixtures::random_element(rng, 1, 2);
  }
  return BarCochain::from_table(degree, sector, table);
}

bool agree(const BarCochain& f, const BarCochain& g, int radius = 1) { return vanishes_on_box(f - g, radius, 2000); }

}  // namespace

TEST(BarCochain, Contracts) {
  EXPECT_THROW(BarCochain::zero(4), ContractViolation);
  EXPECT_THROW(BarCochain::from_table(1, {}, {{{}, mono(0, 0)}}), ContractViolation);
  BarCochain f = BarCochain::zero(2);
  EXPECT_THROW(f({{0, 0}}), std::invalid_argument);
  EXPECT_THROW(bar_differential(BarCochain::zero(3)), std::out_of_range);
  EXPECT_THROW(cup_product(BarCochain::zero(2), BarCochain::zero(2)), std::out_of_range);
  EXPECT_THROW(gerstenhaber_bracket(BarCochain::zero(0), BarCochain::zero(0)), std::out_of_range);
  EXPECT_THROW(f + BarCochain::zero(1), std::invalid_argument);
}

TEST(BarCochain, MultilinearEvaluation) {
  BarCochain m = multiplication_cochain();
  TorusElement x = mono(1, 0) + Scalar(2) * mono(0, 1);
  EXPECT_EQ(m.evaluate({x, mono(0, 1)}), multiply(x, mono(0, 1)));
}

TEST(BarDifferential, DegreeZeroIsTwistedCommutator) {
  const TorusElement a = mono(1, 1) + Scalar(3) * mono(0, -1);
  BarCochain d = bar_differential(BarCochain::constant(a, minus_id));
  for (const auto& x : Window(1).monomials()) {
    TorusElement expected = multiply(act(minus_id, TorusElement::monomial(x)), a) - multiply(a, mono(x.n, x.m));
    EXPECT_EQ(d({x}), expected);
  }
}

TEST(BarDifferential, SquaresToZero) {
  std::mt19937 rng(3);
  for (const auto& g : {GroupElement(), minus_id, GroupElement(0, 1, -1, -1)}) {
    EXPECT_TRUE(vanishes_on_box(bar_differential(bar_differential(BarCochain::constant(mono(2, -1), g))), 1));
    EXPECT_TRUE(vanishes_on_box(bar_differential(bar_differential(random_cochain(rng, 1, g))), 1));
  }
}

TEST(BarDifferential, DerivationsAreCocycles) {
  EXPECT_TRUE(vanishes_on_box(bar_differential(derivation_cochain(1)), 2));
  EXPECT_TRUE(vanishes_on_box(bar_differential(derivation_cochain(2)), 2));
  EXPECT_TRUE(vanishes_on_box(bar_differential(multiplication_cochain()), 1));
}

TEST(CupProduct, Examples) {
  std::mt19937 rng(4);
  BarCochain g = random_cochain(rng, 2);
  EXPECT_TRUE(agree(cup_product(BarCochain::constant(mono(0, 0)), g), g));
  BarCochain c = cup_product(derivation_cochain(1), derivation_cochain(2));
  EXPECT_EQ(c({{1, 0}, {0, 1}}), multiply(mono(1, 0), mono(0, 1)));
}

TEST(CupProduct, Associative) {
  std::mt19937 rng(8);
  for (const auto& s : {GroupElement(), minus_id}) {
    BarCochain f = random_cochain(rng, 1, s), g = random_cochain(rng, 1, s), h = random_cochain(rng, 1);
    EXPECT_TRUE(agree(cup_product(cup_product(f, g), h), cup_product(f, cup_product(g, h))));
  }
}

TEST(CupProduct, DifferentialIsGradedDerivation) {
  std::mt19937 rng(9);
  BarCochain f = random_cochain(rng, 1), g = random_cochain(rng, 1);
  BarCochain lhs = bar_differential(cup_product(f, g));
  BarCochain rhs = cup_product(bar_differential(f), g) - cup_product(f, bar_differential(g));
  EXPECT_TRUE(agree(lhs, rhs));
}

TEST(Bracket, Examples) {
  const TorusElement a = mono(2, 1) + mono(-1, 0);
  BarCochain fa = gerstenhaber_bracket(derivation_cochain(1), BarCochain::constant(a));
  EXPECT_EQ(fa({}), derivation_delta(1, a));
  EXPECT_TRUE(vanishes_on_box(gerstenhaber_bracket(derivation_cochain(1), derivation_cochain(2)), 2));
}

TEST(Bracket, DifferentialIsBracketWithMultiplication) {
  std::mt19937 rng(10);
  BarCochain m = multiplication_cochain();
  BarCochain f = random_cochain(rng, 1);
  EXPECT_TRUE(agree(bar_differential(f), -gerstenhaber_bracket(f, m)));
  BarCochain a = BarCochain::constant(mono(1, -1));
  EXPECT_TRUE(agree(bar_differential(a), -gerstenhaber_bracket(a, m)));
}

TEST(Bracket, GradedAntisymmetryAndJacobi) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 3; ++trial) {
    BarCochain f = random_cochain(rng, 1), g = random_cochain(rng, 2), h = random_cochain(rng, 1);
    EXPECT_TRUE(agree(gerstenhaber_bracket(f, g), -gerstenhaber_bracket(g, f)));
    // degrees |f|-1 = 0, |g|-1 = 1, |h|-1 = 0
    BarCochain j1 = gerstenhaber_bracket(f, gerstenhaber_bracket(g, h));
    BarCochain j2 = gerstenhaber_bracket(gerstenhaber_bracket(f, g), h);
    BarCochain j3 = gerstenhaber_bracket(g, gerstenhaber_bracket(f, h));
    EXPECT_TRUE(agree(j1, j2 + j3));
  }
}

TEST(GroupAction, IdentityAndAverage) {
  std::mt19937 rng(13);
  auto sg = finite_subgroup(SubgroupLabel::Z4);
  BarCochain f = random_cochain(rng, 1);
  EXPECT_TRUE(agree(act_on_cochain(GroupElement(), f), f));
  BarCochain avg = group_average(sg.elements, f);
  for (const auto& d : sg.elements) EXPECT_TRUE(agree(act_on_cochain(d, avg), avg));
  BarCochain pi = cup_product(derivation_cochain(1), derivation_cochain(2)) -
                  cup_product(derivation_cochain(2), derivation_cochain(1));
  EXPECT_TRUE(agree(act_on_cochain(sg.generator, pi), pi));
}

TEST(BarChains, BoundaryAndContraction) {
  Tensor g = bar_generator({{1, 0}, {0, 1}});
  EXPECT_EQ(g.arity(), 4);
  Tensor d = bar_boundary(g);
  EXPECT_TRUE(bar_boundary(d).terms().empty());
  Tensor c = bar_contract(d);
  EXPECT_EQ(bar_boundary(c) + bar_contract(bar_boundary(d)), d);
}
