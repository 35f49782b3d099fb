#include <gtest/gtest.h>

#include <random>

#include "qtorus/cohomology.hpp"
#include "test_util.hpp"

using namespace qtorus;

namespace {

const GroupElement minus_id(-1, 0, 0, -1);
const GroupElement order4(0, -1, 1, 0);

std::vector<std::pair<int, Exponent>> labels(const std::vector<TwistedCochain>& reps) {
  std::vector<std::pair<int, Exponent>> out;
  for (const auto& r : reps) out.push_back(representative_label(r));
  return out;
}

}  // namespace

TEST(Window, ContractAndOrder) {
  EXPECT_THROW(Window(0), ContractViolation);
  Window w(2);
  auto ms = w.monomials();
  ASSERT_EQ(ms.size(), 25u);
  EXPECT_EQ(ms.front(), (Exponent{0, 0}));
  EXPECT_EQ(ms[1], (Exponent{1, 0}));
  EXPECT_EQ(ms[2], (Exponent{0, 1}));
  for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_TRUE(monomial_less(ms[i - 1], ms[i]));
  EXPECT_TRUE(w.contains({-2, 2}));
  EXPECT_FALSE(w.contains({3, 0}));
}

TEST(MapMatrix, ComplexPropertyOnCompatibleWindows) {
  for (auto label : all_subgroup_labels())
    for (const auto& g : finite_subgroup(label).elements) {
      SparseMatrix a1 = assemble_map_matrix(g, 1, Window(2));
      SparseMatrix a2 = assemble_map_matrix(g, 2, Window(3));
      ASSERT_EQ(a1.rows(), a2.cols());
      for (const auto& col : a1.column_vectors()) EXPECT_TRUE(a2.multiply(col).empty());
    }
  EXPECT_THROW(assemble_map_matrix(GroupElement(), 3, Window(1)), std::out_of_range);
}

TEST(MapMatrix, MinusIdentityShiftsByOneStep) {
  SparseMatrix m = assemble_map_matrix(minus_id, 1, Window(1));
  const auto in = Window(1).monomials();
  const auto out = Window(2).monomials();
  const int half = static_cast<int>(out.size());
  for (const auto& e : m.entries()) {
    Exponent d = out[static_cast<std::size_t>(e.row % half)] - in[static_cast<std::size_t>(e.col)];
    EXPECT_EQ(d.l1_norm(), 1);
    EXPECT_EQ(e.row < half ? d.m : d.n, 0);
  }
}

TEST(SectorCohomology, UntwistedDegrees) {
  SectorCohomology h0(GroupElement(), 0, 3), h1(GroupElement(), 1, 3), h2(GroupElement(), 2, 3);
  EXPECT_EQ(h0.dim(), 1);
  EXPECT_EQ(h1.dim(), 2);
  EXPECT_EQ(h2.dim(), 1);
  EXPECT_EQ(h0.representatives()[0].components[0], TorusElement(Scalar(1)));
  auto l1 = labels(h1.representatives());
  EXPECT_EQ(l1[0], (std::pair<int, Exponent>{1, {1, 0}}));
  EXPECT_EQ(l1[1], (std::pair<int, Exponent>{2, {0, 1}}));
  EXPECT_EQ(labels(h2.representatives())[0].second, (Exponent{1, 1}));
}

TEST(SectorCohomology, DerivationsRepresentDegreeOne) {
  SectorCohomology h1(GroupElement(), 1, 3);
  TwistedCochain d1(GroupElement(), 1, {TorusElement::U1(), TorusElement()});
  auto x = h1.coordinates(d1);
  ASSERT_EQ(x.size(), 2u);
  EXPECT_FALSE(x[0].is_zero());
  EXPECT_TRUE(x[1].is_zero());
  TwistedCochain not_closed(GroupElement(), 1, {TorusElement::U2(), TorusElement()});
  EXPECT_THROW(h1.coordinates(not_closed), std::out_of_range);
}

TEST(SectorCohomology, TwistedSectors) {
  EXPECT_EQ(SectorCohomology(minus_id, 0, 3).dim(), 0);
  EXPECT_EQ(SectorCohomology(minus_id, 1, 3).dim(), 0);
  SectorCohomology z2(minus_id, 2, 3);
  EXPECT_EQ(z2.dim(), 4);
  SectorCohomology z4(order4, 2, 3);
  ASSERT_EQ(z4.dim(), 2);
  auto l = labels(z4.representatives());
  EXPECT_EQ(l[0].second, (Exponent{0, 0}));
  EXPECT_EQ(l[1].second, (Exponent{1, 0}));
  for (const auto& [slot, e] : labels(z2.representatives())) {
    EXPECT_GE(e.n, 0);
    EXPECT_LE(e.n, 1);
    EXPECT_GE(e.m, 0);
    EXPECT_LE(e.m, 1);
  }
}

TEST(SectorCohomology, CoordinatesOfRepresentativesAndCoboundaries) {
  std::mt19937 rng(11);
  SectorCohomology h(minus_id, 2, 3);
  for (int i = 0; i < h.dim(); ++i) {
    auto x = h.coordinates(h.representatives()[static_cast<std::size_t>(i)]);
    for (int j = 0; j < h.dim(); ++j) EXPECT_EQ(x[static_cast<std::size_t>(j)], Scalar(i == j ? 1 : 0));
  }
  TorusElement a = fixtures::random_element(rng, 2), b = fixtures::random_element(rng, 2);
  TwistedCochain cob(minus_id, 2, {alpha2(minus_id, a, b)});
  EXPECT_TRUE(h.is_coboundary(cob));
  for (const auto& x : h.coordinates(cob)) EXPECT_TRUE(x.is_zero());
}

TEST(SectorCohomology, WindowMonotonicity) {
  auto r0 = hh_dim(GroupElement(), 0, Window(5));
  auto r2 = hh_dim(order4, 2, Window(5));
  for (std::size_t i = 1; i < r0.window_dims.size(); ++i) {
    EXPECT_GE(r0.window_dims[i].dim, r0.window_dims[i - 1].dim);
    EXPECT_LE(r2.window_dims[i].dim, r2.window_dims[i - 1].dim);
  }
  EXPECT_TRUE(r0.stable);
  EXPECT_TRUE(r2.stable);
  EXPECT_EQ(r2.raw_dim, 2);
  EXPECT_FALSE(hh_dim(order4, 2, Window(2)).stable);
}

TEST(Solvers, RecoverPreimages) {
  std::mt19937 rng(5);
  for (const auto& g : {GroupElement(), minus_id, order4}) {
    TorusElement p1 = fixtures::random_element(rng, 1), p2 = fixtures::random_element(rng, 1);
    TorusElement target = alpha2(g, p1, p2);
    auto psi = solve_alpha2(g, target, 3);
    ASSERT_TRUE(psi);
    EXPECT_EQ(alpha2(g, psi->components[0], psi->components[1]), target);

    TorusElement f = fixtures::random_element(rng, 1);
    auto [a, b] = alpha1(g, f);
    auto phi = solve_alpha1(g, a, b, 3);
    ASSERT_TRUE(phi);
    EXPECT_EQ(alpha1(g, phi->components[0]), std::make_pair(a, b));
  }
  EXPECT_FALSE(solve_alpha2(GroupElement(), TorusElement::monomial(Exponent{1, 1}), 4));
}

TEST(Invariants, MinusIdentitySectorOfZ2) {
  auto sg = finite_subgroup(SubgroupLabel::Z2);
  SectorCohomology h(minus_id, 2, 3);
  auto cert = invariant_dim(sg, h, true);
  EXPECT_EQ(cert.raw_dim, 4);
  EXPECT_EQ(cert.invariant_dim, 4);
  EXPECT_TRUE(cert.projector_idempotent);
  EXPECT_TRUE(cert.group_relations_hold);
  EXPECT_TRUE(cert.seeds_checked);
  EXPECT_TRUE(cert.seeds_agree);
  ASSERT_EQ(cert.action_matrices.size(), 2u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(cert.action_matrices[0][i][j], Scalar(i == j ? 1 : 0));
}

TEST(Invariants, Z4ActionOnMinusIdentitySector) {
  auto sg = finite_subgroup(SubgroupLabel::Z4);
  SectorCohomology h(minus_id, 2, 3);
  auto cert = invariant_dim(sg, h);
  EXPECT_EQ(cert.raw_dim, 4);
  EXPECT_TRUE(cert.group_relations_hold);
  EXPECT_TRUE(cert.projector_idempotent);
  EXPECT_EQ(cert.invariant_dim, 3);
}

TEST(Invariants, UntwistedDegreeOneHasNoInvariants) {
  auto sg = finite_subgroup(SubgroupLabel::Z2);
  auto cert = invariant_dim(sg, SectorCohomology(GroupElement(), 1, 3));
  EXPECT_EQ(cert.raw_dim, 2);
  EXPECT_EQ(cert.invariant_dim, 0);
}

TEST(OrbifoldTable, Z2AndZ3Totals) {
  TableOptions opt;
  opt.max_window = 4;
  auto t2 = orbifold_table(finite_subgroup(SubgroupLabel::Z2), opt);
  EXPECT_EQ(t2.totals, (std::array<int, 3>{1, 0, 5}));
  EXPECT_TRUE(t2.conclusive);
  auto t3 = orbifold_table(finite_subgroup(SubgroupLabel::Z3), opt);
  EXPECT_EQ(t3.totals, (std::array<int, 3>{1, 0, 7}));
  EXPECT_EQ(t3.sectors.size(), 3u);
}

TEST(Observer, SeesEveryEngineMatrix) {
  int calls = 0;
  set_matrix_observer([&calls](const std::string&, const std::vector<SparseVec>&, int, int) { ++calls; });
  SectorCohomology h(GroupElement(), 1, 2);
  set_matrix_observer(nullptr);
  EXPECT_EQ(calls, 2);
}
