#include <gtest/gtest.h>

#include "coxeterlab/error.hpp"
#include "coxeterlab/spectra.hpp"
#include "oracles.hpp"

using namespace coxeterlab;

namespace {

ScalarMatrix to_scalar(const std::vector<std::vector<RhoPoly>>& g, const std::map<std::string, Scalar>& at) {
  ScalarMatrix m(g.size(), std::vector<Scalar>(g.size()));
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) m[i][j] = g[i][j].evaluate(at);
  return m;
}

}  // namespace

TEST(Determinant, EliminationMatchesLeibniz) {
  oracle::RandomDiagrams gen(21);
  for (int t = 0; t < 150; ++t) {
    const auto d = gen.diagram(gen.uniform(1, 6));
    EXPECT_EQ(det_elim(d), oracle::leibniz_det(oracle::gram(d))) << serialize_diagram(d);
  }
}

TEST(Determinant, CyclesMatchLeibniz) {
  oracle::RandomDiagrams gen(22);
  for (int t = 0; t < 100; ++t) {
    const auto d = gen.diagram(gen.uniform(1, 6), 0.6);
    EXPECT_EQ(det_cycles(d), oracle::leibniz_det(oracle::gram(d))) << serialize_diagram(d);
  }
}

TEST(Determinant, KnownValues) {
  // A_2: 3/4; G~_2 triangle (2,3,6) singular; dotted pair 1 - rho^2.
  CoxeterDiagram a2({"a", "b"});
  a2.add_edge(0, 1, EdgeLabel::finite(3));
  EXPECT_EQ(det_elim(a2), RhoPoly(Scalar(mpq_class(3, 4))));
  CoxeterDiagram g({"a", "b", "c"});
  g.add_edge(0, 1, EdgeLabel::finite(3));
  g.add_edge(1, 2, EdgeLabel::finite(6));
  EXPECT_TRUE(det_elim(g).is_zero());
  CoxeterDiagram p({"a", "b"});
  p.add_edge(0, 1, EdgeLabel::dotted("rho"));
  const RhoPoly r = RhoPoly::variable("rho");
  EXPECT_EQ(det_elim(p), RhoPoly(1L) - r * r);
  EXPECT_EQ(det_elim(CoxeterDiagram()), RhoPoly(1L));
}

TEST(Determinant, CycleGuard) {
  oracle::RandomDiagrams gen(1);
  EXPECT_THROW(det_cycles(gen.diagram(12, 0.3, 0)), GuardError);
}

TEST(Inertia, MatchesDescartesOracle) {
  oracle::RandomDiagrams gen(33);
  for (int t = 0; t < 120; ++t) {
    const auto d = gen.diagram(gen.uniform(1, 6), 0.5, 1);
    const Assignment a{{"rho1", mpq_class(gen.uniform(5, 16), 4)}};
    std::map<std::string, Scalar> at;
    for (const auto& [k, v] : a) at[k] = Scalar(v);
    const auto expected = oracle::descartes_signature(to_scalar(oracle::gram(d), at));
    const Inertia got = inertia(d, d.has_dotted() ? a : Assignment{});
    EXPECT_EQ(got.pos, expected.pos) << serialize_diagram(d);
    EXPECT_EQ(got.neg, expected.neg) << serialize_diagram(d);
    EXPECT_EQ(got.zero, expected.zero) << serialize_diagram(d);
  }
}

TEST(Inertia, MatchesFloatingEigenvalues) {
  oracle::RandomDiagrams gen(34);
  int compared = 0;
  for (int t = 0; t < 200; ++t) {
    const auto d = gen.diagram(gen.uniform(2, 7), 0.5, 1);
    const double rho = 1.75;
    const auto ev = oracle::eigenvalues(oracle::numeric_gram(d, rho));
    if (std::any_of(ev.begin(), ev.end(), [](double x) { return std::fabs(x) < 1e-7; })) continue;
    ++compared;
    const Inertia in = inertia(d, {{"rho1", mpq_class(7, 4)}});
    EXPECT_EQ(in.neg, std::count_if(ev.begin(), ev.end(), [](double x) { return x < 0; }));
    EXPECT_EQ(in.zero, 0);
  }
  EXPECT_GT(compared, 100);
}

TEST(Inertia, UnassignedVariable) {
  CoxeterDiagram p({"a", "b"});
  p.add_edge(0, 1, EdgeLabel::dotted("rho"));
  EXPECT_THROW(inertia(p), UnassignedVariableError);
  EXPECT_EQ(inertia(p, {{"rho", 2}}), (Inertia{1, 1, 0}));
}

TEST(LocalDet, JoinIdentity) {
  // det(<S1, S2>) over det(S1 \ v1) det(S2 \ v2) equals det(S1,v1) det(S2,v2) - w^2.
  oracle::RandomDiagrams gen(44);
  for (int t = 0; t < 40; ++t) {
    CoxeterDiagram s1 = gen.diagram(gen.uniform(1, 3), 0.6, 1);
    CoxeterDiagram s2b = gen.diagram(gen.uniform(1, 3), 0.6, 1);
    std::vector<std::string> names;
    for (const auto& v : s2b.vertices()) names.push_back("w" + v);
    CoxeterDiagram s2(names);
    for (const auto& [e, l] : s2b.edges()) s2.add_edge(e.first, e.second, l);
    const int v1 = gen.uniform(0, s1.order() - 1), v2 = gen.uniform(0, s2.order() - 1);
    const EdgeLabel label = EdgeLabel::finite(gen.uniform(3, 6));
    const CoxeterDiagram joined = join_diagrams(s1, v1, s2, v2, label);
    std::vector<int> both{v1, s1.order() + v2};
    LocalDet lhs;
    lhs.numerator = det_elim(joined);
    std::vector<int> rest;
    for (int i = 0; i < joined.order(); ++i)
      if (i != both[0] && i != both[1]) rest.push_back(i);
    lhs.denominator = det_elim(induced_diagram(joined, rest));
    if (lhs.denominator.is_zero()) continue;
    const RhoPoly w = edge_weight(label, label.m);
    const LocalDet rhs = join_local_det(s1, v1, s2, v2, w);
    EXPECT_TRUE(same_value(lhs, rhs)) << serialize_diagram(joined);
  }
}

TEST(LocalDet, ZeroDenominatorRejected) {
  CoxeterDiagram g({"a", "b", "c", "d"});
  g.add_edge(0, 1, EdgeLabel::finite(3));
  g.add_edge(1, 2, EdgeLabel::finite(6));
  g.add_edge(2, 3, EdgeLabel::finite(3));
  EXPECT_THROW(local_det(g, {3}), DomainError);
}

TEST(DirectSum, DeterminantsMultiplyInertiasAdd) {
  oracle::RandomDiagrams gen(55);
  for (int t = 0; t < 40; ++t) {
    const auto a = gen.diagram(gen.uniform(1, 4), 0.6, 0);
    const auto b0 = gen.diagram(gen.uniform(1, 4), 0.6, 0);
    std::vector<std::string> names;
    for (const auto& v : b0.vertices()) names.push_back("w" + v);
    CoxeterDiagram b(names);
    for (const auto& [e, l] : b0.edges()) b.add_edge(e.first, e.second, l);
    const auto u = disjoint_union(a, b);
    EXPECT_EQ(det_elim(u), det_elim(a) * det_elim(b));
    EXPECT_EQ(inertia(u), inertia(a) + inertia(b));
  }
}
