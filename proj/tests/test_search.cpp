#include <gtest/gtest.h>

#include <array>
#include <numeric>
#include <set>

#include "coxeterlab/config.hpp"
#include "coxeterlab/error.hpp"
#include "coxeterlab/search.hpp"
#include "coxeterlab/taxonomy.hpp"
#include "oracles.hpp"

using namespace coxeterlab;

namespace {

CoxeterDiagram triangle(int a, int b, int c) {
  // a = [u1 u3], b = [u2 u3], c = [u1 u2]
  CoxeterDiagram l({"u1", "u2", "u3"});
  if (a > 2) l.add_edge(0, 2, EdgeLabel::finite(a));
  if (b > 2) l.add_edge(1, 2, EdgeLabel::finite(b));
  if (c > 2) l.add_edge(0, 1, EdgeLabel::finite(c));
  return l;
}

// Every labelling of the new pairs, filtered by the arithmetic scan.
size_t brute_expansions(const CoxeterDiagram& l, int extra, int cap) {
  const int k = l.order(), n = k + extra;
  std::vector<std::pair<int, int>> pairs;
  for (int x = k; x < n; ++x)
    for (int u = 0; u < x; ++u) pairs.emplace_back(u, x);
  std::vector<int> vals{0};
  for (int m = 3; m <= cap; ++m) vals.push_back(m);
  std::vector<int> lset(k);
  std::iota(lset.begin(), lset.end(), 0);
  std::set<std::vector<int>> seen;
  std::vector<size_t> idx(pairs.size(), 0);
  while (true) {
    CoxeterDiagram d = l;
    for (int x = 1; x <= extra; ++x) d.add_vertex("x" + std::to_string(x));
    for (size_t p = 0; p < pairs.size(); ++p)
      if (vals[idx[p]]) d.add_edge(pairs[p].first, pairs[p].second, EdgeLabel::finite(vals[idx[p]]));
    bool attached = true;
    for (int x = k; x < n; ++x) {
      bool any = false;
      for (int u = 0; u < k; ++u) any = any || d.edge(u, x);
      attached = attached && any;
    }
    if (attached) {
      const auto r = scan(d);
      if (r.parabolic.empty() && r.lanner == std::vector<std::vector<int>>{lset}) seen.insert(canonical_form(d));
    }
    size_t p = 0;
    while (p < idx.size() && ++idx[p] == vals.size()) idx[p++] = 0;
    if (p == idx.size()) break;
  }
  return seen.size();
}

}  // namespace

TEST(Expansion, MatchesBruteForceOneVertex) {
  for (const auto& t : std::vector<std::array<int, 3>>{{3, 4, 3}, {2, 3, 7}, {3, 3, 4}, {2, 4, 5}, {4, 4, 4}, {5, 5, 5}}) {
    const auto l = triangle(t[0], t[1], t[2]);
    EXPECT_EQ(expansion_search(l, 1, 6).diagrams.size(), brute_expansions(l, 1, 6)) << t[0] << t[1] << t[2];
  }
  for (const auto& e : catalog_table3(5)) {
    if (e.diagram.order() != 4) continue;
    EXPECT_EQ(expansion_search(e.diagram, 1, 5).diagrams.size(), brute_expansions(e.diagram, 1, 5)) << e.name;
  }
}

TEST(Expansion, MatchesBruteForceTwoVertices) {
  const auto l = triangle(3, 4, 3);
  const auto r = expansion_search(l, 2, 5);
  EXPECT_EQ(r.diagrams.size(), brute_expansions(l, 2, 5));
  EXPECT_FALSE(r.empty());
}

TEST(Expansion, ResultsAreAdmissibleAndDistinct) {
  const auto r = expansion_search(triangle(3, 4, 3), 2, 10);
  std::set<std::vector<int>> forms;
  for (const auto& d : r.diagrams) {
    const auto s = scan(d);
    EXPECT_TRUE(s.parabolic.empty());
    EXPECT_EQ(s.lanner, (std::vector<std::vector<int>>{{0, 1, 2}}));
    EXPECT_TRUE(forms.insert(canonical_form(d)).second);
  }
}

TEST(Expansion, JobsDoNotChangeResults) {
  const auto a = expansion_search(triangle(3, 4, 3), 2, 10, 1);
  const auto b = expansion_search(triangle(3, 4, 3), 2, 10, 4);
  EXPECT_EQ(expansion_json_lines(a), expansion_json_lines(b));
}

TEST(Expansion, EmptinessAndCapStability) {
  for (const auto& e : catalog_table3(10)) {
    const int order = e.diagram.order();
    if (order < 3) continue;
    const int extra = order == 3 ? 5 : 3;
    EXPECT_TRUE(expansion_search(e.diagram, extra, 10, 2).empty()) << e.name;
    if (order > 3) EXPECT_TRUE(expansion_search(e.diagram, extra, 13, 2).empty()) << e.name;
  }
}

TEST(Expansion, Preconditions) {
  EXPECT_THROW(expansion_search(triangle(2, 3, 7), 0, 10), DomainError);
  EXPECT_THROW(expansion_search(triangle(2, 3, 7), 1, 4), DomainError);
}

TEST(Product, DisconnectedPair) {
  ProductSpec spec;
  spec.component_orders = {2, 2};
  spec.allow_inter_edges = false;
  spec.require_linked = false;
  const auto r = product_search(spec);
  ASSERT_EQ(r.diagrams.size(), 1u);
  const auto& a = r.diagrams[0];
  EXPECT_EQ(a.verdict.status, SuperhyperbolicVerdict::Status::Superhyperbolic);
  for (int p : {2, 3, 7}) {
    for (int q : {2, 5}) {
      EXPECT_EQ(inertia(a.diagram, {{"rho1", p}, {"rho2", q}}).neg, 2);
    }
  }
}

TEST(Product, WitnessesAreTheComponents) {
  ProductSpec spec;
  spec.component_orders = {3, 2};
  spec.label_cap = 6;
  spec.jobs = 2;
  const auto r = product_search(spec);
  EXPECT_FALSE(r.diagrams.empty());
  for (const auto& a : r.diagrams) {
    auto comps = a.components;
    auto witnesses = a.lanner_witnesses;
    std::sort(comps.begin(), comps.end());
    std::sort(witnesses.begin(), witnesses.end());
    EXPECT_EQ(witnesses, comps);
    EXPECT_TRUE(scan(a.diagram).parabolic.empty());
    // Dotted variables appear exactly inside order-2 components.
    for (const auto& [e, l] : a.diagram.edges()) {
      if (!l.is_dotted()) continue;
      EXPECT_EQ(a.components[1], (std::vector<int>{e.first, e.second}));
    }
  }
}

TEST(Product, BoldOrDottedInterEdgesCreateWitnesses) {
  ProductSpec spec;
  spec.component_orders = {3, 2};
  spec.label_cap = 5;
  const auto r = product_search(spec);
  for (const auto& a : r.diagrams) {
    const auto& c0 = a.components[0];
    const auto& c1 = a.components[1];
    for (int u : c0) {
      for (int v : c1) {
        for (const EdgeLabel& forced : {EdgeLabel::bold(), EdgeLabel::dotted("sigma")}) {
          CoxeterDiagram d = a.diagram;
          d.set_edge(u, v, forced);
          const auto s = scan(d);
          EXPECT_TRUE(!s.parabolic.empty() || s.lanner.size() > 2);
        }
      }
    }
  }
}

TEST(Product, CaseBConfigurationsCertified) {
  const auto r = product_search(case_b_spec(7));
  EXPECT_FALSE(r.diagrams.empty());
  for (const auto& a : r.diagrams) {
    EXPECT_EQ(a.verdict.status, SuperhyperbolicVerdict::Status::Superhyperbolic);
  }
}

TEST(Product, OrderFourWithThreePairsIsEmpty) {
  ProductSpec spec;
  spec.component_orders = {4, 2, 2, 2};
  spec.label_cap = 7;
  spec.jobs = 4;
  EXPECT_TRUE(product_search(spec).diagrams.empty());
}

TEST(Product, GuardsAndValidation) {
  ProductSpec big;
  big.component_orders = {5, 5, 3};
  EXPECT_THROW(product_search(big), GuardError);
  ProductSpec bad;
  bad.component_orders = {2, 3};
  EXPECT_THROW(product_search(bad), DomainError);
  bad.component_orders = {6};
  EXPECT_THROW(product_search(bad), DomainError);
  const int saved = limits().product_order_cap;
  limits().product_order_cap = 4;
  ProductSpec small;
  small.component_orders = {3, 2};
  EXPECT_THROW(product_search(small), GuardError);
  limits().product_order_cap = saved;
}

TEST(Product, DeterministicAcrossJobs) {
  ProductSpec spec;
  spec.component_orders = {3, 2};
  spec.label_cap = 5;
  spec.jobs = 1;
  const auto a = product_json_lines(product_search(spec));
  spec.jobs = 4;
  EXPECT_EQ(a, product_json_lines(product_search(spec)));
}

TEST(Neighbor, TableOfSix) {
  const auto t = neighbor_table_check(7);
  std::vector<std::array<int, 3>> got;
  for (const auto& r : t.rows) got.push_back({r.a, r.b, r.c});
  const std::vector<std::array<int, 3>> expected{{4, 5, 2}, {2, 5, 4}, {5, 5, 2}, {2, 3, 7}, {2, 4, 5}, {3, 4, 3}};
  EXPECT_EQ(got, expected);
  const auto& last = t.rows.back();
  EXPECT_EQ(last.local_det * last.local_det, Scalar(mpq_class(2, 9)));
  ASSERT_EQ(t.partners.size(), 1u);
  EXPECT_EQ(t.partners[0].c, 7);
  const auto wide = neighbor_table_check(20);
  ASSERT_EQ(wide.partners.size(), 1u);
  EXPECT_EQ(wide.rows.size(), 6u);
  EXPECT_THROW(neighbor_table_check(6), DomainError);
}

TEST(Universe, OrdersAndCap) {
  EXPECT_EQ(lanner_universe(2, 10).size(), 1u);
  EXPECT_EQ(lanner_universe(4, 10).size(), 9u);
  EXPECT_EQ(lanner_universe(5, 10).size(), 5u);
  for (const auto& [name, d] : lanner_universe(3, 6)) EXPECT_LE(d.max_label(), 6) << name;
  EXPECT_THROW(lanner_universe(6, 10), DomainError);
}
