// Seeded property checks shared by the gtest suite and the acceptance run.
// Each returns the number of violated cases.
#pragma once

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "coxeterlab/minpoly.hpp"
#include "coxeterlab/spectra.hpp"
#include "oracles.hpp"

namespace props {

using namespace coxeterlab;

inline Scalar random_scalar(std::mt19937& rng, int level) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  std::vector<mpq_class> c;
  for (int i = 0; i < min_poly(level).degree(); ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return Scalar::from_coeffs(level, c);
}

inline int field_axioms(unsigned seed, int cases) {
  std::mt19937 rng(seed);
  // Every lcm of three of these stays within the default level cap.
  const int levels[] = {1, 4, 5, 7, 8, 12, 15, 20, 24, 30};
  int bad = 0;
  for (int t = 0; t < cases; ++t) {
    const Scalar a = random_scalar(rng, levels[rng() % 10]);
    const Scalar b = random_scalar(rng, levels[rng() % 10]);
    const Scalar c = random_scalar(rng, levels[rng() % 10]);
    bad += !(a + b == b + a);
    bad += !(a * b == b * a);
    bad += !((a + b) + c == a + (b + c));
    bad += !((a * b) * c == a * (b * c));
    bad += !(a * (b + c) == a * b + a * c);
    bad += !(a + Scalar(0L) == a && a * Scalar(1L) == a);
    bad += !((a - a).is_zero());
    if (!a.is_zero()) bad += !(a * a.inverse() == Scalar(1L) && (b / a) * a == b);
    // Order compatibility with the real embedding.
    const double x = a.approx(), y = b.approx();
    if (std::fabs(x - y) > 1e-9) bad += (a < b) != (x < y);
  }
  return bad;
}

inline Assignment assignment_for(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(5, 20);
  return {{"rho1", mpq_class(num(rng), 4)}, {"rho2", mpq_class(num(rng), 4)}};
}

// n- and n+ never decrease when passing to a superdiagram.
inline int interlacing(unsigned seed, int cases) {
  oracle::RandomDiagrams gen(seed);
  std::mt19937 rng(seed + 1);
  int bad = 0;
  for (int t = 0; t < cases; ++t) {
    const auto d = gen.diagram(gen.uniform(2, 7), 0.5, 2);
    const Assignment a = assignment_for(rng);
    const Inertia whole = inertia(d, a);
    std::vector<int> keep;
    for (int i = 0; i < d.order(); ++i)
      if (rng() % 3) keep.push_back(i);
    const Inertia part = inertia(induced_diagram(d, keep), a);
    bad += part.neg > whole.neg || part.pos > whole.pos;
    bad += whole.order() != d.order();
  }
  return bad;
}

// sign(det) = (-1)^{n-} whenever det != 0.
inline int sylvester_parity(unsigned seed, int cases) {
  oracle::RandomDiagrams gen(seed);
  std::mt19937 rng(seed + 1);
  int bad = 0;
  for (int t = 0; t < cases; ++t) {
    const auto d = gen.diagram(gen.uniform(1, 7), 0.5, 2);
    const Assignment a = assignment_for(rng);
    std::map<std::string, Scalar> at;
    for (const auto& [k, v] : a) at[k] = Scalar(v);
    const RhoPoly p = det_elim(d);
    std::map<std::string, Scalar> used;
    for (const auto& v : p.vars()) used[v] = at[v];
    const int s = p.evaluate(used).sign();
    const Inertia in = inertia(d, a);
    if (s == 0) {
      bad += in.zero == 0;
    } else {
      bad += in.zero != 0 || s != (in.neg % 2 ? -1 : 1);
    }
  }
  return bad;
}

// det(<S1, S2>, <v1, v2>) = det(S1, v1) det(S2, v2) - w^2.
inline int join_identity(unsigned seed, int cases) {
  oracle::RandomDiagrams gen(seed);
  int bad = 0;
  for (int t = 0; t < cases; ++t) {
    const CoxeterDiagram s1 = gen.diagram(gen.uniform(1, 4), 0.6, 1);
    const CoxeterDiagram raw = gen.diagram(gen.uniform(1, 4), 0.6, 1);
    std::vector<std::string> names;
    for (const auto& v : raw.vertices()) names.push_back("w" + v);
    CoxeterDiagram s2(names);
    for (const auto& [e, l] : raw.edges()) s2.add_edge(e.first, e.second, l);
    const int v1 = gen.uniform(0, s1.order() - 1), v2 = gen.uniform(0, s2.order() - 1);
    const EdgeLabel label = EdgeLabel::finite(gen.uniform(3, 6));
    const CoxeterDiagram joined = join_diagrams(s1, v1, s2, v2, label);
    std::vector<int> rest;
    for (int i = 0; i < joined.order(); ++i)
      if (i != v1 && i != s1.order() + v2) rest.push_back(i);
    LocalDet lhs;
    lhs.numerator = det_elim(joined);
    lhs.denominator = det_elim(induced_diagram(joined, rest));
    // The identity is a statement about nonvanishing local determinants.
    if (lhs.denominator.is_zero()) continue;
    const LocalDet rhs = join_local_det(s1, v1, s2, v2, edge_weight(label, label.m));
    bad += !same_value(lhs, rhs);
  }
  return bad;
}

// Determinants multiply and inertias add over disjoint unions.
inline int direct_sum(unsigned seed, int cases) {
  oracle::RandomDiagrams gen(seed);
  std::mt19937 rng(seed + 1);
  int bad = 0;
  for (int t = 0; t < cases; ++t) {
    const auto a = gen.diagram(gen.uniform(1, 4), 0.6, 2);
    const auto raw = gen.diagram(gen.uniform(1, 4), 0.6, 2);
    std::vector<std::string> names;
    for (const auto& v : raw.vertices()) names.push_back("w" + v);
    CoxeterDiagram b(names);
    for (const auto& [e, l] : raw.edges()) b.add_edge(e.first, e.second, l);
    const auto u = disjoint_union(a, b);
    const Assignment asg = assignment_for(rng);
    bad += !(det_elim(u) == det_elim(a) * det_elim(b));
    bad += !(inertia(u, asg) == inertia(a, asg) + inertia(b, asg));
  }
  return bad;
}

}  // namespace props
