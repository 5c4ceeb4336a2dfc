#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxeterlab/certify.hpp"
#include "coxeterlab/diagram.hpp"

namespace coxeterlab {

/// Diagrams on L plus `extra` new vertices, each new vertex joined to L by
/// at least one edge, all new edges absent or finite with label <= cap, such
/// that L is the only Lannér subdiagram and nothing is parabolic. Results
/// are distinct up to isomorphism, in canonical order.
struct ExpansionResult {
  std::vector<CoxeterDiagram> diagrams;
  std::uint64_t nodes = 0;  // search tree nodes visited
  int cap = 0;
  bool empty() const { return diagrams.empty(); }
};

ExpansionResult expansion_search(const CoxeterDiagram& lanner, int extra, int cap = 10,
                                 int jobs = 1);

/// Allowed codes (0 = absent, else a finite label) on the pair joining
/// vertex a_vertex of component a_comp to vertex b_vertex of component b_comp.
struct EdgeConstraint {
  int a_comp = 0, a_vertex = 0, b_comp = 0, b_vertex = 0;
  std::vector<int> allowed;
};

struct ProductSpec {
  /// Orders of the Lannér components, non-increasing, each in 2..5.
  std::vector<int> component_orders;
  /// Largest finite label, inside triangles and on inter-component edges.
  int label_cap = 10;
  /// Drop diagrams with two components joined by no edge: such a pair is a
  /// product of two hyperbolic diagrams, hence superhyperbolic already.
  bool require_linked = true;
  /// With false, no edges between components are enumerated.
  bool allow_inter_edges = true;
  /// If nonempty, one fixed diagram per component instead of the universe.
  std::vector<CoxeterDiagram> fixed_components;
  /// Per-pair restrictions; with constrained_only, unlisted pairs stay absent.
  std::vector<EdgeConstraint> constraints;
  bool constrained_only = false;
  int jobs = 1;
};

/// The (3,2,2,2) configuration of the case where the triangle carries a
/// label 4 and the three dotted pairs are chained: components
/// <u1 u2 u3>, <u4 u7>, <u5 u8>, <u6 u9>, with u1u4 in {3,4,5},
/// u7u9 in {3..6}, u5u9 in {absent, 3} and the remaining pictured edges simple.
ProductSpec case_b_spec(int cap = 7);

struct AdmissibleDiagram {
  CoxeterDiagram diagram;
  std::vector<std::string> component_names;
  std::vector<std::vector<int>> components;
  std::vector<std::vector<int>> lanner_witnesses;
  SuperhyperbolicVerdict verdict;
};

struct ProductResult {
  std::vector<AdmissibleDiagram> diagrams;
  std::uint64_t nodes = 0;
  std::uint64_t pruned_unlinked = 0;  // distinct diagrams dropped by require_linked
  int cap = 0;
};

/// GuardError when the total order exceeds limits().product_order_cap;
/// DomainError for malformed specs.
ProductResult product_search(const ProductSpec& spec);

/// Lannér diagrams of the given order with labels <= cap, up to isomorphism.
/// The order-2 entry is a dotted edge with variable `var`.
std::vector<std::pair<std::string, CoxeterDiagram>> lanner_universe(int order, int cap,
                                                                    const std::string& var = "rho");

/// A triangle (a, b, c) with a = [u1 u3], b = [u2 u3], c = [u1 u2] and a
/// vertex u4 joined to u3 by a simple edge.
struct NeighborRow {
  int a = 2, b = 2, c = 2;
  Scalar local_det;  // |det(L, u3)| = d(a, b, c)
  bool expandable_by_two = false;
};

struct NeighborTable {
  int cap = 0;
  /// (a) configurations with every subdiagram but L elliptic and
  /// |det(L, u3)| <= 1/2, by increasing local determinant.
  std::vector<NeighborRow> rows;
  /// (b) the rows where <L, u4> extends to a two-vertex expansion of L.
  std::vector<NeighborRow> survivors;
  /// (c) triangles with simple edges at u4 (a, b <= 3) and
  /// |det(L2, u4)|^2 <= 9/32.
  std::vector<NeighborRow> partners;
};

NeighborTable neighbor_table_check(int cap = 7, int jobs = 1);

/// One JSON object per line.
std::string expansion_json_lines(const ExpansionResult& r);
std::string product_json_lines(const ProductResult& r);

}  // namespace coxeterlab
