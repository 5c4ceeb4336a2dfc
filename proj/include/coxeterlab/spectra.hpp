#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxeterlab/diagram.hpp"
#include "coxeterlab/rho_poly.hpp"

namespace coxeterlab {

/// Rational values for dotted variables (each > 1 when used as weights).
using Assignment = std::map<std::string, mpq_class>;

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Gram matrix: unit diagonal, -weight off the diagonal, 0 for absent edges.
struct GramMatrix {
  int n = 0;
  std::vector<std::vector<RhoPoly>> entries;

  const RhoPoly& at(int i, int j) const { return entries[i][j]; }
};

/// Positive weight of an edge label: cos(pi/m), 1 for bold, the dotted value
/// or variable. `level` must be a multiple of every finite label in play.
RhoPoly edge_weight(const EdgeLabel& label, int level);

GramMatrix gram(const CoxeterDiagram& d);
/// Gram matrix with every symbolic dotted variable replaced by its value.
ScalarMatrix numeric_gram(const CoxeterDiagram& d, const Assignment& assignment = {});
ScalarMatrix substitute(const GramMatrix& g, const Assignment& assignment);

/// Fraction-free (Bareiss) elimination; det of the empty matrix is 1.
RhoPoly det_elim(const GramMatrix& g);
RhoPoly det_elim(const CoxeterDiagram& d);
/// Cycle-sum expansion over sets of disjoint cycles. Order above the
/// configured cap raises GuardError.
RhoPoly det_cycles(const CoxeterDiagram& d);
/// Gaussian elimination over the scalar field.
Scalar det_numeric(const ScalarMatrix& m);

/// det(S) / det(S \ T). The quotient is filled in when the division is exact.
struct LocalDet {
  RhoPoly numerator;
  RhoPoly denominator;
  std::optional<RhoPoly> quotient;
};

/// DomainError when det(S \ T) vanishes identically.
LocalDet local_det(const CoxeterDiagram& s, const std::vector<int>& t);

/// det(S1, v1) * det(S2, v2) - w^2 as a quotient over
/// det(S1 \ v1) * det(S2 \ v2).
LocalDet join_local_det(const CoxeterDiagram& s1, int v1, const CoxeterDiagram& s2, int v2,
                        const RhoPoly& w);

/// Disjoint union of s1 and s2 plus the edge v1 v2. Vertex names must be
/// distinct across the two diagrams.
CoxeterDiagram join_diagrams(const CoxeterDiagram& s1, int v1, const CoxeterDiagram& s2, int v2,
                             const EdgeLabel& label);

/// Disjoint union; names must not collide.
CoxeterDiagram disjoint_union(const CoxeterDiagram& a, const CoxeterDiagram& b);

/// Two local determinants are equal as rational functions.
bool same_value(const LocalDet& a, const LocalDet& b);

struct Inertia {
  int pos = 0;
  int neg = 0;
  int zero = 0;

  int order() const { return pos + neg + zero; }
  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.pos == b.pos && a.neg == b.neg && a.zero == b.zero;
  }
  friend bool operator!=(const Inertia& a, const Inertia& b) { return !(a == b); }
  friend Inertia operator+(const Inertia& a, const Inertia& b) {
    return {a.pos + b.pos, a.neg + b.neg, a.zero + b.zero};
  }
  std::string to_string() const;
};

/// Symmetric elimination with 1x1 pivots, and 2x2 pivots when the remaining
/// diagonal vanishes.
Inertia inertia(const ScalarMatrix& m);
/// UnassignedVariableError when a symbolic variable has no value.
Inertia inertia(const GramMatrix& g, const Assignment& assignment);
Inertia inertia(const CoxeterDiagram& d, const Assignment& assignment = {});

}  // namespace coxeterlab
