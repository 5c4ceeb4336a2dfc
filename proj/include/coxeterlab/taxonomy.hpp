#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxeterlab/canonical.hpp"
#include "coxeterlab/diagram.hpp"
#include "coxeterlab/spectra.hpp"

namespace coxeterlab {

enum class DiagramClass { Elliptic, Parabolic, Hyperbolic, Superhyperbolic, OtherIndefinite };

std::string to_string(DiagramClass c);
/// n- = 0: elliptic or parabolic by n0; n- = 1 hyperbolic; n- >= 2
/// superhyperbolic. OtherIndefinite is kept for completeness and is not
/// produced for unit-diagonal matrices.
DiagramClass class_of(const Inertia& in);
/// UnassignedVariableError for free dotted variables.
DiagramClass classify(const CoxeterDiagram& d, const Assignment& assignment = {});

/// Hyperbolic with every proper subdiagram elliptic. A dotted pair, symbolic
/// or numeric, is the order-2 case.
bool is_lanner(const CoxeterDiagram& d);

enum class ScanPredicate { Lanner, ParabolicConnected, Parabolic };
enum class ScanMethod { Exact, Catalog };

/// Minimal non-elliptic subdiagrams, split by kind.
struct ScanReport {
  std::vector<std::vector<int>> lanner;
  std::vector<std::vector<int>> parabolic;  // connected
};

/// Exact: bottom-up over vertex subsets, taking a determinant only when all
/// maximal proper subsets are elliptic. Catalog: matches every connected
/// subset against the three catalog tables. Symbolic dotted edges need no assignment.
ScanReport scan(const CoxeterDiagram& d, ScanMethod method = ScanMethod::Exact);

/// Subsets satisfying the predicate, sorted by size then lexicographically.
/// Parabolic lists every subset whose components are elliptic or connected
/// parabolic with at least one parabolic; the other two list the minimal
/// witnesses.
std::vector<std::vector<int>> scan_subdiagrams(const CoxeterDiagram& d, ScanPredicate predicate,
                                               ScanMethod method = ScanMethod::Exact);

/// Hyperbolic and free of parabolic subdiagrams. This is necessary, not
/// sufficient, for the diagram to come from a compact polytope.
bool polytope_admissible(const CoxeterDiagram& d, const Assignment& assignment = {});

enum class CatalogTable { Elliptic = 1, Parabolic = 2, Lanner = 3 };

struct CatalogEntry {
  CatalogTable table = CatalogTable::Elliptic;
  std::string family;       // "A", "B", "D", "G2", "F4", "E", "H", "~A", ..., "L2".."L5"
  std::vector<int> params;  // rank, label, or triangle labels
  std::string name;         // "A_5", "G_2^(7)", "~E_8", "L3(2,3,7)", "L4#3"
  CoxeterDiagram diagram;
};

/// Elliptic table up to rank max_n; G_2^(m) for 5 <= m <= max_label.
std::vector<CatalogEntry> catalog_table1(int max_n = 10, int max_label = 10);
/// Parabolic table up to rank max_n (order max_n + 1).
std::vector<CatalogEntry> catalog_table2(int max_n = 10);
/// Lannér table: the dotted pair, triangles with labels <= max_label, and the
/// finitely many order-4 and order-5 entries.
std::vector<CatalogEntry> catalog_table3(int max_label = 10);
std::string catalog_json(int max_n = 10, int max_label = 10);

/// Canonical form up to isomorphism (edge codes: 0 absent, 1 bold,
/// 2 dotted, m finite). Dotted values and variable names are ignored.
std::vector<int> canonical_form(const CoxeterDiagram& d);
CodeMatrix code_matrix(const CoxeterDiagram& d);

/// Table entry isomorphic to the connected diagram `d`, if any.
std::optional<CatalogEntry> catalog_match(const CoxeterDiagram& d);

/// Ellipticity from the shape of the components alone (no arithmetic).
bool is_elliptic_structural(const CoxeterDiagram& d);

}  // namespace coxeterlab
