#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxeterlab/diagram.hpp"
#include "coxeterlab/rho_poly.hpp"
#include "coxeterlab/spectra.hpp"

namespace coxeterlab {

/// d(k,l,m) = (cos^2(pi/k) + cos^2(pi/l) + 2cos(pi/k)cos(pi/l)cos(pi/m)) / sin^2(pi/m) - 1,
/// minus the local determinant of the (k,l,m) triangle at the vertex where
/// k and l meet.
Scalar d_func(int k, int l, int m);

/// D = (cos(pi/l') + cos(pi/k'))^2 - sin^2(pi/l') cos^2(pi/m') / d(k,l,m).
/// DomainError when d(k,l,m) = 0.
Scalar D_func(int k, int l, int m, int k2, int l2, int m2);

/// Evidence that a polynomial is positive whenever every variable exceeds 1.
struct PositivityCertificate {
  enum class Kind { ShiftPositive, SturmWitness, Failed };

  Kind kind = Kind::Failed;
  /// ShiftPositive: the polynomial after var := 1 + t_var (nonnegative
  /// coefficients, at least one positive).
  std::optional<RhoPoly> shifted;
  /// SturmWitness: (x - 1)^k factor stripped before counting roots on (1, inf).
  int root_at_one = 0;
  /// Failed: an assignment with value <= 0, when one was found.
  std::optional<Assignment> counterexample;
  /// Failed without a refutation (multivariate, shift test inconclusive).
  bool incomplete = false;

  bool certified() const { return kind != Kind::Failed; }
  std::string to_string() const;
};

PositivityCertificate positive_on_ray(const RhoPoly& p);

struct SuperhyperbolicVerdict {
  enum class Status { Superhyperbolic, Unknown, Inapplicable };

  Status status = Status::Unknown;
  bool holds_for_all_rho = false;
  /// Determinant of the diagram, or of the subdiagram the argument used.
  RhoPoly det;
  PositivityCertificate certificate;
  /// Vertices of the subdiagram whose determinant was certified (all of
  /// them unless interlacing through a subdiagram was needed; the leaf and
  /// its neighbour for dotted_leaf).
  std::vector<int> subdiagram;
  /// Lannér witness inside `subdiagram`.
  std::vector<int> lanner_witness;
  /// "det_parity", "disjoint_witnesses", "dotted_leaf" or a reason for failure.
  std::string method;
};

std::string to_string(SuperhyperbolicVerdict::Status s);

/// n- >= 2 for every assignment of the dotted variables > 1, established by
/// either two Lannér witnesses with no edges between them, or a Lannér
/// witness plus det > 0 (det > 0 forces n- even), or a dotted leaf passing
/// dotted_leaf_test (det then holds det(<w,S>) - det(S)). When these fail,
/// subdiagrams of order >= 3 are tried largest first, since n- only grows
/// under taking superdiagrams.
SuperhyperbolicVerdict certify_superhyperbolic_family(const CoxeterDiagram& d,
                                                      bool try_subdiagrams = true);

struct DottedLeafResult {
  RhoPoly det_s;       // det(S)
  RhoPoly det_ws;      // det(<w, S>)
  RhoPoly det_vws;     // det(<v, w, S>)
  RhoPoly delta;       // det(<w, S>) - det(S)
  bool identity_holds = false;  // det(<v,w,S>) = det(<w,S>) - rho^2 det(S)
  bool s_has_hyperbolic = false;
  PositivityCertificate certificate;
  bool superhyperbolic = false;
};

/// `d` is <v, w, S>: v must be a leaf joined only to w by a symbolic dotted
/// edge. DomainError otherwise.
DottedLeafResult dotted_leaf_test(const CoxeterDiagram& d, const std::string& v,
                                  const std::string& w);

/// A determinant identity on a built-in fixture: either det of a
/// subdiagram, or the dotted-leaf difference det(<w,S>) - det(S).
struct IdentityCheck {
  std::string name;
  std::string fixture;
  std::vector<std::string> subset;  // empty: whole diagram
  std::string leaf_v, leaf_w;       // set for leaf differences
  RhoPoly expected;
  RhoPoly computed;
  bool matches = false;
  PositivityCertificate certificate;
};

/// The inline determinants of the case analysis (case D, two case E variants).
std::vector<IdentityCheck> case_identity_checks();
/// S1..S7, U, V, W determinants and the six leaf differences A..F.
std::vector<IdentityCheck> formula_identity_checks();

/// The nine label tuples (k, l, m, k', l', m') of diagrams of the form
/// lanner_pair_diagram listed as superhyperbolic.
std::vector<std::vector<int>> superhyperbolic_tuples();

}  // namespace coxeterlab
