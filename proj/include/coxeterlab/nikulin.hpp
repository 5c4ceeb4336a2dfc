#pragma once

#include <string>

#include <gmpxx.h>

namespace coxeterlab {

/// C(d-i, k-i) * (C(ceil(d/2), i) + C(floor(d/2), i)) / (C(ceil(d/2), k) + C(floor(d/2), k)).
/// Requires 0 <= i < k <= ceil(d/2) (the odd-d mean-polygon case needs
/// k = ceil(d/2)); DomainError otherwise.
mpq_class A_coeff(int d, int i, int k);

/// 4(d-1)/(d-2) for even d, 4d/(d-1) for odd d; equals A_coeff(d, 1, 2).
/// DomainError for d < 3.
mpq_class mean_polygon_bound(int d);

/// Comparison of the two bounds on a_{2,4} (2-faces with four vertices) of
/// a compact 3-free polytope, both as multiples of a_0.
struct FaceBoundReport {
  int d = 0;
  mpq_class a_bound;      // A_d^(1,2), the bound on the mean polygon size
  mpq_class two_thirds;   // share of 2-faces that are not triangles, at least
  mpq_class binom_d2;     // C(d, 2) = a_2 * kappa / a_0
  mpq_class lower;        // a_{2,4} > lower * a_0
  bool lower_strict = true;
  mpq_class upper;        // a_{2,4} <= upper * a_0
  bool upper_strict = false;
  bool contradiction = false;
  /// A_d^(1,2) <= 13/3, so the single d = 13 bound on kappa applies.
  bool chain_valid = false;

  mpq_class gap() const { return lower - upper; }
  std::string to_json() const;
};

/// DomainError unless 3 <= d <= 29.
FaceBoundReport three_free_contradiction(int d);

}  // namespace coxeterlab
