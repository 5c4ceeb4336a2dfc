#pragma once

#include <utility>
#include <vector>

#include "coxeterlab/scalar.hpp"

namespace coxeterlab {

/// Dense univariate polynomial over Scalar, constant term first; the zero
/// polynomial is empty.
using UPoly = std::vector<Scalar>;

namespace upoly {

void trim(UPoly& p);
int degree(const UPoly& p);
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Scalar& k);
void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
UPoly derivative(const UPoly& p);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);
Scalar eval(const UPoly& p, const Scalar& x);

/// Yun's decomposition: p = lc * prod f_i^i with squarefree, pairwise
/// coprime monic f_i. Pairs (f_i, i) with deg f_i > 0.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

/// Sturm sequence p, p', -rem(...), ...
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Number of distinct real roots in (a, +inf). Requires p(a) != 0.
int count_roots_above(const UPoly& p, const Scalar& a);
/// Number of distinct real roots in (a, b]. Requires p(a) != 0, a < b.
int count_roots_between(const UPoly& p, const Scalar& a, const Scalar& b);
/// Number of distinct real roots in (-inf, a). Requires p(a) != 0.
int count_roots_below(const UPoly& p, const Scalar& a);

/// Multiplicity of x = a as a root.
int root_multiplicity(const UPoly& p, const Scalar& a);

}  // namespace upoly
}  // namespace coxeterlab
