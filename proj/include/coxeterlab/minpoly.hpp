#pragma once

#include <gmpxx.h>

#include <vector>

namespace coxeterlab {

/// Dense polynomial over Q, coefficients from the constant term upward.
/// Trailing zeros are stripped by every operation here; the zero polynomial
/// is the empty vector.
using QPoly = std::vector<mpq_class>;

namespace qpoly {

void trim(QPoly& p);
int degree(const QPoly& p);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& p);
/// Quotient and remainder; `b` must be nonzero.
void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
/// Monic gcd.
QPoly gcd(QPoly a, QPoly b);

}  // namespace qpoly

/// Minimal polynomial of 2cos(pi/L) over Q.
struct MinPoly {
  int level = 1;
  /// Monic, integer coefficients, constant term first.
  std::vector<mpz_class> poly;

  int degree() const { return static_cast<int>(poly.size()) - 1; }
};

/// The integer polynomial D_k with D_k(2cos t) = 2cos(k t)
/// (D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}).
QPoly dickson(int k);

/// Minimal polynomial of 2cos(pi/L), memoized. Requires L >= 1; L above the
/// configured level cap raises GuardError.
const MinPoly& min_poly(int level);

/// Euler's totient.
int euler_phi(int n);

}  // namespace coxeterlab
