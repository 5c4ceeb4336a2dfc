#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "coxeterlab/minpoly.hpp"

namespace coxeterlab {

/// An element of the real field Q(c), c = 2cos(pi/L), stored as a polynomial
/// in c reduced modulo the minimal polynomial of c. L is the scalar's level;
/// rationals live at level 1. Binary operations on scalars of different
/// levels lift both operands to the lcm of the levels.
class Scalar {
 public:
  Scalar();
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& value);  // NOLINT(google-explicit-constructor)

  /// Builds a scalar from power-basis coordinates at the given level.
  static Scalar from_coeffs(int level, std::vector<mpq_class> coeffs);

  /// 2cos(pi/L) at level L.
  static Scalar generator(int level);
  /// cos(pi/m) at level `level`, which must be a multiple of m
  /// (0 selects level m). Labels m <= 3 give rationals at any level.
  static Scalar cos_pi_over(int m, int level = 0);
  /// sin(pi/m)^2 = 1 - cos(pi/m)^2.
  static Scalar sin_sq_pi_over(int m, int level = 0);
  static Scalar sqrt2();
  static Scalar sqrt3();
  static Scalar sqrt5();

  int level() const { return field_->level; }
  int degree() const { return field_->degree(); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  /// The same number expressed at a multiple of the current level.
  Scalar lifted(int level) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  mpq_class rational() const;

  /// Exact sign. Zero is detected from the canonical form; the sign of a
  /// nonzero value comes from interval evaluation with doubling precision.
  int sign() const;
  double approx() const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  /// Power-basis rendering, e.g. "[L=4] 1/2*c" where c = 2cos(pi/L).
  std::string to_string() const;

 private:
  Scalar(const MinPoly* field, std::vector<mpq_class> coeffs);

  const MinPoly* field_;
  std::vector<mpq_class> coeffs_;  // exactly degree() entries
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace coxeterlab
