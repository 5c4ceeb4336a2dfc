#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxeterlab/scalar.hpp"

namespace coxeterlab {

/// Polynomial in named variables with Scalar coefficients.
///
/// Canonical form: variable names sorted, every listed variable occurs in
/// some term, and no term has a zero coefficient. Two equal polynomials
/// therefore have identical vars() and terms() up to coefficient levels.
class RhoPoly {
 public:
  using Exponents = std::vector<int>;

  RhoPoly() = default;
  RhoPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  RhoPoly(long c);           // NOLINT(google-explicit-constructor)

  static RhoPoly variable(const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Requires is_constant().
  Scalar constant() const;
  Scalar constant_term() const;
  int total_degree() const;
  int degree(const std::string& var) const;
  /// Coefficient of the given exponent vector (aligned with vars()).
  Scalar coefficient(const Exponents& e) const;

  RhoPoly substitute(const std::string& var, const RhoPoly& value) const;
  /// var := 1 + new_var, re-expanded.
  RhoPoly shift(const std::string& var, const std::string& new_var) const;
  /// All variables must be assigned.
  Scalar evaluate(const std::map<std::string, Scalar>& assignment) const;

  /// Quotient when `d` divides exactly, nullopt otherwise. `d` nonzero.
  std::optional<RhoPoly> divide_exact(const RhoPoly& d) const;

  /// Coefficients c_0..c_n in the single variable (empty for zero).
  /// Requires at most one variable.
  std::vector<Scalar> univariate_coeffs() const;

  RhoPoly operator-() const;
  RhoPoly& operator+=(const RhoPoly& rhs);
  RhoPoly& operator-=(const RhoPoly& rhs);
  RhoPoly& operator*=(const RhoPoly& rhs);

  friend RhoPoly operator+(RhoPoly a, const RhoPoly& b) { return a += b; }
  friend RhoPoly operator-(RhoPoly a, const RhoPoly& b) { return a -= b; }
  friend RhoPoly operator*(RhoPoly a, const RhoPoly& b) { return a *= b; }
  friend bool operator==(const RhoPoly& a, const RhoPoly& b);
  friend bool operator!=(const RhoPoly& a, const RhoPoly& b) { return !(a == b); }

  /// Factored radical-basis rendering, e.g. "(1/16)*(4*sqrt2*rho^2 - 1)".
  std::string to_string() const;

 private:
  void canonicalize();
  RhoPoly aligned(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  std::map<Exponents, Scalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const RhoPoly& p);

/// Coordinates of x over {sqrt(n) : n squarefree, n | 30}, when x lies in
/// their span. Pairs (n, q) with q != 0, sorted by decreasing n; n = 1 is
/// the rational part.
std::optional<std::vector<std::pair<int, mpq_class>>> radical_coords(const Scalar& x);

/// Radical-basis rendering of a scalar ("3*sqrt10 - 7*sqrt2 - 9"), falling
/// back to powers of cL = 2cos(pi/L).
std::string format_scalar(const Scalar& x);

}  // namespace coxeterlab
