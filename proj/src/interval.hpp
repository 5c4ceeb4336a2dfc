#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <vector>

namespace coxeterlab::detail {

/// Closed interval with MPFR endpoints, rounded outward on every operation.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval& operator=(const Interval& other);
  ~Interval();

  void set(const mpq_class& q);
  void add(const Interval& other);
  void add(const mpq_class& q);
  void mul(const Interval& other);

  /// -1 or +1 if the interval excludes zero, 0 otherwise.
  int sign() const;

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo() { return lo_; }
  mpfr_t& hi() { return hi_; }
  mpfr_prec_t precision() const { return prec_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Enclosure of 2cos(pi/L) at the given precision.
Interval generator_enclosure(int level, mpfr_prec_t prec);

/// Interval Horner evaluation of sum coeffs[i] * x^i.
Interval evaluate(const std::vector<mpq_class>& coeffs, const Interval& x);

/// Exact rational value of an MPFR number.
mpq_class to_rational(const mpfr_t& x);

}  // namespace coxeterlab::detail
