#include "interval.hpp"

#include <algorithm>

namespace coxeterlab::detail {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Interval::set(const mpq_class& q) {
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

void Interval::add(const Interval& other) {
  mpfr_add(lo_, lo_, other.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, other.hi_, MPFR_RNDU);
}

void Interval::add(const mpq_class& q) {
  mpfr_add_q(lo_, lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_add_q(hi_, hi_, q.get_mpq_t(), MPFR_RNDU);
}

void Interval::mul(const Interval& other) {
  mpfr_t p[4];
  mpfr_t q[4];
  const mpfr_t* a[2] = {&lo_, &hi_};
  const mpfr_t* b[2] = {&other.lo_, &other.hi_};
  for (int i = 0; i < 4; ++i) {
    mpfr_init2(p[i], prec_);
    mpfr_init2(q[i], prec_);
    mpfr_mul(p[i], *a[i / 2], *b[i % 2], MPFR_RNDD);
    mpfr_mul(q[i], *a[i / 2], *b[i % 2], MPFR_RNDU);
  }
  mpfr_set(lo_, p[0], MPFR_RNDD);
  mpfr_set(hi_, q[0], MPFR_RNDU);
  for (int i = 1; i < 4; ++i) {
    mpfr_min(lo_, lo_, p[i], MPFR_RNDD);
    mpfr_max(hi_, hi_, q[i], MPFR_RNDU);
  }
  for (int i = 0; i < 4; ++i) {
    mpfr_clear(p[i]);
    mpfr_clear(q[i]);
  }
}

int Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

Interval generator_enclosure(int level, mpfr_prec_t prec) {
  Interval out(prec);
  // Work with a few guard bits, then widen into the output precision.
  const mpfr_prec_t work = prec + 16;
  mpfr_t pi_lo, pi_hi, x_lo, x_hi;
  mpfr_inits2(work, pi_lo, pi_hi, x_lo, x_hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  mpfr_div_ui(x_lo, pi_lo, static_cast<unsigned long>(level), MPFR_RNDD);
  mpfr_div_ui(x_hi, pi_hi, static_cast<unsigned long>(level), MPFR_RNDU);
  // cos is decreasing on [0, pi/2]; level >= 2 keeps both endpoints there.
  mpfr_cos(out.lo(), x_hi, MPFR_RNDD);
  mpfr_cos(out.hi(), x_lo, MPFR_RNDU);
  mpfr_mul_2ui(out.lo(), out.lo(), 1, MPFR_RNDD);
  mpfr_mul_2ui(out.hi(), out.hi(), 1, MPFR_RNDU);
  mpfr_clears(pi_lo, pi_hi, x_lo, x_hi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

Interval evaluate(const std::vector<mpq_class>& coeffs, const Interval& x) {
  Interval acc(x.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc.mul(x);
    acc.add(*it);
  }
  return acc;
}

mpq_class to_rational(const mpfr_t& x) {
  mpz_class mant;
  const mpfr_exp_t exp = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  mpq_class out(mant);
  if (exp >= 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(exp));
    out *= scale;
  } else {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(-exp));
    out /= scale;
  }
  out.canonicalize();
  return out;
}

}  // namespace coxeterlab::detail
