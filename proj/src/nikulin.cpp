#include "coxeterlab/nikulin.hpp"

#include <nlohmann/json.hpp>

#include "coxeterlab/error.hpp"

namespace coxeterlab {
namespace {

mpz_class binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string q(const mpq_class& x) { return x.get_str(); }

}  // namespace

mpq_class A_coeff(int d, int i, int k) {
  const int hi = (d + 1) / 2, lo = d / 2;
  if (d < 1 || i < 0 || i >= k || k > hi) {
    throw DomainError("A_coeff needs 0 <= i < k <= ceil(d/2), got d=" + std::to_string(d) +
                      " i=" + std::to_string(i) + " k=" + std::to_string(k));
  }
  mpq_class r(binom(d - i, k - i) * (binom(hi, i) + binom(lo, i)), binom(hi, k) + binom(lo, k));
  r.canonicalize();
  return r;
}

mpq_class mean_polygon_bound(int d) {
  if (d < 3) throw DomainError("mean polygon bound needs d >= 3");
  mpq_class r = d % 2 == 0 ? mpq_class(4 * (d - 1), d - 2) : mpq_class(4 * d, d - 1);
  r.canonicalize();
  return r;
}

FaceBoundReport three_free_contradiction(int d) {
  if (d < 3 || d > 29) throw DomainError("dimension must be in 3..29");
  FaceBoundReport r;
  r.d = d;
  r.a_bound = mean_polygon_bound(d);
  r.two_thirds = mpq_class(2, 3);
  r.binom_d2 = mpq_class(binom(d, 2));
  // a_2 = C(d,2) a_0 / kappa and kappa < A_d, so a_{2,4} > (2/3) a_2 > lower a_0.
  r.lower = r.two_thirds * r.binom_d2 / r.a_bound;
  r.upper = d - 1;
  r.contradiction = r.lower > r.upper || (r.lower == r.upper && (r.lower_strict || r.upper_strict));
  r.chain_valid = r.a_bound <= mpq_class(13, 3);
  return r;
}

std::string FaceBoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["d"] = d;
  j["A_d_1_2"] = q(a_bound);
  j["two_thirds"] = q(two_thirds);
  j["binom_d_2"] = q(binom_d2);
  j["lower"] = {{"value", q(lower) + "*a0"}, {"strict", lower_strict}};
  j["upper"] = {{"value", q(upper) + "*a0"}, {"strict", upper_strict}};
  j["gap"] = q(gap());
  j["contradiction"] = contradiction;
  j["chain_valid"] = chain_valid;
  return j.dump();
}

}  // namespace coxeterlab
