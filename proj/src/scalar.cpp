#include "coxeterlab/scalar.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "coxeterlab/error.hpp"
#include "interval.hpp"

namespace coxeterlab {

namespace {

// Images of c_from^i, i < deg(from), in the power basis at level `to`.
using LiftTable = std::vector<std::vector<mpq_class>>;

std::vector<mpq_class> reduce_mod(std::vector<mpq_class> full, const MinPoly& f) {
  const int n = f.degree();
  for (int k = static_cast<int>(full.size()) - 1; k >= n; --k) {
    if (full[k] == 0) continue;
    const mpq_class c = full[k];
    for (int i = 0; i < n; ++i) full[k - n + i] -= c * f.poly[i];
    full[k] = 0;
  }
  full.resize(n);
  return full;
}

std::vector<mpq_class> mul_mod(const std::vector<mpq_class>& a,
                               const std::vector<mpq_class>& b, const MinPoly& f) {
  std::vector<mpq_class> full(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      full[i + j] += a[i] * b[j];
    }
  }
  return reduce_mod(std::move(full), f);
}

const LiftTable& lift_table(int from, int to) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, LiftTable> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({from, to});
    if (it != cache.end()) return it->second;
  }
  const MinPoly& src = min_poly(from);
  const MinPoly& dst = min_poly(to);
  // c_from = D_{to/from}(c_to).
  QPoly image = dickson(to / from);
  std::vector<mpq_class> gen = reduce_mod(std::vector<mpq_class>(image.begin(), image.end()), dst);
  LiftTable table;
  std::vector<mpq_class> power(dst.degree(), 0);
  power[0] = 1;
  for (int i = 0; i < src.degree(); ++i) {
    table.push_back(power);
    power = mul_mod(power, gen, dst);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(from, to), std::move(table)).first->second;
}

int common_level(int a, int b) { return std::lcm(a, b); }

}  // namespace

Scalar::Scalar() : field_(&min_poly(1)), coeffs_(1, 0) {}

Scalar::Scalar(long value) : field_(&min_poly(1)), coeffs_(1, mpq_class(value)) {}

Scalar::Scalar(const mpq_class& value) : field_(&min_poly(1)), coeffs_(1, value) {
  coeffs_[0].canonicalize();
}

Scalar::Scalar(const MinPoly* field, std::vector<mpq_class> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

Scalar Scalar::from_coeffs(int level, std::vector<mpq_class> coeffs) {
  const MinPoly& f = min_poly(level);
  if (static_cast<int>(coeffs.size()) < f.degree()) coeffs.resize(f.degree(), 0);
  for (auto& c : coeffs) c.canonicalize();
  return Scalar(&f, reduce_mod(std::move(coeffs), f));
}

Scalar Scalar::generator(int level) {
  if (level == 1) return Scalar(-2);
  return from_coeffs(level, {0, 1});
}

Scalar Scalar::cos_pi_over(int m, int level) {
  if (m < 1) throw DomainError("cos_pi_over: m must be >= 1");
  if (m == 1) return Scalar(-1);
  if (m == 2) return Scalar(0);
  if (m == 3) return Scalar(mpq_class(1, 2));
  if (level == 0) level = m;
  if (level % m != 0) {
    throw DomainError("cos(pi/" + std::to_string(m) + ") does not live at level " +
                      std::to_string(level));
  }
  Scalar c = generator(m).lifted(level);
  c *= Scalar(mpq_class(1, 2));
  return c;
}

Scalar Scalar::sin_sq_pi_over(int m, int level) {
  Scalar c = cos_pi_over(m, level);
  return Scalar(1) - c * c;
}

Scalar Scalar::sqrt2() { return generator(4); }
Scalar Scalar::sqrt3() { return generator(6); }
Scalar Scalar::sqrt5() { return generator(5) * Scalar(2) - Scalar(1); }

Scalar Scalar::lifted(int level) const {
  if (level == this->level()) return *this;
  if (level % this->level() != 0) {
    throw DomainError("cannot lift level " + std::to_string(this->level()) + " to " +
                      std::to_string(level));
  }
  const MinPoly& dst = min_poly(level);
  std::vector<mpq_class> out(dst.degree(), 0);
  if (this->level() == 1) {
    out[0] = coeffs_[0];
    return Scalar(&dst, std::move(out));
  }
  const LiftTable& table = lift_table(this->level(), level);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < out.size(); ++j) out[j] += coeffs_[i] * table[i][j];
  }
  return Scalar(&dst, std::move(out));
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

mpq_class Scalar::rational() const {
  if (!is_rational()) throw DomainError("scalar is not rational: " + to_string());
  return coeffs_[0];
}

int Scalar::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coeffs_[0]);
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    auto box = detail::generator_enclosure(level(), prec);
    const int s = detail::evaluate(coeffs_, box).sign();
    if (s != 0) return s;
  }
}

double Scalar::approx() const {
  if (is_rational()) return coeffs_[0].get_d();
  // Double Horner loses everything to cancellation at high degree.
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    auto box = detail::generator_enclosure(level(), prec);
    const auto v = detail::evaluate(coeffs_, box);
    const double lo = mpfr_get_d(v.lo(), MPFR_RNDD), hi = mpfr_get_d(v.hi(), MPFR_RNDU);
    if (hi - lo <= 1e-15 * std::max(1.0, std::fabs(lo)) || prec > 1 << 16) return (lo + hi) / 2;
  }
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p)) {
    if (e & 1) r = mulmod(r, a, p);
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

u64 nth_prime(size_t k) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mutex);
  u64 next = primes.empty() ? (1ull << 62) - 1 : primes.back() - 2;
  while (primes.size() <= k) {
    while (!is_prime(next)) next -= 2;
    primes.push_back(next);
    next -= 2;
  }
  return primes[k];
}

u64 reduce(const mpz_class& z, u64 p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mpz_class(std::to_string(p)).get_mpz_t());
  return std::stoull(r.get_str());
}

using ModPoly = std::vector<u64>;

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Inverse of a modulo (f, p); empty when a is not invertible.
ModPoly inverse_mod(ModPoly a, ModPoly f, u64 p) {
  mtrim(a);
  mtrim(f);
  ModPoly r0 = f, r1 = a, s0, s1{1};
  auto axpy = [&](ModPoly& x, const ModPoly& y, u64 k, size_t shift) {
    // x -= k * y * t^shift
    if (x.size() < y.size() + shift) x.resize(y.size() + shift, 0);
    for (size_t i = 0; i < y.size(); ++i) {
      const u64 t = mulmod(k, y[i], p);
      u64& xi = x[i + shift];
      xi = xi >= t ? xi - t : xi + p - t;
    }
  };
  while (r1.size() > 1) {
    const u64 inv = powmod(r1.back(), p - 2, p);
    while (r0.size() >= r1.size()) {
      const size_t shift = r0.size() - r1.size();
      const u64 k = mulmod(r0.back(), inv, p);
      axpy(r0, r1, k, shift);
      axpy(s0, s1, k, shift);
      mtrim(r0);
      if (r0.empty()) return {};
    }
    mtrim(s0);
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  if (r1.empty()) return {};
  const u64 inv = powmod(r1[0], p - 2, p);
  for (auto& c : s1) c = mulmod(c, inv, p);
  return s1;
}

bool rational_reconstruct(const mpz_class& u, const mpz_class& m, mpq_class& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (abs(t1) > bound || t1 == 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

}  // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero scalar");
  if (is_rational()) return Scalar(mpq_class(1) / coeffs_[0]);
  // Multimodular inverse of the integer numerator, rational reconstruction,
  // then an exact check.
  mpz_class den = 1;
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> num;
  for (const auto& c : coeffs_) num.push_back(mpz_class(c * den));
  const size_t n = coeffs_.size();
  std::vector<mpz_class> residue(n, 0);
  mpz_class modulus = 1;
  size_t used = 0, next_check = 4;
  for (size_t k = 0; k < 4096; ++k) {
    const u64 p = nth_prime(k);
    ModPoly a(n), f(field_->poly.size());
    for (size_t i = 0; i < n; ++i) a[i] = reduce(num[i], p);
    for (size_t i = 0; i < f.size(); ++i) f[i] = reduce(field_->poly[i], p);
    ModPoly b = inverse_mod(a, f, p);
    if (b.empty()) continue;
    b.resize(n, 0);
    const mpz_class pz(std::to_string(p));
    mpz_class minv;
    mpz_invert(minv.get_mpz_t(), mpz_class(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    for (size_t i = 0; i < n; ++i) {
      mpz_class delta = (mpz_class(std::to_string(b[i])) - residue[i]) * minv;
      mpz_fdiv_r(delta.get_mpz_t(), delta.get_mpz_t(), pz.get_mpz_t());
      residue[i] += modulus * delta;
    }
    modulus *= pz;
    if (++used < next_check) continue;
    next_check *= 2;
    std::vector<mpq_class> cand(n);
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = rational_reconstruct(residue[i], modulus, cand[i]);
    if (!ok) continue;
    for (auto& c : cand) c *= den;
    Scalar out(field_, cand);
    const Scalar check = *this * out;
    if (check.is_rational() && check.rational() == 1) return out;
  }
  throw Error("scalar inverse did not converge");
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.level() == 1) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  if (level() != rhs.level()) {
    const int l = common_level(level(), rhs.level());
    if (l != level()) *this = lifted(l);
    if (l != rhs.level()) return *this += rhs.lifted(l);
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (rhs.level() == 1) {
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (level() == 1) {
    const mpq_class k = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_) c *= k;
    return *this;
  }
  if (level() != rhs.level()) {
    const int l = common_level(level(), rhs.level());
    if (l != level()) *this = lifted(l);
    if (l != rhs.level()) return *this *= rhs.lifted(l);
  }
  coeffs_ = mul_mod(coeffs_, rhs.coeffs_, *field_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (is_rational()) {
    os << coeffs_[0];
    return os.str();
  }
  os << "[L=" << level() << "]";
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    os << (first ? " " : " + ") << coeffs_[i];
    if (i >= 1) os << "*c";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace coxeterlab
