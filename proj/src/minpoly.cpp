#include "coxeterlab/minpoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "coxeterlab/config.hpp"
#include "coxeterlab/error.hpp"
#include "interval.hpp"

namespace coxeterlab {

namespace qpoly {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

QPoly derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly out(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long>(i);
  trim(out);
  return out;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  rem = a;
  trim(rem);
  const int db = degree(b);
  if (degree(rem) < db) {
    quot.clear();
    return;
  }
  quot.assign(rem.size() - b.size() + 1, 0);
  const mpq_class& lead = b.back();
  for (int k = degree(rem); k >= db; --k) {
    if (rem[k] == 0) continue;
    mpq_class c = rem[k] / lead;
    quot[k - db] = c;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= c * b[i];
  }
  trim(rem);
  trim(quot);
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace qpoly

QPoly dickson(int k) {
  QPoly prev{2};
  if (k == 0) return prev;
  QPoly cur{0, 1};
  for (int i = 1; i < k; ++i) {
    QPoly next = qpoly::sub(qpoly::mul(QPoly{0, 1}, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

int sign_at(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

// Checks that 2cos(pi/L) is a root: p changes sign (or vanishes) across a
// tight enclosure of the generator.
bool has_generator_root(const QPoly& p, int level) {
  if (level == 1) return sign_at(p, mpq_class(-2)) == 0;
  auto box = detail::generator_enclosure(level, 200);
  const int lo = sign_at(p, detail::to_rational(box.lo()));
  const int hi = sign_at(p, detail::to_rational(box.hi()));
  return lo == 0 || hi == 0 || lo != hi;
}

MinPoly compute(int level) {
  // P_L(x) = D_L(x) + 2 vanishes exactly at 2cos(k pi / L), k odd. Those
  // points are the conjugates of 2cos(pi/d) for every d | L with L/d odd.
  QPoly p = dickson(level);
  p[0] += 2;
  QPoly quot, rem;
  qpoly::divmod(p, qpoly::gcd(p, qpoly::derivative(p)), quot, rem);
  QPoly squarefree = quot;
  for (int d = 1; d < level; ++d) {
    if (level % d != 0 || (level / d) % 2 == 0) continue;
    const MinPoly& smaller = min_poly(d);
    QPoly f(smaller.poly.begin(), smaller.poly.end());
    qpoly::divmod(squarefree, f, quot, rem);
    if (!rem.empty()) throw Error("min_poly: divisor sieve left a remainder");
    squarefree = quot;
  }
  if (!has_generator_root(squarefree, level)) {
    throw Error("min_poly: generator is not a root of the sieved factor");
  }
  MinPoly out;
  out.level = level;
  const mpq_class lead = squarefree.back();
  for (auto& c : squarefree) {
    mpq_class v = c / lead;
    if (v.get_den() != 1) throw Error("min_poly: non-integral coefficient");
    out.poly.push_back(v.get_num());
  }
  return out;
}

}  // namespace

const MinPoly& min_poly(int level) {
  if (level < 1) throw DomainError("min_poly: level must be >= 1");
  if (level > limits().level_cap) {
    throw GuardError("scalar level " + std::to_string(level) +
                     " exceeds the configured level cap " +
                     std::to_string(limits().level_cap));
  }
  static std::recursive_mutex mutex;
  static std::map<int, std::unique_ptr<MinPoly>> cache;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  auto it = cache.find(level);
  if (it != cache.end()) return *it->second;
  auto entry = std::make_unique<MinPoly>(compute(level));
  const MinPoly& ref = *entry;
  cache.emplace(level, std::move(entry));
  return ref;
}

}  // namespace coxeterlab
