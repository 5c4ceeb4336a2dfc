#include "coxeterlab/upoly.hpp"

#include "coxeterlab/error.hpp"

namespace coxeterlab::upoly {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

UPoly scale(const UPoly& a, const Scalar& k) {
  UPoly out = a;
  for (auto& c : out) c *= k;
  trim(out);
  return out;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
  UPoly bb = b;
  trim(bb);
  if (bb.empty()) throw DomainError("polynomial division by zero");
  rem = a;
  trim(rem);
  const int db = degree(bb);
  quot.assign(std::max(0, degree(rem) - db + 1), Scalar());
  const Scalar lead_inv = bb.back().inverse();
  while (degree(rem) >= db) {
    const int shift = degree(rem) - db;
    const Scalar k = rem.back() * lead_inv;
    quot[shift] = k;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= k * bb[i];
    rem.back() = Scalar();
    trim(rem);
  }
  trim(quot);
}

UPoly derivative(const UPoly& p) {
  UPoly out;
  for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Scalar(static_cast<long>(i)));
  trim(out);
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return scale(a, a.back().inverse());
}

Scalar eval(const UPoly& p, const Scalar& x) {
  Scalar acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = p;
  trim(f);
  if (degree(f) < 1) return out;
  f = scale(f, f.back().inverse());
  UPoly q, r;
  const UPoly df = derivative(f);
  UPoly a = gcd(f, df);
  UPoly b, c, d;
  divmod(f, a, b, r);
  divmod(df, a, c, r);
  d = sub(c, derivative(b));
  for (int i = 1; degree(b) > 0; ++i) {
    UPoly g = gcd(b, d);
    if (degree(g) > 0) out.emplace_back(g, i);
    UPoly nb, nc;
    divmod(b, g, nb, r);
    divmod(d, g, nc, r);
    b = std::move(nb);
    d = sub(nc, derivative(b));
  }
  return out;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  UPoly a = p;
  trim(a);
  if (a.empty()) return seq;
  seq.push_back(a);
  UPoly b = derivative(a);
  while (!b.empty()) {
    seq.push_back(b);
    UPoly q, r;
    divmod(seq[seq.size() - 2], b, q, r);
    b = scale(r, Scalar(-1));
  }
  return seq;
}

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<UPoly>& seq, const Scalar& x) {
  std::vector<int> signs;
  for (const auto& q : seq) signs.push_back(eval(q, x).sign());
  return variations(signs);
}

int variations_at_infinity(const std::vector<UPoly>& seq, int direction) {
  std::vector<int> signs;
  for (const auto& q : seq) {
    int s = q.back().sign();
    if (direction < 0 && degree(q) % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

void require_nonroot(const UPoly& p, const Scalar& a) {
  if (eval(p, a).is_zero()) throw DomainError("Sturm endpoint is a root");
}

}  // namespace

int count_roots_above(const UPoly& p, const Scalar& a) {
  require_nonroot(p, a);
  const auto seq = sturm_sequence(p);
  return variations_at(seq, a) - variations_at_infinity(seq, 1);
}

int count_roots_between(const UPoly& p, const Scalar& a, const Scalar& b) {
  require_nonroot(p, a);
  const auto seq = sturm_sequence(p);
  return variations_at(seq, a) - variations_at(seq, b);
}

int count_roots_below(const UPoly& p, const Scalar& a) {
  require_nonroot(p, a);
  const auto seq = sturm_sequence(p);
  return variations_at_infinity(seq, -1) - variations_at(seq, a);
}

int root_multiplicity(const UPoly& p, const Scalar& a) {
  UPoly f = p;
  trim(f);
  if (f.empty()) throw DomainError("multiplicity of a root of the zero polynomial");
  const UPoly lin{-a, Scalar(1)};
  int k = 0;
  while (true) {
    UPoly q, r;
    divmod(f, lin, q, r);
    if (!r.empty()) return k;
    f = std::move(q);
    ++k;
  }
}

}  // namespace coxeterlab::upoly
