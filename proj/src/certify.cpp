#include "coxeterlab/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coxeterlab/error.hpp"
#include "coxeterlab/fixtures.hpp"
#include "coxeterlab/taxonomy.hpp"
#include "coxeterlab/upoly.hpp"

namespace coxeterlab {
namespace {

Scalar cosine(int m) { return Scalar::cos_pi_over(m); }

UPoly to_upoly(const RhoPoly& p) { return p.univariate_coeffs(); }

// A rational point of (1, inf) where the univariate q is <= 0, searched by
// bisection of the Sturm-isolated roots of q's squarefree part.
std::optional<mpq_class> refute_univariate(const UPoly& q) {
  const Scalar two(2);
  if (upoly::eval(q, two).sign() <= 0) return mpq_class(2);
  UPoly g = q;
  const UPoly dq = upoly::derivative(q);
  if (upoly::degree(dq) > 0) {
    UPoly quot, rem;
    upoly::divmod(q, upoly::gcd(q, dq), quot, rem);
    g = quot;
  }
  double bound = 0;
  const double lead = std::fabs(g.back().approx());
  for (size_t i = 0; i + 1 < g.size(); ++i) bound += std::fabs(g[i].approx()) / lead;
  mpq_class hi(static_cast<long>(std::ceil(bound)) + 3);
  mpq_class lo(1);
  while (upoly::eval(g, Scalar(hi)).is_zero()) hi += 1;
  // Narrow (lo, hi] to a single root and bisect it.
  for (int iter = 0; iter < 400; ++iter) {
    for (const mpq_class& x : {lo, hi}) {
      if (x > 1 && upoly::eval(q, Scalar(x)).sign() <= 0) return x;
    }
    mpq_class mid = (lo + hi) / 2;
    if (upoly::eval(g, Scalar(mid)).is_zero()) return mid;
    const int left = upoly::count_roots_between(g, Scalar(lo), Scalar(mid));
    if (left > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (upoly::eval(q, Scalar(mid)).sign() <= 0) return mid;
  }
  return std::nullopt;
}

std::optional<Assignment> refute_by_grid(const RhoPoly& p) {
  static const std::vector<mpq_class> grid = {mpq_class(9, 8), mpq_class(5, 4), mpq_class(3, 2),
                                              mpq_class(2), mpq_class(3), mpq_class(5),
                                              mpq_class(10)};
  const auto& vars = p.vars();
  std::vector<size_t> idx(vars.size(), 0);
  while (true) {
    std::map<std::string, Scalar> at;
    Assignment a;
    for (size_t i = 0; i < vars.size(); ++i) {
      at.emplace(vars[i], Scalar(grid[idx[i]]));
      a[vars[i]] = grid[idx[i]];
    }
    if (p.evaluate(at).sign() <= 0) return a;
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == grid.size()) idx[i++] = 0;
    if (i == idx.size()) return std::nullopt;
  }
}

}  // namespace

Scalar d_func(int k, int l, int m) {
  if (k < 2 || l < 2 || m < 2) throw DomainError("labels must be at least 2");
  const Scalar ck = cosine(k), cl = cosine(l), cm = cosine(m);
  const Scalar sm = Scalar(1) - cm * cm;
  return (ck * ck + cl * cl + Scalar(2) * ck * cl * cm) / sm - Scalar(1);
}

Scalar D_func(int k, int l, int m, int k2, int l2, int m2) {
  if (k2 < 2 || l2 < 2 || m2 < 2) throw DomainError("labels must be at least 2");
  const Scalar d = d_func(k, l, m);
  if (d.is_zero()) throw DomainError("D is undefined when d(k, l, m) = 0");
  const Scalar ck = cosine(k2), cl = cosine(l2), cm = cosine(m2);
  const Scalar s = ck + cl;
  return s * s - (Scalar(1) - cl * cl) * cm * cm / d;
}

std::string PositivityCertificate::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ShiftPositive:
      os << "ShiftPositive: " << shifted->to_string();
      break;
    case Kind::SturmWitness:
      os << "SturmWitness: no roots on (1, inf)";
      if (root_at_one > 0) os << " after removing (x - 1)^" << root_at_one;
      break;
    case Kind::Failed:
      os << "Failed";
      if (counterexample && counterexample->empty()) {
        os << ": constant <= 0";
      } else if (counterexample) {
        os << ":";
        for (const auto& [k, v] : *counterexample) os << " " << k << "=" << v.get_str();
      } else if (incomplete) {
        os << ": incomplete";
      } else {
        os << ": touches zero on (1, inf)";
      }
      break;
  }
  return os.str();
}

PositivityCertificate positive_on_ray(const RhoPoly& p) {
  PositivityCertificate cert;
  if (p.is_zero()) {
    cert.counterexample = Assignment{};
    for (const auto& v : p.vars()) (*cert.counterexample)[v] = 2;
    return cert;
  }
  RhoPoly shifted = p;
  for (const auto& v : p.vars()) shifted = shifted.shift(v, "t_" + v);
  bool nonneg = true, positive = false;
  for (const auto& [e, c] : shifted.terms()) {
    const int s = c.sign();
    if (s < 0) nonneg = false;
    if (s > 0) positive = true;
  }
  if (nonneg && positive) {
    cert.kind = PositivityCertificate::Kind::ShiftPositive;
    cert.shifted = shifted;
    return cert;
  }
  if (p.vars().size() == 1) {
    const std::string& var = p.vars()[0];
    UPoly q = to_upoly(p);
    const int k = upoly::root_multiplicity(q, Scalar(1));
    for (int i = 0; i < k; ++i) {
      UPoly quot, rem;
      upoly::divmod(q, UPoly{Scalar(-1), Scalar(1)}, quot, rem);
      q = quot;
    }
    if (upoly::count_roots_above(q, Scalar(1)) == 0 && upoly::eval(q, Scalar(2)).sign() > 0) {
      cert.kind = PositivityCertificate::Kind::SturmWitness;
      cert.root_at_one = k;
      return cert;
    }
    if (auto x = refute_univariate(q)) cert.counterexample = Assignment{{var, *x}};
    return cert;
  }
  cert.counterexample = refute_by_grid(p);
  cert.incomplete = !cert.counterexample.has_value();
  return cert;
}

std::string to_string(SuperhyperbolicVerdict::Status s) {
  switch (s) {
    case SuperhyperbolicVerdict::Status::Superhyperbolic:
      return "superhyperbolic";
    case SuperhyperbolicVerdict::Status::Unknown:
      return "unknown";
    case SuperhyperbolicVerdict::Status::Inapplicable:
      return "inapplicable";
  }
  return "?";
}

namespace {

bool linked(const CoxeterDiagram& d, const std::vector<int>& a, const std::vector<int>& b) {
  for (int i : a) {
    for (int j : b) {
      if (i == j || d.edge(i, j)) return true;
    }
  }
  return false;
}

bool contains(const std::vector<int>& set, const std::vector<int>& sub) {
  return std::includes(set.begin(), set.end(), sub.begin(), sub.end());
}

}  // namespace

SuperhyperbolicVerdict certify_superhyperbolic_family(const CoxeterDiagram& d,
                                                      bool try_subdiagrams) {
  SuperhyperbolicVerdict v;
  const auto lanner = scan(d).lanner;
  if (lanner.empty()) {
    v.status = SuperhyperbolicVerdict::Status::Inapplicable;
    v.method = "no Lanner subdiagram";
    return v;
  }
  for (size_t i = 0; i < lanner.size(); ++i) {
    for (size_t j = i + 1; j < lanner.size(); ++j) {
      if (linked(d, lanner[i], lanner[j])) continue;
      v.status = SuperhyperbolicVerdict::Status::Superhyperbolic;
      v.holds_for_all_rho = true;
      v.lanner_witness = lanner[i];
      v.subdiagram = lanner[i];
      v.subdiagram.insert(v.subdiagram.end(), lanner[j].begin(), lanner[j].end());
      std::sort(v.subdiagram.begin(), v.subdiagram.end());
      v.det = det_elim(induced_diagram(d, v.subdiagram));
      v.method = "disjoint_witnesses";
      return v;
    }
  }

  const int n = d.order();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  v.subdiagram = all;
  v.det = det_elim(d);
  v.certificate = positive_on_ray(v.det);
  v.lanner_witness = lanner.front();
  if (v.certificate.certified()) {
    v.status = SuperhyperbolicVerdict::Status::Superhyperbolic;
    v.holds_for_all_rho = true;
    v.method = "det_parity";
    return v;
  }
  v.method = "determinant not certified positive";
  for (int leaf = 0; leaf < n; ++leaf) {
    const auto nb = d.neighbors(leaf);
    if (nb.size() != 1) continue;
    const EdgeLabel* e = d.edge(leaf, nb[0]);
    if (e->kind != EdgeLabel::Kind::DottedSym) continue;
    const auto r = dotted_leaf_test(d, d.vertices()[leaf], d.vertices()[nb[0]]);
    if (!r.superhyperbolic) continue;
    v.status = SuperhyperbolicVerdict::Status::Superhyperbolic;
    v.holds_for_all_rho = true;
    v.det = r.delta;
    v.certificate = r.certificate;
    v.subdiagram = {leaf, nb[0]};
    v.method = "dotted_leaf";
    return v;
  }
  if (!try_subdiagrams || n > 12) return v;

  for (int size = n - 1; size >= 3; --size) {
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      std::vector<int> sub;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) sub.push_back(i);
      }
      const auto witness = std::find_if(lanner.begin(), lanner.end(),
                                        [&](const auto& w) { return contains(sub, w); });
      if (witness == lanner.end()) continue;
      RhoPoly det = det_elim(induced_diagram(d, sub));
      auto cert = positive_on_ray(det);
      if (!cert.certified()) continue;
      v.status = SuperhyperbolicVerdict::Status::Superhyperbolic;
      v.holds_for_all_rho = true;
      v.subdiagram = sub;
      v.det = det;
      v.certificate = cert;
      v.lanner_witness = *witness;
      v.method = "det_parity";
      return v;
    }
  }
  return v;
}

DottedLeafResult dotted_leaf_test(const CoxeterDiagram& d, const std::string& v,
                                  const std::string& w) {
  const int iv = d.index(v), iw = d.index(w);
  const auto nb = d.neighbors(iv);
  const EdgeLabel* e = d.edge(iv, iw);
  if (nb.size() != 1 || nb[0] != iw || e == nullptr || e->kind != EdgeLabel::Kind::DottedSym) {
    throw DomainError(v + " must be a leaf joined only to " + w + " by a symbolic dotted edge");
  }
  std::vector<int> s_idx, ws_idx;
  for (int i = 0; i < d.order(); ++i) {
    if (i == iv) continue;
    ws_idx.push_back(i);
    if (i != iw) s_idx.push_back(i);
  }
  const CoxeterDiagram s = induced_diagram(d, s_idx);
  DottedLeafResult r;
  r.det_s = det_elim(s);
  r.det_ws = det_elim(induced_diagram(d, ws_idx));
  r.det_vws = det_elim(d);
  const RhoPoly rho = RhoPoly::variable(e->var);
  r.identity_holds = r.det_vws == r.det_ws - rho * rho * r.det_s;
  r.delta = r.det_ws - r.det_s;
  r.s_has_hyperbolic = !scan(s).lanner.empty();
  r.certificate = positive_on_ray(r.delta);
  r.superhyperbolic = r.identity_holds && r.s_has_hyperbolic && r.certificate.certified();
  return r;
}

namespace {

RhoPoly var(const std::string& name) { return RhoPoly::variable(name); }
RhoPoly q(long a, long b) { return RhoPoly(Scalar(mpq_class(a, b))); }
RhoPoly sqrt2() { return RhoPoly(Scalar::sqrt2()); }
RhoPoly sqrt5() { return RhoPoly(Scalar::sqrt5()); }

void evaluate_check(IdentityCheck& c) {
  const CoxeterDiagram d = fixture(c.fixture);
  if (!c.leaf_v.empty()) {
    const auto leaf = dotted_leaf_test(d, c.leaf_v, c.leaf_w);
    c.computed = leaf.delta;
  } else if (c.subset.empty()) {
    c.computed = det_elim(d);
  } else {
    c.computed = det_elim(induced(d, c.subset).diagram());
  }
  c.matches = c.computed == c.expected;
  c.certificate = positive_on_ray(c.computed);
}

IdentityCheck det_check(std::string name, std::string fixture_name, RhoPoly expected,
                        std::vector<std::string> subset = {}) {
  IdentityCheck c;
  c.name = std::move(name);
  c.fixture = std::move(fixture_name);
  c.subset = std::move(subset);
  c.expected = std::move(expected);
  evaluate_check(c);
  return c;
}

IdentityCheck leaf_check(std::string name, std::string fixture_name, std::string v,
                         std::string w, RhoPoly expected) {
  IdentityCheck c;
  c.name = std::move(name);
  c.fixture = std::move(fixture_name);
  c.leaf_v = std::move(v);
  c.leaf_w = std::move(w);
  c.expected = std::move(expected);
  evaluate_check(c);
  return c;
}

}  // namespace

std::vector<IdentityCheck> case_identity_checks() {
  const RhoPoly r2 = var("rho2"), r3 = var("rho3"), s2 = sqrt2();
  const std::vector<std::string> d_sub = {"u1", "u2", "u3", "u5", "u7", "u8", "u9"};
  const std::vector<std::string> e_sub = {"u1", "u2", "u3", "u6", "u7", "u8", "u9"};
  return {
      det_check("case_d", "case_d",
                q(1, 32) * (4 * (2 * s2 + 1) * r2 * r2 - 4 * r2 - (4 * s2 + 5)), d_sub),
      det_check("case_e3", "case_e3",
                q(1, 32) * (4 * (1 + 2 * s2) * r3 * r3 - 4 * r3 - 4 * s2 - 5), e_sub),
      det_check("case_e4", "case_e4",
                q(1, 32) * (4 * (1 + 2 * s2) * r3 * r3 - 4 * r3 - 2 * s2 - 3), e_sub),
  };
}

std::vector<IdentityCheck> formula_identity_checks() {
  const RhoPoly r = var("rho"), r1 = var("rho1"), r2 = var("rho2");
  const RhoPoly s2 = sqrt2(), s5 = sqrt5();
  const RhoPoly rr = r * r;
  return {
      det_check("s1", "s1", q(1, 16) * (4 * s2 * rr - 2 * s2 - 1)),
      det_check("s2", "s2", q(1, 64) * (16 * s2 * rr - 9 * s2 - 6)),
      det_check("s3", "s3", q(1, 8) * (2 * s2 * rr - s2 - 1)),
      det_check("s4", "s4", q(1, 32) * (8 * s2 * rr + 4 * s2 * r - 4 * s2 - 3)),
      det_check("s5", "s5", q(1, 32) * (8 * s2 * rr - 4 * s2 - 3)),
      det_check("s6", "s6", q(1, 64) * (16 * s2 * rr - 9 * s2 - 9)),
      det_check("s7", "s7", q(1, 64) * (16 * s2 * rr + 8 * s2 * r - 8 * s2 - 9)),
      det_check("u", "u", q(1, 64) * (12 * s2 * rr + 4 * s2 * r - 5 * s2 - 6)),
      det_check("v", "v", q(1, 64) * (12 * s2 * rr + 8 * r - 2 * s2 - 3)),
      det_check("w", "w",
                q(1, 128) * (24 * s2 * rr + 4 * s2 * (1 + s5) * r + 3 * s2 * s5 + 3 * s5 -
                             7 * s2 - 9)),
      leaf_check("cor_a", "cor_a", "a4", "a7", q(1, 16) * (3 * r2 * r2 + 4 * r1 * r1 - 2 * r1 - 5)),
      leaf_check("cor_b", "cor_b", "b4", "b7",
                 q(1, 16) * (3 * r2 * r2 + 8 * r1 * r1 - 4 * (s2 - 1) * r1 - 6 - s2)),
      leaf_check("cor_c", "cor_c", "c8", "c5",
                 q(1, 64) * (4 * r2 * r2 + 8 * r1 * r1 - 4 * (2 - s2) * r1 - 2 * s2 - 3)),
      leaf_check("cor_d", "cor_d", "d8", "d5",
                 q(1, 32) * (2 * r1 * r1 - (3 + 2 * s2) * r1 + 2 * s2 + 2)),
      leaf_check("cor_e", "cor_e", "e8", "e5",
                 q(1, 64) * (4 * r1 * r1 - 2 * (4 + 3 * s2) * r1 + 8 * s2 + 9)),
      leaf_check("cor_f", "cor_f", "f8", "f5", q(1, 64) * (8 * r1 * r1 - 8 * r1 + 3 * s2 - 4)),
  };
}

std::vector<std::vector<int>> superhyperbolic_tuples() {
  return {
      {4, 4, 3, 3, 2, 3}, {3, 4, 4, 3, 2, 3}, {3, 3, 5, 3, 2, 3},
      {4, 4, 3, 2, 3, 3}, {3, 4, 4, 2, 3, 3}, {3, 3, 5, 2, 3, 3},
      {3, 5, 3, 4, 2, 3}, {3, 5, 3, 3, 3, 3}, {3, 5, 3, 2, 4, 3},
  };
}

}  // namespace coxeterlab
