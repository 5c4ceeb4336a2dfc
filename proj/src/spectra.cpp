#include "coxeterlab/spectra.hpp"

#include <set>

#include "coxeterlab/config.hpp"
#include "coxeterlab/error.hpp"

namespace coxeterlab {

RhoPoly edge_weight(const EdgeLabel& label, int level) {
  switch (label.kind) {
    case EdgeLabel::Kind::Finite:
      return Scalar::cos_pi_over(label.m, level);
    case EdgeLabel::Kind::Bold:
      return Scalar(1);
    case EdgeLabel::Kind::DottedNum:
      return Scalar(label.value);
    case EdgeLabel::Kind::DottedSym:
      return RhoPoly::variable(label.var);
  }
  return RhoPoly();
}

GramMatrix gram(const CoxeterDiagram& d) {
  GramMatrix g;
  g.n = d.order();
  const int level = d.level();
  min_poly(level);  // enforces the level cap up front
  g.entries.assign(g.n, std::vector<RhoPoly>(g.n));
  for (int i = 0; i < g.n; ++i) g.entries[i][i] = RhoPoly(1);
  for (const auto& [e, l] : d.edges()) {
    const RhoPoly w = -edge_weight(l, level);
    g.entries[e.first][e.second] = w;
    g.entries[e.second][e.first] = w;
  }
  return g;
}

ScalarMatrix substitute(const GramMatrix& g, const Assignment& assignment) {
  std::map<std::string, Scalar> values;
  for (const auto& [k, v] : assignment) values.emplace(k, Scalar(v));
  ScalarMatrix m(g.n, std::vector<Scalar>(g.n));
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) m[i][j] = g.entries[i][j].evaluate(values);
  }
  return m;
}

ScalarMatrix numeric_gram(const CoxeterDiagram& d, const Assignment& assignment) {
  return substitute(gram(d), assignment);
}

RhoPoly det_elim(const GramMatrix& g) {
  const int n = g.n;
  if (n == 0) return RhoPoly(1);
  auto a = g.entries;
  RhoPoly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return RhoPoly();
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        RhoPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = num.divide_exact(prev);
        if (!q) throw Error("Bareiss step is not exact; this is a bug");
        a[i][j] = std::move(*q);
      }
      a[i][k] = RhoPoly();
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

RhoPoly det_elim(const CoxeterDiagram& d) { return det_elim(gram(d)); }

RhoPoly det_cycles(const CoxeterDiagram& d) {
  const int n = d.order();
  if (n > limits().cycle_det_order_cap) {
    throw GuardError("det_cycles: order " + std::to_string(n) + " exceeds cap " +
                     std::to_string(limits().cycle_det_order_cap));
  }
  const int level = d.level();
  min_poly(level);
  std::vector<std::vector<RhoPoly>> w(n, std::vector<RhoPoly>(n));
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [e, l] : d.edges()) {
    w[e.first][e.second] = w[e.second][e.first] = edge_weight(l, level);
    adj[e.first][e.second] = adj[e.second][e.first] = true;
  }
  const int full = (1 << n) - 1;
  // cyc[mask]: sum of p over directed cycles with vertex set mask whose least
  // vertex is the least element of mask. Two-vertex cycles count once.
  std::vector<RhoPoly> cyc(full + 1);
  for (int v = 0; v < n; ++v) {
    for (int u = v + 1; u < n; ++u) {
      if (adj[v][u]) cyc[(1 << v) | (1 << u)] += w[v][u] * w[v][u];
    }
    // Directed simple paths from v through larger vertices, closed back to v.
    std::vector<int> path{v};
    std::vector<RhoPoly> prod{RhoPoly(1)};
    auto dfs = [&](auto&& self, int mask) -> void {
      const int last = path.back();
      for (int u = v + 1; u < n; ++u) {
        if (!adj[last][u] || (mask >> u & 1)) continue;
        path.push_back(u);
        prod.push_back(prod.back() * w[last][u]);
        if (path.size() >= 3 && adj[u][v]) cyc[mask | (1 << u)] += prod.back() * w[u][v];
        self(self, mask | (1 << u));
        path.pop_back();
        prod.pop_back();
      }
    };
    dfs(dfs, 1 << v);
  }
  // F(S) = F(S \ v) - sum_{C ∋ v} cyc(C) F(S \ C), v the least vertex of S.
  std::vector<RhoPoly> f(full + 1);
  f[0] = RhoPoly(1);
  for (int s = 1; s <= full; ++s) {
    const int low = s & -s;
    const int rest = s ^ low;
    RhoPoly acc = f[rest];
    for (int sub = rest; sub > 0; sub = (sub - 1) & rest) {
      const int c = sub | low;
      if (!cyc[c].is_zero()) acc -= cyc[c] * f[s ^ c];
    }
    f[s] = std::move(acc);
  }
  return f[full];
}

Scalar det_numeric(const ScalarMatrix& m0) {
  ScalarMatrix m = m0;
  const int n = static_cast<int>(m.size());
  Scalar det(1);
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    const Scalar inv = m[k][k].inverse();
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      const Scalar f = m[i][k] * inv;
      for (int j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

namespace {

std::vector<int> complement(int n, const std::vector<int>& t) {
  std::set<int> drop(t.begin(), t.end());
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (!drop.count(i)) out.push_back(i);
  }
  return out;
}

LocalDet make_quotient(RhoPoly num, RhoPoly den) {
  if (den.is_zero()) throw DomainError("local determinant: det(S \\ T) vanishes identically");
  LocalDet out{std::move(num), std::move(den), std::nullopt};
  out.quotient = out.numerator.divide_exact(out.denominator);
  return out;
}

}  // namespace

LocalDet local_det(const CoxeterDiagram& s, const std::vector<int>& t) {
  for (int v : t) {
    if (v < 0 || v >= s.order()) throw DomainError("local_det: vertex index out of range");
  }
  return make_quotient(det_elim(s), det_elim(induced_diagram(s, complement(s.order(), t))));
}

LocalDet join_local_det(const CoxeterDiagram& s1, int v1, const CoxeterDiagram& s2, int v2,
                        const RhoPoly& w) {
  const RhoPoly d1 = det_elim(s1), d2 = det_elim(s2);
  const RhoPoly r1 = det_elim(induced_diagram(s1, complement(s1.order(), {v1})));
  const RhoPoly r2 = det_elim(induced_diagram(s2, complement(s2.order(), {v2})));
  return make_quotient(d1 * d2 - w * w * r1 * r2, r1 * r2);
}

CoxeterDiagram disjoint_union(const CoxeterDiagram& a, const CoxeterDiagram& b) {
  CoxeterDiagram out = a;
  const int shift = a.order();
  for (const auto& v : b.vertices()) {
    if (out.has_vertex(v)) throw DomainError("vertex name '" + v + "' occurs in both diagrams");
    out.add_vertex(v);
  }
  for (const auto& [e, l] : b.edges()) out.set_edge(e.first + shift, e.second + shift, l);
  return out;
}

CoxeterDiagram join_diagrams(const CoxeterDiagram& s1, int v1, const CoxeterDiagram& s2, int v2,
                             const EdgeLabel& label) {
  CoxeterDiagram out = disjoint_union(s1, s2);
  out.add_edge(v1, s1.order() + v2, label);
  return out;
}

bool same_value(const LocalDet& a, const LocalDet& b) {
  return a.numerator * b.denominator == b.numerator * a.denominator;
}

std::string Inertia::to_string() const {
  return "(" + std::to_string(pos) + "," + std::to_string(neg) + "," + std::to_string(zero) + ")";
}

Inertia inertia(const ScalarMatrix& m0) {
  ScalarMatrix a = m0;
  Inertia out;
  // Active index set shrinks as pivots are eliminated.
  std::vector<int> live;
  for (int i = 0; i < static_cast<int>(a.size()); ++i) live.push_back(i);
  auto drop = [&](int idx) { live.erase(std::find(live.begin(), live.end(), idx)); };

  while (!live.empty()) {
    int piv = -1;
    for (int i : live) {
      if (!a[i][i].is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv >= 0) {
      (a[piv][piv].sign() > 0 ? out.pos : out.neg) += 1;
      const Scalar inv = a[piv][piv].inverse();
      drop(piv);
      for (int i : live) {
        if (a[i][piv].is_zero()) continue;
        const Scalar f = a[i][piv] * inv;
        for (int j : live) a[i][j] -= f * a[piv][j];
      }
      continue;
    }
    int pi = -1, pj = -1;
    for (int i : live) {
      for (int j : live) {
        if (i != j && !a[i][j].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
      if (pi >= 0) break;
    }
    if (pi < 0) {
      out.zero += static_cast<int>(live.size());
      break;
    }
    // [[0, b], [b, 0]] has one positive and one negative eigenvalue.
    out.pos += 1;
    out.neg += 1;
    const Scalar binv = a[pi][pj].inverse();
    drop(pi);
    drop(pj);
    // C - B E^{-1} B^T with E^{-1} = [[0, 1/b], [1/b, 0]].
    std::vector<Scalar> ci, cj;
    for (int i : live) {
      ci.push_back(a[i][pi]);
      cj.push_back(a[i][pj]);
    }
    for (size_t x = 0; x < live.size(); ++x) {
      for (size_t y = 0; y < live.size(); ++y) {
        const Scalar corr = (ci[x] * cj[y] + cj[x] * ci[y]) * binv;
        if (!corr.is_zero()) a[live[x]][live[y]] -= corr;
      }
    }
  }
  return out;
}

Inertia inertia(const GramMatrix& g, const Assignment& assignment) {
  return inertia(substitute(g, assignment));
}

Inertia inertia(const CoxeterDiagram& d, const Assignment& assignment) {
  return inertia(gram(d), assignment);
}

}  // namespace coxeterlab
