#include "coxeterlab/taxonomy.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include <json.hpp>

#include "coxeterlab/error.hpp"

namespace coxeterlab {

std::string to_string(DiagramClass c) {
  switch (c) {
    case DiagramClass::Elliptic:
      return "Elliptic";
    case DiagramClass::Parabolic:
      return "Parabolic";
    case DiagramClass::Hyperbolic:
      return "Hyperbolic";
    case DiagramClass::Superhyperbolic:
      return "Superhyperbolic";
    case DiagramClass::OtherIndefinite:
      return "OtherIndefinite";
  }
  return "?";
}

DiagramClass class_of(const Inertia& in) {
  if (in.neg == 0) return in.zero == 0 ? DiagramClass::Elliptic : DiagramClass::Parabolic;
  if (in.neg == 1) return DiagramClass::Hyperbolic;
  if (in.neg >= 2) return DiagramClass::Superhyperbolic;
  return DiagramClass::OtherIndefinite;
}

DiagramClass classify(const CoxeterDiagram& d, const Assignment& assignment) {
  return class_of(inertia(d, assignment));
}

CodeMatrix code_matrix(const CoxeterDiagram& d) {
  CodeMatrix m(d.order());
  for (const auto& [e, l] : d.edges()) m.set(e.first, e.second, l.code());
  return m;
}

std::vector<int> canonical_form(const CoxeterDiagram& d) { return canonical_codes(code_matrix(d)); }

bool is_elliptic_structural(const CoxeterDiagram& d) {
  if (d.order() > 32) throw GuardError("structural test supports at most 32 vertices");
  const std::uint32_t mask = d.order() == 32 ? ~0u : ((1u << d.order()) - 1);
  return elliptic_codes(code_matrix(d), mask);
}

// ---------------------------------------------------------------------------
// Catalog builders.

namespace {

CoxeterDiagram empty_diagram(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  return CoxeterDiagram(names);
}

void link(CoxeterDiagram& d, int i, int j, int m) {
  if (m == 2) return;
  d.set_edge(i, j, m == 0 ? EdgeLabel::bold() : EdgeLabel::finite(m));
}

CoxeterDiagram path(const std::vector<int>& labels) {
  CoxeterDiagram d = empty_diagram(static_cast<int>(labels.size()) + 1);
  for (size_t i = 0; i < labels.size(); ++i) link(d, i, i + 1, labels[i]);
  return d;
}

CoxeterDiagram cycle(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  CoxeterDiagram d = empty_diagram(n);
  for (int i = 0; i < n; ++i) link(d, i, (i + 1) % n, labels[i]);
  return d;
}

// Branch vertex 0 with three simple legs of the given lengths.
CoxeterDiagram star(int a, int b, int c) {
  CoxeterDiagram d = empty_diagram(1 + a + b + c);
  int next = 1;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      link(d, prev, next, 3);
      prev = next++;
    }
  }
  return d;
}

std::vector<int> simple(int edges) { return std::vector<int>(edges, 3); }

CatalogEntry entry(CatalogTable t, std::string family, std::vector<int> params, std::string name,
                   CoxeterDiagram d) {
  return {t, std::move(family), std::move(params), std::move(name), std::move(d)};
}

std::string idx(const std::string& base, int n) { return base + "_" + std::to_string(n); }

// Elliptic catalog entries of a given order (rank n).
std::vector<CatalogEntry> table1_order(int n, int max_label) {
  std::vector<CatalogEntry> out;
  const auto E = CatalogTable::Elliptic;
  if (n < 1) return out;
  out.push_back(entry(E, "A", {n}, idx("A", n), path(simple(n - 1))));
  if (n >= 2) {
    auto l = simple(n - 1);
    l.back() = 4;
    out.push_back(entry(E, "B", {n}, idx("B", n), path(l)));
  }
  if (n >= 4) out.push_back(entry(E, "D", {n}, idx("D", n), star(1, 1, n - 3)));
  if (n == 2) {
    for (int m = 5; m <= max_label; ++m) {
      out.push_back(entry(E, "G2", {m}, "G_2^(" + std::to_string(m) + ")", path({m})));
    }
  }
  if (n == 4) out.push_back(entry(E, "F4", {4}, "F_4", path({3, 4, 3})));
  if (n >= 6 && n <= 8) out.push_back(entry(E, "E", {n}, idx("E", n), star(1, 2, n - 4)));
  if (n == 3) out.push_back(entry(E, "H", {3}, "H_3", path({3, 5})));
  if (n == 4) out.push_back(entry(E, "H", {4}, "H_4", path({3, 3, 5})));
  return out;
}

// Parabolic catalog entries of a given order (rank order - 1).
std::vector<CatalogEntry> table2_order(int order) {
  std::vector<CatalogEntry> out;
  const auto P = CatalogTable::Parabolic;
  const int n = order - 1;
  if (n < 1) return out;
  if (n == 1) {
    out.push_back(entry(P, "~A", {1}, "~A_1", path({0})));
    return out;
  }
  out.push_back(entry(P, "~A", {n}, idx("~A", n), cycle(simple(n + 1))));
  if (n >= 3) {
    // Fork at vertex 2, path to the end, last edge 4.
    CoxeterDiagram d = empty_diagram(n + 1);
    link(d, 0, 2, 3);
    link(d, 1, 2, 3);
    for (int i = 2; i < n; ++i) link(d, i, i + 1, i + 1 == n ? 4 : 3);
    out.push_back(entry(P, "~B", {n}, idx("~B", n), d));
  }
  {
    auto l = simple(n);
    l.front() = 4;
    l.back() = 4;
    out.push_back(entry(P, "~C", {n}, idx("~C", n), path(l)));
  }
  if (n >= 4) {
    CoxeterDiagram d = empty_diagram(n + 1);
    link(d, 0, 2, 3);
    link(d, 1, 2, 3);
    for (int i = 2; i < n - 2; ++i) link(d, i, i + 1, 3);
    link(d, n - 2, n - 1, 3);
    link(d, n - 2, n, 3);
    out.push_back(entry(P, "~D", {n}, idx("~D", n), d));
  }
  if (n == 2) out.push_back(entry(P, "~G2", {2}, "~G_2", path({3, 6})));
  if (n == 4) out.push_back(entry(P, "~F4", {4}, "~F_4", path({3, 4, 3, 3})));
  if (n == 6) out.push_back(entry(P, "~E", {6}, "~E_6", star(2, 2, 2)));
  if (n == 7) out.push_back(entry(P, "~E", {7}, "~E_7", star(1, 3, 3)));
  if (n == 8) out.push_back(entry(P, "~E", {8}, "~E_8", star(1, 2, 5)));
  return out;
}

CoxeterDiagram triangle(int k, int l, int m) {
  CoxeterDiagram d = empty_diagram(3);
  link(d, 0, 1, k);
  link(d, 1, 2, l);
  link(d, 0, 2, m);
  return d;
}

std::vector<CatalogEntry> lanner_order(int order, int max_label) {
  std::vector<CatalogEntry> out;
  const auto L = CatalogTable::Lanner;
  if (order == 2) {
    CoxeterDiagram d = empty_diagram(2);
    d.set_edge(0, 1, EdgeLabel::dotted("rho"));
    out.push_back(entry(L, "L", {2}, "L2", d));
  } else if (order == 3) {
    for (int k = 2; k <= max_label; ++k) {
      for (int l = k; l <= max_label; ++l) {
        for (int m = l; m <= max_label; ++m) {
          // 1/k + 1/l + 1/m < 1
          if (l * m + k * m + k * l >= k * l * m) continue;
          out.push_back(entry(L, "L", {k, l, m},
                              "L3(" + std::to_string(k) + "," + std::to_string(l) + "," +
                                  std::to_string(m) + ")",
                              triangle(k, l, m)));
        }
      }
    }
  } else if (order == 4) {
    std::vector<CoxeterDiagram> ds{path({3, 5, 3}), path({5, 3, 4}), path({5, 3, 5})};
    CoxeterDiagram s = empty_diagram(4);
    link(s, 0, 1, 5);
    link(s, 1, 2, 3);
    link(s, 1, 3, 3);
    ds.push_back(s);
    for (const auto& c : std::vector<std::vector<int>>{
             {4, 3, 3, 3}, {4, 3, 4, 3}, {5, 3, 3, 3}, {5, 3, 4, 3}, {5, 3, 5, 3}}) {
      ds.push_back(cycle(c));
    }
    for (size_t i = 0; i < ds.size(); ++i) {
      out.push_back(entry(L, "L", {4, static_cast<int>(i + 1)}, "L4#" + std::to_string(i + 1), ds[i]));
    }
  } else if (order == 5) {
    std::vector<CoxeterDiagram> ds{path({5, 3, 3, 3}), path({5, 3, 3, 4}), path({5, 3, 3, 5})};
    CoxeterDiagram b = empty_diagram(5);
    link(b, 0, 1, 5);
    link(b, 1, 2, 3);
    link(b, 2, 3, 3);
    link(b, 2, 4, 3);
    ds.push_back(b);
    ds.push_back(cycle({3, 3, 4, 3, 3}));
    for (size_t i = 0; i < ds.size(); ++i) {
      out.push_back(entry(L, "L", {5, static_cast<int>(i + 1)}, "L5#" + std::to_string(i + 1), ds[i]));
    }
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> catalog_table1(int max_n, int max_label) {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = table1_order(n, max_label);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<CatalogEntry> catalog_table2(int max_n) {
  std::vector<CatalogEntry> out;
  for (int order = 2; order <= max_n + 1; ++order) {
    auto part = table2_order(order);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<CatalogEntry> catalog_table3(int max_label) {
  std::vector<CatalogEntry> out;
  for (int order = 2; order <= 5; ++order) {
    auto part = lanner_order(order, max_label);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string catalog_json(int max_n, int max_label) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  auto add = [&](const std::vector<CatalogEntry>& entries) {
    for (const auto& e : entries) {
      j.push_back({{"table", static_cast<int>(e.table)},
                   {"name", e.name},
                   {"family", e.family},
                   {"params", e.params},
                   {"diagram", nlohmann::ordered_json::parse(diagram_to_json(e.diagram))}});
    }
  };
  add(catalog_table1(max_n, max_label));
  add(catalog_table2(max_n));
  add(catalog_table3(max_label));
  return j.dump(2);
}

std::optional<CatalogEntry> catalog_match(const CoxeterDiagram& d) {
  const int n = d.order();
  if (n == 0) return std::nullopt;
  if (n == 2) {
    const EdgeLabel* e = d.edge(0, 1);
    if (!e) return std::nullopt;
    if (e->is_dotted()) return lanner_order(2, 0).front();
    if (e->kind == EdgeLabel::Kind::Bold) return table2_order(2).front();
    if (e->m == 3) return table1_order(2, 0)[0];
    if (e->m == 4) return table1_order(2, 0)[1];
    return entry(CatalogTable::Elliptic, "G2", {e->m}, "G_2^(" + std::to_string(e->m) + ")",
                 path({e->m}));
  }
  if (d.has_dotted()) return std::nullopt;
  const auto form = canonical_form(d);

  static std::mutex mutex;
  static std::map<int, std::vector<std::pair<std::vector<int>, CatalogEntry>>> cache;
  std::vector<std::pair<std::vector<int>, CatalogEntry>> candidates;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
      std::vector<std::pair<std::vector<int>, CatalogEntry>> list;
      auto add = [&](const std::vector<CatalogEntry>& entries) {
        for (const auto& e : entries) list.emplace_back(canonical_form(e.diagram), e);
      };
      add(table1_order(n, 0));
      add(table2_order(n));
      if (n >= 4) add(lanner_order(n, 0));
      it = cache.emplace(n, std::move(list)).first;
    }
    candidates = it->second;
  }
  for (const auto& [f, e] : candidates) {
    if (f == form) return e;
  }
  if (n == 3) {
    // Triangles: labels read off directly.
    std::vector<int> lab;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
      const EdgeLabel* e = d.edge(i, j);
      if (e && e->kind != EdgeLabel::Kind::Finite) return std::nullopt;
      lab.push_back(e ? e->m : 2);
    }
    std::sort(lab.begin(), lab.end());
    const int k = lab[0], l = lab[1], m = lab[2];
    if (l * m + k * m + k * l < k * l * m) {
      return entry(CatalogTable::Lanner, "L", {k, l, m},
                   "L3(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + ")",
                   triangle(k, l, m));
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Scans.

namespace {

constexpr int kScanOrderCap = 20;

std::vector<int> bits(std::uint32_t mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(__builtin_ctz(mask));
  return out;
}

bool connected_mask(const CodeMatrix& m, std::uint32_t mask) {
  if (!mask) return false;
  std::uint32_t seen = mask & -mask, frontier = seen;
  while (frontier) {
    const int v = __builtin_ctz(frontier);
    frontier &= frontier - 1;
    for (std::uint32_t rest = mask & ~seen; rest; rest &= rest - 1) {
      const int u = __builtin_ctz(rest);
      if (m.at(v, u)) {
        seen |= 1u << u;
        frontier |= 1u << u;
      }
    }
  }
  return seen == mask;
}

void sort_subsets(std::vector<std::vector<int>>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
}

struct MaskTable {
  std::vector<std::uint8_t> elliptic;
  std::vector<std::uint8_t> parabolic;  // minimal, connected
  std::vector<std::uint8_t> lanner;
};

MaskTable exact_table(const CoxeterDiagram& d) {
  const int n = d.order();
  if (n > kScanOrderCap) throw GuardError("subdiagram scan supports at most 20 vertices");
  const std::uint32_t full = (1u << n) - 1;
  const CodeMatrix codes = code_matrix(d);
  // Numeric Gram with symbolic dotted entries left at zero; those entries
  // are never read because a symbolic dotted pair is already non-elliptic.
  const int level = d.level();
  ScalarMatrix g(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i) g[i][i] = Scalar(1);
  for (const auto& [e, l] : d.edges()) {
    if (l.kind == EdgeLabel::Kind::DottedSym) continue;
    const Scalar w = -edge_weight(l, level).constant();
    g[e.first][e.second] = g[e.second][e.first] = w;
  }
  MaskTable t{std::vector<std::uint8_t>(full + 1, 0), std::vector<std::uint8_t>(full + 1, 0),
              std::vector<std::uint8_t>(full + 1, 0)};
  t.elliptic[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int k = __builtin_popcount(mask);
    if (k == 1) {
      t.elliptic[mask] = 1;
      continue;
    }
    bool subs = true;
    for (std::uint32_t b = mask; b && subs; b &= b - 1) subs = t.elliptic[mask ^ (b & -b)];
    if (!subs) continue;
    if (!connected_mask(codes, mask)) {
      t.elliptic[mask] = 1;  // product of elliptic components
      continue;
    }
    const auto v = bits(mask);
    if (k == 2 && codes.at(v[0], v[1]) == 2 && d.edge(v[0], v[1])->kind == EdgeLabel::Kind::DottedSym) {
      t.lanner[mask] = 1;
      continue;
    }
    ScalarMatrix sub(k, std::vector<Scalar>(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) sub[i][j] = g[v[i]][v[j]];
    }
    const int s = det_numeric(sub).sign();
    if (s > 0) {
      t.elliptic[mask] = 1;
    } else if (s == 0) {
      t.parabolic[mask] = 1;
    } else {
      t.lanner[mask] = 1;
    }
  }
  return t;
}

MaskTable catalog_table(const CoxeterDiagram& d) {
  const int n = d.order();
  if (n > kScanOrderCap) throw GuardError("subdiagram scan supports at most 20 vertices");
  const std::uint32_t full = (1u << n) - 1;
  const CodeMatrix codes = code_matrix(d);
  MaskTable t{std::vector<std::uint8_t>(full + 1, 0), std::vector<std::uint8_t>(full + 1, 0),
              std::vector<std::uint8_t>(full + 1, 0)};
  std::vector<std::uint8_t> conn_elliptic(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!connected_mask(codes, mask)) continue;
    const auto match = catalog_match(induced_diagram(d, bits(mask)));
    if (!match) continue;
    switch (match->table) {
      case CatalogTable::Elliptic:
        conn_elliptic[mask] = 1;
        break;
      case CatalogTable::Parabolic:
        t.parabolic[mask] = 1;
        break;
      case CatalogTable::Lanner:
        t.lanner[mask] = 1;
        break;
    }
  }
  // A subset is elliptic when each of its components is an elliptic catalog diagram.
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    bool ok = true;
    std::uint32_t left = mask;
    while (left && ok) {
      std::uint32_t comp = left & -left, frontier = comp;
      while (frontier) {
        const int v = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        for (std::uint32_t rest = left & ~comp; rest; rest &= rest - 1) {
          const int u = __builtin_ctz(rest);
          if (codes.at(v, u)) {
            comp |= 1u << u;
            frontier |= 1u << u;
          }
        }
      }
      left &= ~comp;
      ok = __builtin_popcount(comp) == 1 || conn_elliptic[comp];
    }
    t.elliptic[mask] = ok;
  }
  return t;
}

std::vector<std::vector<int>> collect(const std::vector<std::uint8_t>& flags) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < flags.size(); ++mask) {
    if (flags[mask]) out.push_back(bits(mask));
  }
  sort_subsets(out);
  return out;
}

}  // namespace

ScanReport scan(const CoxeterDiagram& d, ScanMethod method) {
  const MaskTable t = method == ScanMethod::Exact ? exact_table(d) : catalog_table(d);
  return {collect(t.lanner), collect(t.parabolic)};
}

std::vector<std::vector<int>> scan_subdiagrams(const CoxeterDiagram& d, ScanPredicate predicate,
                                               ScanMethod method) {
  const MaskTable t = method == ScanMethod::Exact ? exact_table(d) : catalog_table(d);
  switch (predicate) {
    case ScanPredicate::Lanner:
      return collect(t.lanner);
    case ScanPredicate::ParabolicConnected:
      return collect(t.parabolic);
    case ScanPredicate::Parabolic:
      break;
  }
  const CodeMatrix codes = code_matrix(d);
  std::vector<std::uint8_t> flags(t.elliptic.size(), 0);
  for (std::uint32_t mask = 1; mask < flags.size(); ++mask) {
    bool ok = true, any = false;
    std::uint32_t left = mask;
    while (left && ok) {
      std::uint32_t comp = left & -left, frontier = comp;
      while (frontier) {
        const int v = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        for (std::uint32_t rest = left & ~comp; rest; rest &= rest - 1) {
          const int u = __builtin_ctz(rest);
          if (codes.at(v, u)) {
            comp |= 1u << u;
            frontier |= 1u << u;
          }
        }
      }
      left &= ~comp;
      if (t.parabolic[comp]) {
        any = true;
      } else {
        ok = t.elliptic[comp];
      }
    }
    flags[mask] = ok && any;
  }
  return collect(flags);
}

bool is_lanner(const CoxeterDiagram& d) {
  const int n = d.order();
  if (n == 2) {
    const EdgeLabel* e = d.edge(0, 1);
    return e && e->is_dotted();
  }
  if (n < 2 || d.has_dotted() || d.has_bold()) return false;
  const MaskTable t = exact_table(d);
  return t.lanner[(1u << n) - 1] != 0;
}

bool polytope_admissible(const CoxeterDiagram& d, const Assignment& assignment) {
  if (classify(d, assignment) != DiagramClass::Hyperbolic) return false;
  const auto& flags = exact_table(d).parabolic;
  return std::find(flags.begin(), flags.end(), 1) == flags.end();
}

}  // namespace coxeterlab
