#include "coxeterlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "coxeterlab/canonical.hpp"
#include "coxeterlab/config.hpp"
#include "coxeterlab/error.hpp"
#include "coxeterlab/taxonomy.hpp"

namespace coxeterlab {
namespace {

using Key = std::vector<int>;

struct Problem {
  CodeMatrix base;
  std::vector<std::uint32_t> keep_masks;  // complements of the transversals
  std::vector<std::pair<int, int>> edges;  // free pairs in search order
  std::vector<std::vector<int>> values;    // per free pair, increasing
  int cap = 10;
  std::vector<int> anchor;  // L, for attachment vectors of extras
  std::vector<int> extras;  // interchangeable new vertices, in order
  std::vector<std::pair<std::uint32_t, std::uint32_t>> must_link;
};

struct Found {
  std::map<Key, CodeMatrix> admissible;
  std::set<Key> unlinked;
  std::uint64_t nodes = 0;

  void keep(std::map<Key, CodeMatrix>& into, const Key& key, const CodeMatrix& m) {
    auto it = into.find(key);
    if (it == into.end()) {
      into.emplace(key, m);
    } else if (m.codes < it->second.codes) {
      it->second = m;  // smallest representative, independent of thread timing
    }
  }

  void merge(const Found& other) {
    for (const auto& [k, m] : other.admissible) keep(admissible, k, m);
    unlinked.insert(other.unlinked.begin(), other.unlinked.end());
    nodes += other.nodes;
  }
};

class Searcher {
 public:
  explicit Searcher(const Problem& p) : p_(p) {
    edge_masks_.resize(p.edges.size());
    closes_.assign(p.edges.size(), -1);
    for (size_t k = 0; k < p.edges.size(); ++k) {
      const auto [i, j] = p.edges[k];
      const std::uint32_t both = (1u << i) | (1u << j);
      for (std::uint32_t mask : p.keep_masks) {
        if ((mask & both) == both) edge_masks_[k].push_back(mask);
      }
    }
    // The last L-edge of each extra closes its attachment vector.
    for (size_t x = 0; x < p.extras.size(); ++x) {
      int last = -1;
      for (size_t k = 0; k < p.edges.size(); ++k) {
        const auto [i, j] = p.edges[k];
        const bool to_anchor = std::count(p.anchor.begin(), p.anchor.end(), i) > 0;
        if (j == p.extras[x] && to_anchor) last = static_cast<int>(k);
      }
      if (last >= 0) closes_[last] = static_cast<int>(x);
    }
  }

  // Depth-first from edge k; at `split` the state is handed to `tasks`
  // instead of being explored.
  void run(CodeMatrix& m, size_t k, Found& out, size_t split = SIZE_MAX,
           std::vector<std::pair<CodeMatrix, size_t>>* tasks = nullptr) {
    ++out.nodes;
    if (k == split && tasks) {
      tasks->emplace_back(m, k);
      return;
    }
    if (k == p_.edges.size()) {
      leaf(m, out);
      return;
    }
    const auto [i, j] = p_.edges[k];
    for (int v : p_.values[k]) {
      m.set(i, j, v);
      if (v > 0) {
        bool ok = true;
        for (std::uint32_t mask : edge_masks_[k]) {
          if (!elliptic_codes(m, mask)) {
            ok = false;
            break;
          }
        }
        // Heavier labels only shrink the elliptic set.
        if (!ok) break;
      }
      if (closes_[k] >= 0 && !attachment_ok(m, closes_[k])) continue;
      run(m, k + 1, out, split, tasks);
    }
    m.set(i, j, 0);
  }

 private:
  std::vector<int> attachment(const CodeMatrix& m, int x) const {
    std::vector<int> v;
    for (int a : p_.anchor) v.push_back(m.at(p_.extras[x], a));
    return v;
  }

  bool attachment_ok(const CodeMatrix& m, int x) const {
    const auto v = attachment(m, x);
    if (std::all_of(v.begin(), v.end(), [](int c) { return c == 0; })) return false;
    return x == 0 || attachment(m, x - 1) <= v;
  }

  void leaf(const CodeMatrix& m, Found& out) const {
    Key key = canonical_codes(m);
    for (const auto& [a, b] : p_.must_link) {
      bool linked = false;
      for (int i = 0; i < m.n && !linked; ++i) {
        if (!(a >> i & 1)) continue;
        for (int j = 0; j < m.n; ++j) {
          if ((b >> j & 1) && m.at(i, j) != 0) {
            linked = true;
            break;
          }
        }
      }
      if (!linked) {
        out.unlinked.insert(std::move(key));
        return;
      }
    }
    const_cast<Found&>(out).keep(out.admissible, key, m);
  }

  const Problem& p_;
  std::vector<std::vector<std::uint32_t>> edge_masks_;
  std::vector<int> closes_;
};

// Runs body(task, worker) for every task on `jobs` threads; the first
// exception thrown by any task is rethrown after all threads stop.
template <typename Body>
void parallel_for(size_t count, int jobs, Body body) {
  std::mutex mu;
  size_t next = 0;
  std::exception_ptr error;
  auto worker = [&](int w) {
    while (true) {
      size_t t;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next == count || error) return;
        t = next++;
      }
      try {
        body(t, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (int w = 0; w < std::max(1, jobs); ++w) threads.emplace_back(worker, w);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<int> all_values(int cap) {
  std::vector<int> v{0};
  for (int m = 3; m <= cap; ++m) v.push_back(m);
  return v;
}

Found solve(Problem p, int jobs) {
  p.values.resize(p.edges.size(), all_values(p.cap));
  Searcher s(p);
  Found result;
  CodeMatrix m = p.base;
  if (jobs <= 1 || p.edges.empty()) {
    s.run(m, 0, result);
    return result;
  }
  // Split at the shallowest depth giving enough independent subtrees.
  std::vector<std::pair<CodeMatrix, size_t>> tasks;
  Found prefix;
  for (size_t depth = 1;; ++depth) {
    tasks.clear();
    prefix = Found();
    CodeMatrix start = p.base;
    s.run(start, 0, prefix, depth, &tasks);
    if (tasks.size() >= static_cast<size_t>(16 * jobs) || depth >= p.edges.size()) break;
  }
  std::vector<Found> partial(jobs);
  parallel_for(tasks.size(), jobs, [&](size_t t, int w) {
    CodeMatrix local = tasks[t].first;
    s.run(local, tasks[t].second, partial[w]);
  });
  result = prefix;  // leaves reached above the split depth
  for (const auto& f : partial) result.merge(f);
  return result;
}

std::uint32_t full_mask(int n) { return n >= 32 ? ~0u : (1u << n) - 1; }

std::vector<std::uint32_t> transversal_complements(int n,
                                                   const std::vector<std::vector<int>>& blocks) {
  std::vector<std::uint32_t> out{full_mask(n)};
  for (const auto& b : blocks) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t m : out) {
      for (int v : b) next.push_back(m & ~(1u << v));
    }
    out = std::move(next);
  }
  return out;
}

CoxeterDiagram rebuild(const CoxeterDiagram& base, const Problem& p, const CodeMatrix& m) {
  CoxeterDiagram d = base;
  for (const auto& [i, j] : p.edges) {
    if (m.at(i, j) != 0) d.add_edge(i, j, EdgeLabel::finite(m.at(i, j)));
  }
  return d;
}

void check_cap(int cap) {
  if (cap < 5) throw DomainError("label cap must be at least 5");
}

}  // namespace

ExpansionResult expansion_search(const CoxeterDiagram& lanner, int extra, int cap, int jobs) {
  if (extra < 1) throw DomainError("extra must be at least 1");
  check_cap(cap);
  const int k = lanner.order();
  const int n = k + extra;
  if (n > 31) throw GuardError("expansion too large");
  CoxeterDiagram base = lanner;
  for (int x = 1; x <= extra; ++x) base.add_vertex("x" + std::to_string(x));

  Problem p;
  p.base = code_matrix(base);
  p.cap = cap;
  for (int i = 0; i < k; ++i) p.anchor.push_back(i);
  for (int x = 0; x < extra; ++x) {
    const int v = k + x;
    p.extras.push_back(v);
    for (int i = 0; i < k; ++i) p.edges.emplace_back(i, v);
    for (int y = 0; y < x; ++y) p.edges.emplace_back(k + y, v);
  }
  std::vector<std::vector<int>> blocks{p.anchor};
  p.keep_masks = transversal_complements(n, blocks);

  const Found f = solve(p, jobs);
  ExpansionResult r;
  r.cap = cap;
  r.nodes = f.nodes;
  for (const auto& [key, m] : f.admissible) r.diagrams.push_back(rebuild(base, p, m));
  return r;
}

std::vector<std::pair<std::string, CoxeterDiagram>> lanner_universe(int order, int cap,
                                                                    const std::string& var) {
  if (order < 2 || order > 5) throw DomainError("Lanner components have order 2 to 5");
  std::vector<std::pair<std::string, CoxeterDiagram>> out;
  if (order == 2) {
    CoxeterDiagram d({"a", "b"});
    d.add_edge(0, 1, EdgeLabel::dotted(var));
    out.emplace_back("L2", d);
    return out;
  }
  for (const auto& e : catalog_table3(cap)) {
    if (e.diagram.order() != order) continue;
    if (e.diagram.max_label() > cap) continue;
    out.emplace_back(e.name, e.diagram);
  }
  return out;
}

ProductResult product_search(const ProductSpec& spec) {
  check_cap(spec.label_cap);
  const auto& orders = spec.component_orders;
  if (orders.empty()) throw DomainError("no components");
  int total = 0;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 2 || orders[i] > 5) throw DomainError("component orders must be 2 to 5");
    if (i > 0 && orders[i] > orders[i - 1]) throw DomainError("component orders must be non-increasing");
    total += orders[i];
  }
  if (total > limits().product_order_cap) {
    throw GuardError("total order " + std::to_string(total) + " exceeds the product guard " +
                     std::to_string(limits().product_order_cap));
  }

  std::vector<std::vector<std::pair<std::string, CoxeterDiagram>>> universes;
  const bool fixed = !spec.fixed_components.empty();
  if (fixed && spec.fixed_components.size() != orders.size()) {
    throw DomainError("one fixed component per order expected");
  }
  for (size_t i = 0; i < orders.size(); ++i) {
    if (fixed) {
      const auto& c = spec.fixed_components[i];
      if (c.order() != orders[i] || !is_lanner(c)) {
        throw DomainError("fixed component " + std::to_string(i + 1) + " is not a Lanner diagram of order " +
                          std::to_string(orders[i]));
      }
      universes.push_back({{"C" + std::to_string(i + 1), c}});
    } else {
      universes.push_back(lanner_universe(orders[i], spec.label_cap, "rho" + std::to_string(i + 1)));
    }
  }
  for (const auto& c : spec.constraints) {
    const int n = static_cast<int>(orders.size());
    if (c.a_comp < 0 || c.a_comp >= n || c.b_comp < 0 || c.b_comp >= n || c.a_comp == c.b_comp ||
        c.a_vertex < 0 || c.a_vertex >= orders[c.a_comp] || c.b_vertex < 0 ||
        c.b_vertex >= orders[c.b_comp] || c.allowed.empty()) {
      throw DomainError("malformed edge constraint");
    }
    for (int v : c.allowed) {
      if (v != 0 && (v < 3 || v > spec.label_cap)) throw DomainError("constraint label out of range");
    }
  }

  ProductResult result;
  result.cap = spec.label_cap;
  std::map<Key, AdmissibleDiagram> merged;
  std::set<Key> unlinked;

  // Component choices, non-decreasing within runs of equal order.
  std::vector<size_t> choice(orders.size(), 0);
  while (true) {
    CoxeterDiagram base;
    std::vector<std::vector<int>> blocks;
    std::vector<std::string> names;
    for (size_t c = 0; c < orders.size(); ++c) {
      const auto& [name, comp] = universes[c][choice[c]];
      names.push_back(name);
      std::vector<int> block;
      for (int v = 0; v < comp.order(); ++v) {
        block.push_back(base.add_vertex("L" + std::to_string(c + 1) + "_" + std::to_string(v + 1)));
      }
      for (const auto& [e, label] : comp.edges()) base.add_edge(block[e.first], block[e.second], label);
      blocks.push_back(block);
    }
    Problem p;
    p.base = code_matrix(base);
    p.cap = spec.label_cap;
    p.keep_masks = transversal_complements(total, blocks);
    if (spec.allow_inter_edges) {
      for (size_t c = 1; c < blocks.size(); ++c) {
        for (size_t vi = 0; vi < blocks[c].size(); ++vi) {
          for (size_t b = 0; b < c; ++b) {
            for (size_t ui = 0; ui < blocks[b].size(); ++ui) {
              std::vector<int> allowed;
              bool listed = false;
              for (const auto& k : spec.constraints) {
                const bool fwd = k.a_comp == int(b) && k.a_vertex == int(ui) && k.b_comp == int(c) &&
                                 k.b_vertex == int(vi);
                const bool rev = k.b_comp == int(b) && k.b_vertex == int(ui) && k.a_comp == int(c) &&
                                 k.a_vertex == int(vi);
                if (fwd || rev) {
                  listed = true;
                  allowed = k.allowed;
                }
              }
              if (!listed && spec.constrained_only) continue;
              if (!listed) allowed = all_values(spec.label_cap);
              std::sort(allowed.begin(), allowed.end());
              p.edges.emplace_back(blocks[b][ui], blocks[c][vi]);
              p.values.push_back(allowed);
            }
          }
        }
      }
    }
    if (spec.require_linked) {
      for (size_t a = 0; a < blocks.size(); ++a) {
        for (size_t b = a + 1; b < blocks.size(); ++b) {
          std::uint32_t ma = 0, mb = 0;
          for (int v : blocks[a]) ma |= 1u << v;
          for (int v : blocks[b]) mb |= 1u << v;
          p.must_link.emplace_back(ma, mb);
        }
      }
    }
    const Found f = solve(p, spec.jobs);
    result.nodes += f.nodes;
    unlinked.insert(f.unlinked.begin(), f.unlinked.end());
    for (const auto& [key, m] : f.admissible) {
      if (merged.count(key)) continue;
      AdmissibleDiagram a;
      a.diagram = rebuild(base, p, m);
      a.component_names = names;
      a.components = blocks;
      merged.emplace(key, std::move(a));
    }

    // Advance the choice vector.
    int c = static_cast<int>(orders.size()) - 1;
    while (c >= 0) {
      if (++choice[c] < universes[c].size()) break;
      --c;
    }
    if (c < 0) break;
    for (size_t r = c + 1; r < orders.size(); ++r) {
      choice[r] = orders[r] == orders[r - 1] ? choice[r - 1] : 0;
    }
  }

  result.pruned_unlinked = unlinked.size();
  std::vector<AdmissibleDiagram*> todo;
  for (auto& [key, a] : merged) todo.push_back(&a);
  parallel_for(todo.size(), spec.jobs, [&](size_t t, int) {
    AdmissibleDiagram* a = todo[t];
    try {
      a->lanner_witnesses = scan(a->diagram, ScanMethod::Catalog).lanner;
      a->verdict = certify_superhyperbolic_family(a->diagram);
    } catch (const GuardError& e) {
      // Mixed labels can need a field beyond the level cap.
      a->verdict = SuperhyperbolicVerdict();
      a->verdict.method = std::string("guard: ") + e.what();
    }
  });
  for (auto& [key, a] : merged) result.diagrams.push_back(std::move(a));
  return result;
}

ProductSpec case_b_spec(int cap) {
  check_cap(cap);
  ProductSpec spec;
  spec.component_orders = {3, 2, 2, 2};
  spec.label_cap = cap;
  CoxeterDiagram t({"u1", "u2", "u3"});
  t.add_edge(0, 1, EdgeLabel::finite(3));
  t.add_edge(1, 2, EdgeLabel::finite(4));
  t.add_edge(2, 0, EdgeLabel::finite(3));
  spec.fixed_components.push_back(t);
  for (int i = 0; i < 3; ++i) {
    const std::string a = "u" + std::to_string(4 + i), b = "u" + std::to_string(7 + i);
    CoxeterDiagram pair({a, b});
    pair.add_edge(0, 1, EdgeLabel::dotted("rho" + std::to_string(i + 1)));
    spec.fixed_components.push_back(pair);
  }
  std::vector<int> heavy;
  for (int m = 3; m <= std::min(cap, 6); ++m) heavy.push_back(m);
  // (component, vertex): u1..u3 -> (0, 0..2), u4/u7 -> (1, 0/1), u5/u8 -> (2, 0/1), u6/u9 -> (3, 0/1).
  spec.constraints = {
      {0, 0, 1, 0, {3, 4, 5}},  // u1 u4
      {0, 1, 2, 0, {3}},        // u2 u5
      {0, 2, 3, 0, {3}},        // u3 u6
      {1, 1, 2, 1, {3}},        // u7 u8
      {1, 1, 3, 1, heavy},      // u7 u9
      {3, 0, 2, 1, {3}},        // u6 u8
      {2, 0, 3, 1, {0, 3}},     // u5 u9
  };
  spec.constrained_only = true;
  return spec;
}

NeighborTable neighbor_table_check(int cap, int jobs) {
  if (cap < 7) throw DomainError("neighbor table needs cap >= 7");
  NeighborTable t;
  t.cap = cap;
  const Scalar half(mpq_class(1, 2));
  // The attaching configuration singled out in the case analysis is the
  // (3, 4, 3) row; partners must satisfy d1 * d2 <= 1/4 against it.
  const Scalar d1 = d_func(3, 4, 3);
  const Scalar bound = (Scalar(16) * d1 * d1).inverse();
  for (int a = 2; a <= cap; ++a) {
    for (int b = a; b <= cap; ++b) {
      for (int c = 2; c <= cap; ++c) {
        if (a * b + b * c + c * a >= a * b * c) continue;  // not hyperbolic
        // u1 u2 u3 u4: [u1 u3] = a, [u2 u3] = b, [u1 u2] = c, [u3 u4] = 3.
        CodeMatrix m(4);
        if (a > 2) m.set(0, 2, a);
        if (b > 2) m.set(1, 2, b);
        if (c > 2) m.set(0, 1, c);
        m.set(2, 3, 3);
        bool ok = true;
        for (int drop = 0; drop < 3; ++drop) ok = ok && elliptic_codes(m, 0xF & ~(1u << drop));
        const bool partner = a <= 3 && b <= 3;
        // Floating prefilter; exact arithmetic near the thresholds only, since
        // large coprime labels push the field level past the cap.
        const double ca = std::cos(M_PI / a), cb = std::cos(M_PI / b), sc = std::sin(M_PI / c);
        const double approx = (ca * ca + cb * cb + 2 * ca * cb * std::cos(M_PI / c)) / (sc * sc) - 1;
        const bool row_near = ok && approx <= 0.5 + 1e-9;
        const bool partner_near = partner && approx * approx <= 9.0 / 32 + 1e-9;
        if (!row_near && !partner_near) continue;
        const Scalar d = d_func(a, b, c);
        if (row_near && d <= half) t.rows.push_back({a, b, c, d, false});
        if (partner_near && d * d <= bound) t.partners.push_back({a, b, c, d, false});
      }
    }
  }
  auto by_det = [](const NeighborRow& x, const NeighborRow& y) { return x.local_det < y.local_det; };
  std::stable_sort(t.rows.begin(), t.rows.end(), by_det);
  std::stable_sort(t.partners.begin(), t.partners.end(), by_det);
  for (auto& row : t.rows) {
    CoxeterDiagram l({"u1", "u2", "u3"});
    if (row.a > 2) l.add_edge(0, 2, EdgeLabel::finite(row.a));
    if (row.b > 2) l.add_edge(1, 2, EdgeLabel::finite(row.b));
    if (row.c > 2) l.add_edge(0, 1, EdgeLabel::finite(row.c));
    CoxeterDiagram with_u4 = l;
    with_u4.add_vertex("u4");
    with_u4.add_edge(2, 3, EdgeLabel::finite(3));
    const auto target = canonical_form(with_u4);
    // Some two-vertex expansion must restrict to <L, u4> on one of its new vertices.
    for (const auto& d : expansion_search(l, 2, cap, jobs).diagrams) {
      for (int x = 3; x < 5 && !row.expandable_by_two; ++x) {
        row.expandable_by_two = canonical_form(induced_diagram(d, {0, 1, 2, x})) == target;
      }
    }
    if (row.expandable_by_two) t.survivors.push_back(row);
  }
  return t;
}

std::string expansion_json_lines(const ExpansionResult& r) {
  std::string out;
  for (size_t i = 0; i < r.diagrams.size(); ++i) {
    nlohmann::ordered_json j;
    j["index"] = i;
    j["cap"] = r.cap;
    j["diagram"] = nlohmann::ordered_json::parse(diagram_to_json(r.diagrams[i]));
    out += j.dump() + "\n";
  }
  return out;
}

std::string product_json_lines(const ProductResult& r) {
  std::string out;
  for (size_t i = 0; i < r.diagrams.size(); ++i) {
    const auto& a = r.diagrams[i];
    nlohmann::ordered_json j;
    j["index"] = i;
    j["cap"] = r.cap;
    j["components"] = a.component_names;
    j["diagram"] = nlohmann::ordered_json::parse(diagram_to_json(a.diagram));
    j["lanner_witnesses"] = a.lanner_witnesses;
    j["verdict"] = to_string(a.verdict.status);
    j["method"] = a.verdict.method;
    j["det"] = a.verdict.det.to_string();
    j["certificate"] = a.verdict.certificate.to_string();
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace coxeterlab
