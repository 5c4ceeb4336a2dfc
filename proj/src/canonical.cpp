#include "coxeterlab/canonical.hpp"

#include <algorithm>
#include <map>

namespace coxeterlab {

CodeMatrix CodeMatrix::restricted(const std::vector<int>& vertices) const {
  CodeMatrix out(static_cast<int>(vertices.size()));
  for (int i = 0; i < out.n; ++i) {
    for (int j = 0; j < out.n; ++j) out.codes[i * out.n + j] = at(vertices[i], vertices[j]);
  }
  return out;
}

namespace {

// Colour refinement to a stable partition. Ranks are assigned by sorting the
// signatures, which keeps them isomorphism-invariant.
std::vector<int> refine(const CodeMatrix& m, std::vector<int> color) {
  const int n = m.n;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < n; ++u) {
        if (u != v && m.at(v, u) != 0) nb.emplace_back(m.at(v, u), color[u]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].push_back(color[v]);
      for (const auto& [c, k] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(k);
      }
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, k] : rank) k = r++;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = rank[sig[v]];
    // The new partition refines the old one; equal class counts mean stable.
    std::vector<int> tmp = color;
    std::sort(tmp.begin(), tmp.end());
    const int classes_old = static_cast<int>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
    color = std::move(next);
    if (r == classes_old) return color;
  }
}

struct Canonizer {
  const CodeMatrix& m;
  std::vector<int> color;         // refined colour per vertex
  std::vector<int> target;        // colour required at each position
  std::vector<int> perm;
  std::vector<bool> used;
  std::vector<int> current;       // row segments, concatenated
  std::vector<int> best;
  bool have_best = false;
  long version = 0;

  void run(int depth, bool tied) {
    const int n = m.n;
    if (depth == n) {
      if (!have_best || !tied || current > best) {
        best = current;
        have_best = true;
        ++version;
      }
      return;
    }
    const size_t offset = current.size();
    for (int v = 0; v < n; ++v) {
      if (used[v] || color[v] != target[depth]) continue;
      for (int j = 0; j < depth; ++j) current.push_back(m.at(v, perm[j]));
      bool child_tied = tied;
      bool prune = false;
      if (have_best && tied) {
        for (size_t k = offset; k < current.size(); ++k) {
          if (current[k] != best[k]) {
            prune = current[k] < best[k];
            child_tied = false;
            break;
          }
        }
      } else if (!have_best) {
        child_tied = false;
      }
      if (!prune) {
        used[v] = true;
        perm.push_back(v);
        const long seen = version;
        run(depth + 1, child_tied);
        perm.pop_back();
        used[v] = false;
        // A new best found below shares this prefix.
        if (version != seen) tied = true;
      }
      current.resize(offset);
    }
  }
};

}  // namespace

std::vector<int> canonical_codes(const CodeMatrix& m, const std::vector<int>& colors) {
  const int n = m.n;
  std::vector<int> color = colors.empty() ? std::vector<int>(n, 0) : colors;
  color = refine(m, color);
  Canonizer c{m, color, {}, {}, std::vector<bool>(n, false), {}, {}, false, 0};
  c.target = color;
  std::sort(c.target.begin(), c.target.end());
  c.run(0, false);
  std::vector<int> out;
  out.push_back(n);
  // Colour ranks are only meaningful relative to the input colours, so the
  // encoding carries the sorted original colours.
  std::vector<int> orig = colors.empty() ? std::vector<int>(n, 0) : colors;
  std::sort(orig.begin(), orig.end());
  out.insert(out.end(), orig.begin(), orig.end());
  out.insert(out.end(), c.best.begin(), c.best.end());
  return out;
}

bool elliptic_codes(const CodeMatrix& m, std::uint32_t mask) {
  std::uint32_t left = mask;
  int verts[32];
  while (left) {
    // Collect one component.
    const int start = __builtin_ctz(left);
    std::uint32_t comp = 1u << start, frontier = comp;
    while (frontier) {
      const int v = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      for (std::uint32_t rest = left & ~comp; rest; rest &= rest - 1) {
        const int u = __builtin_ctz(rest);
        if (m.at(v, u) != 0) {
          comp |= 1u << u;
          frontier |= 1u << u;
        }
      }
    }
    left &= ~comp;
    int n = 0;
    for (std::uint32_t c = comp; c; c &= c - 1) verts[n++] = __builtin_ctz(c);
    if (n == 1) continue;
    int edges = 0, non3 = 0, non3_label = 0;
    int degree[32] = {0};
    int non3_a = -1, non3_b = -1;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int c = m.at(verts[i], verts[j]);
        if (c == 0) continue;
        if (c < 3) return false;  // bold or dotted
        ++edges;
        ++degree[i];
        ++degree[j];
        if (c != 3) {
          ++non3;
          non3_label = c;
          non3_a = i;
          non3_b = j;
        }
      }
    }
    if (n == 2) continue;  // G_2^(m), any finite m
    if (edges != n - 1) return false;
    if (non3 > 1 || non3_label >= 6) return false;
    int branch = -1, maxdeg = 0;
    for (int i = 0; i < n; ++i) {
      if (degree[i] > 3) return false;
      if (degree[i] == 3) {
        if (branch >= 0) return false;
        branch = i;
      }
      maxdeg = std::max(maxdeg, degree[i]);
    }
    if (non3 == 1) {
      if (maxdeg > 2) return false;
      const bool end_edge = degree[non3_a] == 1 || degree[non3_b] == 1;
      if (non3_label == 4) {
        if (end_edge) continue;  // B_n
        if (n == 4) continue;    // F_4
        return false;
      }
      // label 5: H_3, H_4
      if (end_edge && n <= 4) continue;
      return false;
    }
    if (branch < 0) continue;  // A_n
    // Leg lengths from the branch vertex.
    int legs[3], k = 0;
    for (int j = 0; j < n; ++j) {
      if (j == branch || m.at(verts[branch], verts[j]) == 0) continue;
      int len = 1, prev = branch, cur = j;
      while (degree[cur] == 2) {
        int next = -1;
        for (int t = 0; t < n; ++t) {
          if (t != prev && t != cur && m.at(verts[cur], verts[t]) != 0) next = t;
        }
        prev = cur;
        cur = next;
        ++len;
      }
      legs[k++] = len;
    }
    std::sort(legs, legs + 3);
    if (legs[0] == 1 && legs[1] == 1) continue;                  // D_n
    if (legs[0] == 1 && legs[1] == 2 && legs[2] <= 4) continue;  // E_6, E_7, E_8
    return false;
  }
  return true;
}

}  // namespace coxeterlab
