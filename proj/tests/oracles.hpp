// Independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "coxeterlab/diagram.hpp"
#include "coxeterlab/rho_poly.hpp"
#include "coxeterlab/scalar.hpp"
#include "coxeterlab/spectra.hpp"

namespace oracle {

using coxeterlab::CoxeterDiagram;
using coxeterlab::EdgeLabel;
using coxeterlab::RhoPoly;
using coxeterlab::Scalar;

inline const double kPi = std::acos(-1.0);

// Leibniz expansion; fine up to order 7.
template <typename T>
T leibniz_det(const std::vector<std::vector<T>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  T total(0L);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    T term(1L);
    for (int i = 0; i < n; ++i) term = term * m[i][p[i]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Gram matrix built straight from the label definitions.
inline std::vector<std::vector<RhoPoly>> gram(const CoxeterDiagram& d) {
  const int n = d.order();
  int level = 1;
  for (const auto& [e, l] : d.edges())
    if (l.kind == EdgeLabel::Kind::Finite) level = std::lcm(level, l.m);
  std::vector<std::vector<RhoPoly>> g(n, std::vector<RhoPoly>(n, RhoPoly(0L)));
  for (int i = 0; i < n; ++i) g[i][i] = RhoPoly(1L);
  for (const auto& [e, l] : d.edges()) {
    RhoPoly w;
    switch (l.kind) {
      case EdgeLabel::Kind::Finite: w = RhoPoly(Scalar::generator(l.m).lifted(level) * Scalar(mpq_class(1, 2))); break;
      case EdgeLabel::Kind::Bold: w = RhoPoly(1L); break;
      case EdgeLabel::Kind::DottedNum: w = RhoPoly(Scalar(l.value)); break;
      case EdgeLabel::Kind::DottedSym: w = RhoPoly::variable(l.var); break;
    }
    g[e.first][e.second] = -w;
    g[e.second][e.first] = -w;
  }
  return g;
}

inline double weight(const EdgeLabel& l, double rho) {
  switch (l.kind) {
    case EdgeLabel::Kind::Finite: return std::cos(kPi / l.m);
    case EdgeLabel::Kind::Bold: return 1.0;
    case EdgeLabel::Kind::DottedNum: return l.value.get_d();
    case EdgeLabel::Kind::DottedSym: return rho;
  }
  return 0;
}

inline std::vector<std::vector<double>> numeric_gram(const CoxeterDiagram& d, double rho) {
  const int n = d.order();
  std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) g[i][i] = 1.0;
  for (const auto& [e, l] : d.edges()) {
    g[e.first][e.second] = g[e.second][e.first] = -weight(l, rho);
  }
  return g;
}

// Cyclic Jacobi eigenvalues of a symmetric matrix.
inline std::vector<double> eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1 : -1) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  return ev;
}

// Characteristic polynomial det(xI - A), constant term first, by
// Faddeev-LeVerrier over the scalar field.
inline std::vector<Scalar> charpoly(const std::vector<std::vector<Scalar>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1L);
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar(0L)));
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<Scalar>> next(n, std::vector<Scalar>(n, Scalar(0L)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar s(0L);
        for (int l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
    for (int i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = next;
    Scalar tr(0L);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    c[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return c;
}

struct Signature {
  int pos = 0, neg = 0, zero = 0;
};

// Descartes' rule is exact for real-rooted polynomials, and the
// characteristic polynomial of a symmetric matrix is real-rooted.
inline Signature descartes_signature(const std::vector<std::vector<Scalar>>& a) {
  const auto c = charpoly(a);
  Signature s;
  size_t lo = 0;
  while (lo < c.size() && c[lo].is_zero()) ++lo;
  s.zero = static_cast<int>(lo);
  auto changes = [&](bool negate) {
    int last = 0, count = 0;
    for (size_t i = lo; i < c.size(); ++i) {
      int sg = c[i].sign();
      if (sg == 0) continue;
      if (negate && i % 2 == 1) sg = -sg;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  };
  s.pos = changes(false);
  s.neg = changes(true);
  return s;
}

struct RandomDiagrams {
  std::mt19937 rng;
  explicit RandomDiagrams(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  // Labels drawn from {3,4,5,6}, bold, numeric and symbolic dotted edges.
  CoxeterDiagram diagram(int n, double density = 0.5, int symbolic_vars = 2, bool allow_special = true) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    CoxeterDiagram d(names);
    std::bernoulli_distribution edge(density);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!edge(rng)) continue;
        const int kind = allow_special ? uniform(0, 9) : 0;
        if (kind <= 6) {
          static const int labels[] = {3, 3, 4, 4, 5, 6};
          d.add_edge(i, j, EdgeLabel::finite(labels[uniform(0, 5)]));
        } else if (kind == 7) {
          d.add_edge(i, j, EdgeLabel::bold());
        } else if (kind == 8 || symbolic_vars == 0) {
          d.add_edge(i, j, EdgeLabel::dotted(mpq_class(uniform(5, 12), 4)));
        } else {
          d.add_edge(i, j, EdgeLabel::dotted("rho" + std::to_string(uniform(1, symbolic_vars))));
        }
      }
    return d;
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }
};

inline CoxeterDiagram permuted(const CoxeterDiagram& d, const std::vector<int>& p) {
  std::vector<std::string> names(d.order());
  for (int i = 0; i < d.order(); ++i) names[p[i]] = d.vertices()[i];
  CoxeterDiagram out(names);
  for (const auto& [e, l] : d.edges()) out.add_edge(p[e.first], p[e.second], l);
  return out;
}

inline double cos_pi(int m) { return std::cos(kPi / m); }

}  // namespace oracle
