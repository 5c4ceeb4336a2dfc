#include "coxeterlab/rho_poly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "coxeterlab/error.hpp"

namespace coxeterlab {

RhoPoly::RhoPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

RhoPoly::RhoPoly(long c) : RhoPoly(Scalar(c)) {}

RhoPoly RhoPoly::variable(const std::string& name) {
  RhoPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Scalar(1));
  return p;
}

Scalar RhoPoly::constant() const {
  if (!is_constant()) throw DomainError("polynomial is not constant: " + to_string());
  return constant_term();
}

Scalar RhoPoly::constant_term() const {
  return coefficient(Exponents(vars_.size(), 0));
}

Scalar RhoPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

int RhoPoly::total_degree() const {
  int best = is_zero() ? -1 : 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

int RhoPoly::degree(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return is_zero() ? -1 : 0;
  const size_t k = it - vars_.begin();
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[k]);
  return best;
}

void RhoPoly::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> vars;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) vars.push_back(vars_[i]);
  }
  std::map<Exponents, Scalar> terms;
  for (auto& [e, c] : terms_) {
    Exponents f;
    for (size_t i = 0; i < e.size(); ++i) {
      if (used[i]) f.push_back(e[i]);
    }
    terms.emplace(std::move(f), std::move(c));
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

RhoPoly RhoPoly::aligned(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<size_t> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    pos[i] = std::find(vars.begin(), vars.end(), vars_[i]) - vars.begin();
  }
  RhoPoly out;
  out.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

namespace {

std::vector<std::string> merged(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

RhoPoly RhoPoly::operator-() const {
  RhoPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

RhoPoly& RhoPoly::operator+=(const RhoPoly& rhs) {
  if (rhs.is_zero()) return *this;
  const auto vars = merged(vars_, rhs.vars_);
  if (vars != vars_) *this = aligned(vars);
  const RhoPoly r = rhs.aligned(vars);
  for (const auto& [e, c] : r.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) it->second += c;
  }
  canonicalize();
  return *this;
}

RhoPoly& RhoPoly::operator-=(const RhoPoly& rhs) { return *this += -rhs; }

RhoPoly& RhoPoly::operator*=(const RhoPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    *this = RhoPoly();
    return *this;
  }
  const auto vars = merged(vars_, rhs.vars_);
  const RhoPoly a = aligned(vars);
  const RhoPoly b = rhs.aligned(vars);
  RhoPoly out;
  out.vars_ = vars;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(vars.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  out.canonicalize();
  *this = std::move(out);
  return *this;
}

bool operator==(const RhoPoly& a, const RhoPoly& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

RhoPoly RhoPoly::substitute(const std::string& var, const RhoPoly& value) const {
  auto pos = std::find(vars_.begin(), vars_.end(), var);
  if (pos == vars_.end()) return *this;
  const size_t k = pos - vars_.begin();
  std::vector<RhoPoly> powers{RhoPoly(1)};
  RhoPoly out;
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[k]) powers.push_back(powers.back() * value);
    RhoPoly mono;
    mono.vars_ = vars_;
    Exponents f = e;
    f[k] = 0;
    mono.terms_.emplace(std::move(f), c);
    mono.canonicalize();
    out += mono * powers[e[k]];
  }
  return out;
}

RhoPoly RhoPoly::shift(const std::string& var, const std::string& new_var) const {
  return substitute(var, RhoPoly(1) + variable(new_var));
}

Scalar RhoPoly::evaluate(const std::map<std::string, Scalar>& assignment) const {
  std::vector<std::vector<Scalar>> powers(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = assignment.find(vars_[i]);
    if (it == assignment.end()) throw UnassignedVariableError("unassigned variable: " + vars_[i]);
    powers[i] = {Scalar(1), it->second};
  }
  Scalar acc;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) {
        powers[i].push_back(powers[i].back() * powers[i][1]);
      }
      t *= powers[i][e[i]];
    }
    acc += t;
  }
  return acc;
}

std::optional<RhoPoly> RhoPoly::divide_exact(const RhoPoly& d) const {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return RhoPoly();
  if (d.is_constant()) {
    RhoPoly out = *this;
    const Scalar inv = d.constant().inverse();
    for (auto& [e, c] : out.terms_) c *= inv;
    return out;
  }
  // Leading-term reduction in lex order; the map's last entry leads.
  const auto vars = merged(vars_, d.vars_);
  RhoPoly r = aligned(vars);
  const RhoPoly dd = d.aligned(vars);
  const auto& [lead_e, lead_c] = *dd.terms_.rbegin();
  const Scalar lead_inv = lead_c.inverse();
  RhoPoly q;
  q.vars_ = vars;
  while (!r.terms_.empty()) {
    const auto& [e, c] = *r.terms_.rbegin();
    Exponents f(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) {
      f[i] = e[i] - lead_e[i];
      if (f[i] < 0) return std::nullopt;
    }
    const Scalar k = c * lead_inv;
    q.terms_.emplace(f, k);
    for (const auto& [de, dc] : dd.terms_) {
      Exponents g(vars.size());
      for (size_t i = 0; i < vars.size(); ++i) g[i] = de[i] + f[i];
      auto [it, inserted] = r.terms_.emplace(g, -(k * dc));
      if (!inserted) {
        it->second -= k * dc;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  q.canonicalize();
  return q;
}

std::vector<Scalar> RhoPoly::univariate_coeffs() const {
  if (vars_.size() > 1) throw DomainError("polynomial is not univariate: " + to_string());
  std::vector<Scalar> out;
  for (const auto& [e, c] : terms_) {
    const int k = e.empty() ? 0 : e[0];
    if (static_cast<int>(out.size()) <= k) out.resize(k + 1);
    out[k] = c;
  }
  return out;
}

namespace {

int squarefree_level(int n) {
  int level = 1;
  if (n % 2 == 0) level = std::lcm(level, 4);
  if (n % 3 == 0) level = std::lcm(level, 6);
  if (n % 5 == 0) level = std::lcm(level, 5);
  return level;
}

Scalar sqrt_of(int n) {
  Scalar s(1);
  if (n % 2 == 0) s *= Scalar::sqrt2();
  if (n % 3 == 0) s *= Scalar::sqrt3();
  if (n % 5 == 0) s *= Scalar::sqrt5();
  return s;
}

struct RadicalBasis {
  std::vector<int> names;  // decreasing
  std::vector<std::vector<mpq_class>> columns;
};

const RadicalBasis& radical_basis(int level) {
  static std::mutex mutex;
  static std::map<int, RadicalBasis> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(level);
  if (it != cache.end()) return it->second;
  RadicalBasis basis;
  for (int n : {30, 15, 10, 6, 5, 3, 2, 1}) {
    if (level % squarefree_level(n) != 0) continue;
    basis.names.push_back(n);
    basis.columns.push_back(sqrt_of(n).lifted(level).coeffs());
  }
  return cache.emplace(level, std::move(basis)).first->second;
}

std::string rational_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// Signed terms "(sign, magnitude text)" for a scalar.
std::vector<std::pair<int, std::string>> scalar_terms(const Scalar& x) {
  std::vector<std::pair<int, std::string>> out;
  if (auto coords = radical_coords(x)) {
    for (const auto& [n, q] : *coords) {
      const mpq_class a = abs(q);
      std::string text;
      if (n == 1) {
        text = rational_str(a);
      } else if (a == 1) {
        text = "sqrt" + std::to_string(n);
      } else {
        text = rational_str(a) + "*sqrt" + std::to_string(n);
      }
      out.emplace_back(sgn(q), text);
    }
    return out;
  }
  const std::string gen = "c" + std::to_string(x.level());
  const auto& cs = x.coeffs();
  for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) {
    if (cs[i] == 0) continue;
    const mpq_class a = abs(cs[i]);
    std::string mono = i == 0 ? "" : (i == 1 ? gen : gen + "^" + std::to_string(i));
    std::string text;
    if (mono.empty()) {
      text = rational_str(a);
    } else if (a == 1) {
      text = mono;
    } else {
      text = rational_str(a) + "*" + mono;
    }
    out.emplace_back(sgn(cs[i]), text);
  }
  return out;
}

std::string join_terms(const std::vector<std::pair<int, std::string>>& terms) {
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    const auto& [s, text] = terms[i];
    if (i == 0) {
      out += (s < 0 ? "-" : "") + text;
    } else {
      out += (s < 0 ? " - " : " + ") + text;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<mpq_class> rational_parts(const Scalar& x) {
  std::vector<mpq_class> out;
  if (auto coords = radical_coords(x)) {
    for (const auto& [n, q] : *coords) out.push_back(q);
  } else {
    for (const auto& q : x.coeffs()) {
      if (q != 0) out.push_back(q);
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::pair<int, mpq_class>>> radical_coords(const Scalar& x) {
  std::vector<std::pair<int, mpq_class>> out;
  if (x.is_rational()) {
    if (!x.is_zero()) out.emplace_back(1, x.rational());
    return out;
  }
  const RadicalBasis& basis = radical_basis(x.level());
  const size_t rows = x.coeffs().size();
  const size_t cols = basis.names.size();
  // Row-reduce [columns | x]; the columns are independent, so a consistent
  // system has a unique solution.
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) m[r][c] = basis.columns[c][r];
    m[r][cols] = x.coeffs()[r];
  }
  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (size_t k = c; k <= cols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r) {
    if (m[r][cols] != 0) return std::nullopt;
  }
  for (size_t i = 0; i < rank; ++i) {
    const mpq_class q = m[i][cols] / m[i][pivot_col[i]];
    if (q != 0) out.emplace_back(basis.names[pivot_col[i]], q);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

std::string format_scalar(const Scalar& x) { return join_terms(scalar_terms(x)); }

std::string RhoPoly::to_string() const {
  if (is_zero()) return "0";
  // Pull out a rational content so the bracket has coprime integer parts.
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    for (const auto& q : rational_parts(c)) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
  }
  const mpq_class content(num_gcd, den_lcm);
  const Scalar inv_content(mpq_class(1) / content);

  std::vector<std::pair<Exponents, Scalar>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });

  std::vector<std::pair<int, std::string>> pieces;
  for (const auto& [e, c] : ordered) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    auto parts = scalar_terms(c * inv_content);
    if (mono.empty()) {
      pieces.insert(pieces.end(), parts.begin(), parts.end());
    } else if (parts.size() == 1) {
      const auto& [s, text] = parts[0];
      pieces.emplace_back(s, text == "1" ? mono : text + "*" + mono);
    } else {
      // Lead with a positive sign inside the bracket.
      int s = parts[0].first;
      if (s < 0) {
        for (auto& p : parts) p.first = -p.first;
      }
      pieces.emplace_back(s, "(" + join_terms(parts) + ")*" + mono);
    }
  }
  const std::string body = join_terms(pieces);
  if (content == 1) return body;
  return "(" + rational_str(content) + ")*(" + body + ")";
}

std::ostream& operator<<(std::ostream& os, const RhoPoly& p) { return os << p.to_string(); }

}  // namespace coxeterlab
