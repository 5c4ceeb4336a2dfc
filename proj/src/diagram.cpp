#include "coxeterlab/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "coxeterlab/error.hpp"

namespace coxeterlab {

EdgeLabel EdgeLabel::finite(int m) {
  EdgeLabel l;
  l.kind = Kind::Finite;
  l.m = m;
  return l;
}

EdgeLabel EdgeLabel::bold() {
  EdgeLabel l;
  l.kind = Kind::Bold;
  l.m = 0;
  return l;
}

EdgeLabel EdgeLabel::dotted(const mpq_class& value) {
  EdgeLabel l;
  l.kind = Kind::DottedNum;
  l.m = 0;
  l.value = value;
  l.value.canonicalize();
  return l;
}

EdgeLabel EdgeLabel::dotted(const std::string& var) {
  EdgeLabel l;
  l.kind = Kind::DottedSym;
  l.m = 0;
  l.var = var;
  return l;
}

int EdgeLabel::code() const {
  switch (kind) {
    case Kind::Finite:
      return m;
    case Kind::Bold:
      return 1;
    default:
      return 2;
  }
}

bool operator==(const EdgeLabel& a, const EdgeLabel& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case EdgeLabel::Kind::Finite:
      return a.m == b.m;
    case EdgeLabel::Kind::Bold:
      return true;
    case EdgeLabel::Kind::DottedNum:
      return a.value == b.value;
    case EdgeLabel::Kind::DottedSym:
      return a.var == b.var;
  }
  return false;
}

CoxeterDiagram::CoxeterDiagram(std::vector<std::string> vertices) {
  for (auto& v : vertices) add_vertex(v);
}

int CoxeterDiagram::index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw DomainError("unknown vertex '" + name + "'");
  return static_cast<int>(it - vertices_.begin());
}

bool CoxeterDiagram::has_vertex(const std::string& name) const {
  return std::find(vertices_.begin(), vertices_.end(), name) != vertices_.end();
}

int CoxeterDiagram::add_vertex(const std::string& name) {
  if (name.empty()) throw DomainError("empty vertex name");
  if (has_vertex(name)) throw DomainError("duplicate vertex '" + name + "'");
  vertices_.push_back(name);
  return order() - 1;
}

void CoxeterDiagram::validate(const EdgeLabel& label) {
  switch (label.kind) {
    case EdgeLabel::Kind::Finite:
      if (label.m == 2) throw DomainError("label 2 means no edge; omit the edge instead");
      if (label.m < 3) throw DomainError("edge label must be >= 3, got " + std::to_string(label.m));
      break;
    case EdgeLabel::Kind::DottedNum:
      if (label.value <= 1) throw DomainError("dotted edge value must be > 1");
      break;
    case EdgeLabel::Kind::DottedSym:
      if (label.var.empty()) throw DomainError("dotted edge variable name is empty");
      break;
    case EdgeLabel::Kind::Bold:
      break;
  }
}

void CoxeterDiagram::add_edge(int i, int j, const EdgeLabel& label) {
  if (i > j) std::swap(i, j);
  if (edges_.count({i, j})) {
    throw DomainError("duplicate edge " + vertices_.at(i) + " " + vertices_.at(j));
  }
  set_edge(i, j, label);
}

void CoxeterDiagram::add_edge(const std::string& a, const std::string& b, const EdgeLabel& label) {
  add_edge(index(a), index(b), label);
}

void CoxeterDiagram::set_edge(int i, int j, const EdgeLabel& label) {
  if (i == j) throw DomainError("self-loop at " + vertices_.at(i));
  if (i < 0 || j < 0 || i >= order() || j >= order()) throw DomainError("vertex index out of range");
  validate(label);
  if (i > j) std::swap(i, j);
  edges_[{i, j}] = label;
}

void CoxeterDiagram::remove_edge(int i, int j) {
  if (i > j) std::swap(i, j);
  edges_.erase({i, j});
}

const EdgeLabel* CoxeterDiagram::edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = edges_.find({i, j});
  return it == edges_.end() ? nullptr : &it->second;
}

std::vector<int> CoxeterDiagram::neighbors(int i) const {
  std::vector<int> out;
  for (const auto& [e, l] : edges_) {
    if (e.first == i) out.push_back(e.second);
    if (e.second == i) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> CoxeterDiagram::dotted_vars() const {
  std::set<std::string> vars;
  for (const auto& [e, l] : edges_) {
    if (l.kind == EdgeLabel::Kind::DottedSym) vars.insert(l.var);
  }
  return {vars.begin(), vars.end()};
}

bool CoxeterDiagram::has_dotted() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.second.is_dotted(); });
}

bool CoxeterDiagram::has_bold() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const auto& e) { return e.second.kind == EdgeLabel::Kind::Bold; });
}

int CoxeterDiagram::level() const {
  int l = 1;
  for (const auto& [e, label] : edges_) {
    // cos(pi/3) is rational.
    if (label.kind == EdgeLabel::Kind::Finite && label.m != 3) l = std::lcm(l, label.m);
  }
  return l;
}

int CoxeterDiagram::max_label() const {
  int best = 2;
  for (const auto& [e, label] : edges_) {
    if (label.kind == EdgeLabel::Kind::Finite) best = std::max(best, label.m);
  }
  return best;
}

bool operator==(const CoxeterDiagram& a, const CoxeterDiagram& b) {
  return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
}

std::vector<std::string> Subdiagram::names() const {
  std::vector<std::string> out;
  for (int i : selected) out.push_back(parent->vertices()[i]);
  return out;
}

CoxeterDiagram Subdiagram::diagram() const { return induced_diagram(*parent, selected); }

Subdiagram induced(const CoxeterDiagram& parent, const std::vector<std::string>& names) {
  std::vector<int> idx;
  for (const auto& n : names) idx.push_back(parent.index(n));
  return induced(parent, idx);
}

Subdiagram induced(const CoxeterDiagram& parent, const std::vector<int>& indices) {
  Subdiagram s;
  s.parent = &parent;
  s.selected = indices;
  std::sort(s.selected.begin(), s.selected.end());
  s.selected.erase(std::unique(s.selected.begin(), s.selected.end()), s.selected.end());
  for (int i : s.selected) {
    if (i < 0 || i >= parent.order()) throw DomainError("vertex index out of range");
  }
  return s;
}

CoxeterDiagram induced_diagram(const CoxeterDiagram& parent, const std::vector<int>& indices) {
  std::vector<int> sel = indices;
  std::sort(sel.begin(), sel.end());
  sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
  CoxeterDiagram out;
  std::vector<int> pos(parent.order(), -1);
  for (int i : sel) {
    if (i < 0 || i >= parent.order()) throw DomainError("vertex index out of range");
    pos[i] = out.add_vertex(parent.vertices()[i]);
  }
  for (const auto& [e, l] : parent.edges()) {
    if (pos[e.first] >= 0 && pos[e.second] >= 0) out.set_edge(pos[e.first], pos[e.second], l);
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const CoxeterDiagram& d) {
  const int n = d.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [e, l] : d.edges()) parent[find(e.first)] = find(e.second);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const CoxeterDiagram& d) { return connected_components(d).size() == 1; }

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool valid_name(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == '\'';
  });
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty() || s.size() > 9) return false;
  if (!std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return false;
  }
  out = std::stoi(s);
  return true;
}

bool parse_rational(const std::string& s, mpq_class& out) {
  auto slash = s.find('/');
  auto digits = [](const std::string& t, bool allow_sign) {
    size_t k = (allow_sign && !t.empty() && t[0] == '-') ? 1 : 0;
    return t.size() > k &&
           std::all_of(t.begin() + k, t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (slash == std::string::npos) {
    if (!digits(s, true)) return false;
    out = mpq_class(mpz_class(s));
    return true;
  }
  const std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!digits(p, true) || !digits(q, false)) return false;
  mpz_class den(q);
  if (den == 0) return false;
  out = mpq_class(mpz_class(p), den);
  out.canonicalize();
  return true;
}

}  // namespace

CoxeterDiagram parse_diagram(const std::string& text) {
  CoxeterDiagram d;
  bool have_vertices = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& msg, int column) -> void { throw ParseError(msg, lineno, column); };

    if (tok[0].text == "vertices:" || tok[0].text.rfind("vertices:", 0) == 0) {
      if (have_vertices) fail("'vertices:' given twice", tok[0].column);
      have_vertices = true;
      std::vector<Token> names(tok.begin() + 1, tok.end());
      if (tok[0].text.size() > 9) names.insert(names.begin(), {tok[0].text.substr(9), tok[0].column + 9});
      for (const auto& t : names) {
        if (!valid_name(t.text)) fail("invalid vertex name '" + t.text + "'", t.column);
        if (d.has_vertex(t.text)) fail("duplicate vertex '" + t.text + "'", t.column);
        d.add_vertex(t.text);
      }
      continue;
    }
    if (tok[0].text != "edge") fail("expected 'vertices:' or 'edge', got '" + tok[0].text + "'", tok[0].column);
    if (!have_vertices) fail("'edge' before 'vertices:'", tok[0].column);
    if (tok.size() < 4) {
      fail("expected 'edge <a> <b> <label>'", tok.back().column + static_cast<int>(tok.back().text.size()));
    }
    for (int k : {1, 2}) {
      if (!d.has_vertex(tok[k].text)) fail("unknown vertex '" + tok[k].text + "'", tok[k].column);
    }
    const int a = d.index(tok[1].text), b = d.index(tok[2].text);
    if (a == b) fail("self-loop at '" + tok[1].text + "'", tok[2].column);
    if (d.edge(a, b)) fail("duplicate edge " + tok[1].text + " " + tok[2].text, tok[1].column);

    EdgeLabel label;
    const Token& kind = tok[3];
    size_t expected = 4;
    if (kind.text.rfind("label=", 0) == 0) {
      int m = 0;
      if (!parse_int(kind.text.substr(6), m)) fail("label must be an integer", kind.column + 6);
      if (m == 2) fail("label 2 means no edge; omit the edge instead", kind.column + 6);
      if (m < 3) fail("edge label must be >= 3", kind.column + 6);
      label = EdgeLabel::finite(m);
    } else if (kind.text == "bold") {
      label = EdgeLabel::bold();
    } else if (kind.text == "dotted") {
      expected = 5;
      if (tok.size() < 5) fail("dotted edge needs value=<p/q> or var=<name>", kind.column + 6);
      const Token& spec = tok[4];
      if (spec.text.rfind("value=", 0) == 0) {
        mpq_class v;
        if (!parse_rational(spec.text.substr(6), v)) fail("malformed rational '" + spec.text.substr(6) + "'", spec.column + 6);
        if (v <= 1) fail("dotted value must be > 1", spec.column + 6);
        label = EdgeLabel::dotted(v);
      } else if (spec.text.rfind("var=", 0) == 0) {
        const std::string var = spec.text.substr(4);
        if (!valid_name(var)) fail("invalid variable name '" + var + "'", spec.column + 4);
        label = EdgeLabel::dotted(var);
      } else {
        fail("expected value=<p/q> or var=<name>", spec.column);
      }
    } else {
      fail("expected label=<m>, bold or dotted", kind.column);
    }
    if (tok.size() > expected) fail("unexpected token '" + tok[expected].text + "'", tok[expected].column);
    d.add_edge(a, b, label);
  }
  if (!have_vertices) throw ParseError("missing 'vertices:' line", lineno > 0 ? lineno : 1, 1);
  return d;
}

std::string serialize_diagram(const CoxeterDiagram& d) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : d.vertices()) os << ' ' << v;
  os << '\n';
  for (const auto& [e, l] : d.edges()) {
    os << "edge " << d.vertices()[e.first] << ' ' << d.vertices()[e.second] << ' ';
    switch (l.kind) {
      case EdgeLabel::Kind::Finite:
        os << "label=" << l.m;
        break;
      case EdgeLabel::Kind::Bold:
        os << "bold";
        break;
      case EdgeLabel::Kind::DottedNum:
        os << "dotted value=" << l.value;
        break;
      case EdgeLabel::Kind::DottedSym:
        os << "dotted var=" << l.var;
        break;
    }
    os << '\n';
  }
  return os.str();
}

std::string diagram_to_json(const CoxeterDiagram& d, int indent) {
  nlohmann::ordered_json j;
  j["vertices"] = d.vertices();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [e, l] : d.edges()) {
    nlohmann::ordered_json edge{{"a", d.vertices()[e.first]}, {"b", d.vertices()[e.second]}};
    switch (l.kind) {
      case EdgeLabel::Kind::Finite:
        edge["kind"] = "finite";
        edge["label"] = l.m;
        break;
      case EdgeLabel::Kind::Bold:
        edge["kind"] = "bold";
        break;
      case EdgeLabel::Kind::DottedNum:
        edge["kind"] = "dotted";
        edge["value"] = l.value.get_str();
        break;
      case EdgeLabel::Kind::DottedSym:
        edge["kind"] = "dotted";
        edge["var"] = l.var;
        break;
    }
    j["edges"].push_back(std::move(edge));
  }
  return j.dump(indent);
}

CoxeterDiagram diagram_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    CoxeterDiagram d(j.at("vertices").get<std::vector<std::string>>());
    for (const auto& edge : j.value("edges", nlohmann::json::array())) {
      const std::string kind = edge.at("kind").get<std::string>();
      EdgeLabel label;
      if (kind == "finite") {
        label = EdgeLabel::finite(edge.at("label").get<int>());
      } else if (kind == "bold") {
        label = EdgeLabel::bold();
      } else if (kind == "dotted" && edge.contains("var")) {
        label = EdgeLabel::dotted(edge.at("var").get<std::string>());
      } else if (kind == "dotted") {
        mpq_class v;
        if (!parse_rational(edge.at("value").get<std::string>(), v)) throw ParseError("malformed dotted value");
        label = EdgeLabel::dotted(v);
      } else {
        throw ParseError("unknown edge kind '" + kind + "'");
      }
      d.add_edge(edge.at("a").get<std::string>(), edge.at("b").get<std::string>(), label);
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed diagram JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace coxeterlab
