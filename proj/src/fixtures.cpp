#include "coxeterlab/fixtures.hpp"

#include <filesystem>
#include <fstream>

#include "coxeterlab/error.hpp"

namespace coxeterlab {
namespace {

// Diagrams transcribed from the figures; "label=3" edges are the plain lines.
const std::vector<std::pair<std::string, std::string>>& table() {
  static const std::vector<std::pair<std::string, std::string>> t = {
      {"s1", R"(# S1
vertices: u1 u2 u3 u4 u5 u6 u7
edge u1 u2 label=3
edge u1 u3 label=3
edge u2 u3 label=4
edge u1 u4 label=3
edge u4 u5 dotted var=rho
edge u5 u6 label=3
edge u5 u7 label=3
)"},
      {"s2", R"(# S2
vertices: u1 u2 u3 u4 u5 u6 u7
edge u1 u2 label=3
edge u1 u3 label=3
edge u2 u3 label=4
edge u1 u4 label=3
edge u4 u5 dotted var=rho
edge u5 u6 label=3
edge u4 u7 label=3
)"},
      {"s3", R"(# S3
vertices: u1 u2 u3 u4 u5 u6 u7
edge u1 u2 label=3
edge u1 u3 label=3
edge u2 u3 label=4
edge u1 u4 label=3
edge u4 u5 dotted var=rho
edge u4 u6 label=3
edge u4 u7 label=3
)"},
      {"s4", R"(# S4
vertices: u1 u2 u3 u4 u5 u6
edge u1 u2 label=3
edge u1 u3 label=3
edge u2 u3 label=4
edge u1 u4 label=3
edge u4 u5 dotted var=rho
edge u4 u6 label=3
edge u5 u6 label=3
)"},
      {"s5", R"(# S5
vertices: u1 u2 u3 u4 u5 u6 u7
edge u1 u2 label=3
edge u1 u3 label=4
edge u2 u3 label=3
edge u1 u4 label=3
edge u4 u5 dotted var=rho
edge u5 u6 label=3
edge u5 u7 label=3
)"},
      {"s6", R"(# S6
vertices: u1 u2 u3 u4 u5 u6 u7
edge u1 u2 label=3
edge u1 u3 label=4
edge u2 u3 label=3
edge u1 u4 label=3
edge u4 u5 dotted var=rho
edge u5 u6 label=3
edge u4 u7 label=3
)"},
      {"s7", R"(# S7
vertices: u1 u2 u3 u4 u5 u6
edge u1 u2 label=3
edge u1 u3 label=4
edge u2 u3 label=3
edge u1 u4 label=3
edge u4 u5 dotted var=rho
edge u4 u6 label=3
edge u5 u6 label=3
)"},
      {"u", R"(# U
vertices: u1 u2 u3 u6 u7 u8 u9
edge u9 u6 dotted var=rho
edge u6 u3 label=3
edge u9 u7 label=3
edge u7 u8 label=3
edge u8 u6 label=3
edge u3 u1 label=3
edge u1 u2 label=3
edge u2 u3 label=4
)"},
      {"v", R"(# V
vertices: v1 v2 v3 v6 v7 v8 v9
edge v9 v6 dotted var=rho
edge v6 v3 label=3
edge v9 v7 label=4
edge v7 v8 label=3
edge v8 v6 label=3
edge v3 v1 label=3
edge v1 v2 label=3
edge v2 v3 label=4
)"},
      {"w", R"(# W
vertices: w1 w2 w3 w6 w7 w8 w9
edge w9 w6 dotted var=rho
edge w6 w3 label=3
edge w9 w7 label=5
edge w7 w8 label=3
edge w8 w6 label=3
edge w3 w1 label=3
edge w1 w2 label=3
edge w2 w3 label=4
)"},
      {"cor_a", R"(# A: leaf a4 dotted to a7
vertices: a1 a2 a3 a4 a5 a6 a7
edge a6 a3 dotted var=rho2
edge a4 a7 dotted var=rho3
edge a6 a2 label=3
edge a7 a5 label=3
edge a1 a2 label=3
edge a1 a5 label=3
edge a6 a7 label=3
edge a5 a2 dotted var=rho1
)"},
      {"cor_b", R"(# B: leaf b4 dotted to b7
vertices: b1 b2 b3 b4 b5 b6 b7
edge b6 b3 dotted var=rho2
edge b4 b7 dotted var=rho3
edge b6 b2 label=3
edge b7 b5 label=3
edge b1 b2 label=3
edge b1 b5 label=3
edge b6 b7 label=4
edge b5 b2 dotted var=rho1
)"},
      {"cor_c", R"(# C: leaf c8 dotted to c5
vertices: c1 c2 c3 c4 c5 c6 c7 c8
edge c2 c1 label=4
edge c4 c5 label=3
edge c1 c3 label=3
edge c2 c6 label=3
edge c3 c4 label=3
edge c6 c5 label=3
edge c4 c7 dotted var=rho2
edge c8 c5 dotted var=rho3
edge c6 c3 dotted var=rho1
)"},
      {"cor_d", R"(# D: leaf d8 dotted to d5
vertices: d1 d2 d3 d4 d5 d6 d7 d8
edge d1 d2 label=3
edge d1 d3 label=4
edge d2 d3 label=3
edge d2 d5 label=3
edge d3 d4 label=3
edge d1 d6 label=3
edge d7 d4 dotted var=rho1
edge d5 d8 dotted var=rho2
edge d5 d7 label=3
)"},
      {"cor_e", R"(# E: leaf e8 dotted to e5
vertices: e1 e2 e3 e4 e5 e6 e7 e8
edge e1 e2 label=3
edge e1 e3 label=4
edge e2 e3 label=3
edge e2 e5 label=3
edge e3 e4 label=3
edge e1 e6 label=3
edge e7 e4 dotted var=rho1
edge e5 e8 dotted var=rho2
edge e5 e7 label=4
)"},
      {"cor_f", R"(# F: leaf f8 dotted to f5
vertices: f1 f2 f3 f4 f5 f6 f7 f8
edge f1 f2 label=3
edge f1 f3 label=3
edge f2 f3 label=4
edge f1 f5 label=3
edge f1 f4 label=3
edge f4 f6 label=3
edge f4 f7 dotted var=rho1
edge f8 f5 dotted var=rho2
edge f5 f7 label=3
)"},
      {"case_d", R"(# case D configuration
vertices: u1 u2 u3 u4 u5 u6 u7 u8 u9
edge u1 u2 label=3
edge u1 u3 label=3
edge u2 u3 label=4
edge u7 u4 dotted var=rho1
edge u5 u8 dotted var=rho2
edge u6 u9 dotted var=rho3
edge u2 u4 label=3
edge u1 u7 label=3
edge u1 u5 label=3
edge u3 u6 label=3
edge u4 u9 label=3
edge u7 u8 label=3
edge u8 u9 label=3
)"},
      {"case_e3", R"(# case E configuration, [u9, u8] = 1
vertices: u1 u2 u3 u4 u5 u6 u7 u8 u9
edge u1 u2 label=3
edge u2 u3 label=4
edge u3 u1 label=3
edge u1 u4 label=3
edge u5 u2 label=3
edge u1 u6 label=3
edge u1 u7 label=3
edge u7 u4 dotted var=rho1
edge u8 u5 dotted var=rho2
edge u6 u9 dotted var=rho3
edge u4 u8 label=3
edge u7 u9 label=3
edge u9 u8 label=3
)"},
      {"case_e4", R"(# case E configuration, [u9, u8] = 2
vertices: u1 u2 u3 u4 u5 u6 u7 u8 u9
edge u1 u2 label=3
edge u2 u3 label=4
edge u3 u1 label=3
edge u1 u4 label=3
edge u5 u2 label=3
edge u1 u6 label=3
edge u1 u7 label=3
edge u7 u4 dotted var=rho1
edge u8 u5 dotted var=rho2
edge u6 u9 dotted var=rho3
edge u4 u8 label=3
edge u7 u9 label=3
edge u9 u8 label=4
)"},
      {"h4", R"(# H4
vertices: x1 x2 x3 x4
edge x1 x2 label=5
edge x2 x3 label=3
edge x3 x4 label=3
)"},
      {"e8_affine", R"(# affine E8
vertices: x1 x2 x3 x4 x5 x6 x7 x8 x9
edge x1 x2 label=3
edge x2 x3 label=3
edge x3 x4 label=3
edge x4 x5 label=3
edge x5 x6 label=3
edge x6 x7 label=3
edge x7 x8 label=3
edge x6 x9 label=3
)"},
      {"g2_affine", R"(# affine G2, the (2,3,6) triangle
vertices: x1 x2 x3
edge x1 x2 label=3
edge x2 x3 label=6
)"},
      {"l237", R"(# the (2,3,7) triangle
vertices: x1 x2 x3
edge x1 x2 label=3
edge x2 x3 label=7
)"},
  };
  return t;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : table()) out.push_back(name);
  return out;
}

const std::string& fixture_text(const std::string& name) {
  for (const auto& [n, text] : table()) {
    if (n == name) return text;
  }
  throw DomainError("unknown fixture: " + name);
}

CoxeterDiagram fixture(const std::string& name) { return parse_diagram(fixture_text(name)); }

std::vector<std::string> export_fixtures(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  for (const auto& [name, text] : table()) {
    const auto path = (std::filesystem::path(dir) / (name + ".cox")).string();
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
    written.push_back(path);
  }
  return written;
}

namespace {

CoxeterDiagram lanner_pair_skeleton(int k, int l, int m, int k2, int l2, int m2) {
  CoxeterDiagram d({"v1", "v2", "v3", "v4", "v5", "v6"});
  auto join = [&](int a, int b, int label) {
    if (label < 2) throw DomainError("labels must be at least 2");
    if (label > 2) d.add_edge(a, b, EdgeLabel::finite(label));
  };
  join(0, 1, m);
  join(1, 2, l);
  join(2, 0, k);
  join(2, 3, m2);
  join(3, 4, k2);
  join(4, 5, l2);
  return d;
}

}  // namespace

CoxeterDiagram lanner_pair_diagram(int k, int l, int m, int k2, int l2, int m2,
                                   const std::string& var) {
  auto d = lanner_pair_skeleton(k, l, m, k2, l2, m2);
  d.add_edge(3, 5, EdgeLabel::dotted(var));
  return d;
}

CoxeterDiagram lanner_pair_diagram(int k, int l, int m, int k2, int l2, int m2,
                                   const mpq_class& value) {
  auto d = lanner_pair_skeleton(k, l, m, k2, l2, m2);
  d.add_edge(3, 5, EdgeLabel::dotted(value));
  return d;
}

}  // namespace coxeterlab
