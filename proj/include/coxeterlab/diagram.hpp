#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace coxeterlab {

/// Label of a present edge. Label 2 (orthogonal mirrors) is edge absence.
struct EdgeLabel {
  enum class Kind { Finite, Bold, DottedNum, DottedSym };

  Kind kind = Kind::Finite;
  int m = 3;             // Finite
  mpq_class value = 0;   // DottedNum, > 1
  std::string var;       // DottedSym

  static EdgeLabel finite(int m);
  static EdgeLabel bold();
  static EdgeLabel dotted(const mpq_class& value);
  static EdgeLabel dotted(const std::string& var);

  bool is_dotted() const { return kind == Kind::DottedNum || kind == Kind::DottedSym; }
  /// Small integer used by canonical forms: finite m -> m, bold -> 1,
  /// dotted -> 2 (2 is never a finite label).
  int code() const;

  friend bool operator==(const EdgeLabel& a, const EdgeLabel& b);
  friend bool operator!=(const EdgeLabel& a, const EdgeLabel& b) { return !(a == b); }
};

class CoxeterDiagram {
 public:
  using Edge = std::pair<int, int>;  // first < second

  CoxeterDiagram() = default;
  explicit CoxeterDiagram(std::vector<std::string> vertices);

  int order() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  /// Index of a vertex name; DomainError for unknown names.
  int index(const std::string& name) const;
  bool has_vertex(const std::string& name) const;

  int add_vertex(const std::string& name);
  /// Rejects self-loops, duplicates and invalid labels with DomainError.
  void add_edge(int i, int j, const EdgeLabel& label);
  void add_edge(const std::string& a, const std::string& b, const EdgeLabel& label);
  /// Inserts or replaces.
  void set_edge(int i, int j, const EdgeLabel& label);
  void remove_edge(int i, int j);

  /// nullptr when i and j are not joined.
  const EdgeLabel* edge(int i, int j) const;
  const std::map<Edge, EdgeLabel>& edges() const { return edges_; }
  std::vector<int> neighbors(int i) const;

  /// Sorted names of symbolic dotted variables.
  std::vector<std::string> dotted_vars() const;
  bool has_dotted() const;
  bool has_bold() const;
  /// lcm of the finite labels other than 3 (1 if none); every edge weight
  /// lives in the field of this level.
  int level() const;
  int max_label() const;

  friend bool operator==(const CoxeterDiagram& a, const CoxeterDiagram& b);
  friend bool operator!=(const CoxeterDiagram& a, const CoxeterDiagram& b) { return !(a == b); }

 private:
  static void validate(const EdgeLabel& label);

  std::vector<std::string> vertices_;
  std::map<Edge, EdgeLabel> edges_;
};

/// Vertex subset of a parent diagram. The parent must outlive the view.
struct Subdiagram {
  const CoxeterDiagram* parent = nullptr;
  std::vector<int> selected;  // sorted, unique

  int order() const { return static_cast<int>(selected.size()); }
  std::vector<std::string> names() const;
  /// Standalone diagram with the parent's edges inside the subset.
  CoxeterDiagram diagram() const;
};

Subdiagram induced(const CoxeterDiagram& parent, const std::vector<std::string>& names);
Subdiagram induced(const CoxeterDiagram& parent, const std::vector<int>& indices);
CoxeterDiagram induced_diagram(const CoxeterDiagram& parent, const std::vector<int>& indices);

/// Vertex sets of the connected components, each sorted, ordered by least
/// vertex. Bold and dotted edges connect like any other edge.
std::vector<std::vector<int>> connected_components(const CoxeterDiagram& d);
bool is_connected(const CoxeterDiagram& d);

/// Line-oriented text format:
///
///   # comment
///   vertices: a b c
///   edge a b label=5
///   edge b c bold
///   edge a c dotted value=3/2
///   edge a c dotted var=rho
///
/// Tokens are separated by blanks. `vertices:` must precede every edge and
/// appears once. Errors carry 1-based line and column.
CoxeterDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const CoxeterDiagram& d);

/// JSON mirror: {"vertices": [...], "edges": [{"a", "b", "kind", ...}]}
/// with kind finite (label), bold, dotted (value "p/q" or var).
std::string diagram_to_json(const CoxeterDiagram& d, int indent = -1);
CoxeterDiagram diagram_from_json(const std::string& text);

}  // namespace coxeterlab
