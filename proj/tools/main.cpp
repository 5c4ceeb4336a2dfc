#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coxeterlab/certify.hpp"
#include "coxeterlab/config.hpp"
#include "coxeterlab/error.hpp"
#include "coxeterlab/fixtures.hpp"
#include "coxeterlab/nikulin.hpp"
#include "coxeterlab/search.hpp"
#include "coxeterlab/taxonomy.hpp"

using namespace coxeterlab;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kConfig = 2, kGuard = 3, kUnknown = 4 };

CoxeterDiagram load_diagram(const std::string& path) {
  if (path.rfind("fixture:", 0) == 0) return fixture(path.substr(8));
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return diagram_from_json(text);
  return parse_diagram(text);
}

Assignment parse_assignments(const std::vector<std::string>& items) {
  Assignment a;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected name=value, got '" + item + "'");
    mpq_class v;
    try {
      v = mpq_class(item.substr(eq + 1));
      v.canonicalize();
    } catch (const std::invalid_argument&) {
      throw ParseError("not a rational: '" + item.substr(eq + 1) + "'");
    }
    a[item.substr(0, eq)] = v;
  }
  return a;
}

json names_of(const CoxeterDiagram& d, const std::vector<std::vector<int>>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(induced(d, s).names());
  return out;
}

json inertia_json(const Inertia& in) { return {{"pos", in.pos}, {"neg", in.neg}, {"zero", in.zero}}; }

json certificate_json(const PositivityCertificate& c) {
  json j;
  j["certified"] = c.certified();
  j["summary"] = c.to_string();
  if (c.shifted) j["shifted"] = c.shifted->to_string();
  if (c.root_at_one) j["root_at_one"] = c.root_at_one;
  if (c.counterexample) {
    json ce;
    for (const auto& [k, v] : *c.counterexample) ce[k] = v.get_str();
    j["counterexample"] = ce;
  }
  if (c.incomplete) j["incomplete"] = true;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const std::string& path, const std::vector<std::string>& assign, bool catalog) {
  const CoxeterDiagram d = load_diagram(path);
  const Assignment a = parse_assignments(assign);
  json j;
  j["command"] = "classify";
  j["input"] = path;
  json av = json::object();
  for (const auto& [k, v] : a) av[k] = v.get_str();
  j["assignment"] = av;
  j["class"] = to_string(classify(d, a));
  j["inertia"] = inertia_json(inertia(d, a));
  j["det"] = det_elim(d).to_string();
  const ScanReport r = scan(d, catalog ? ScanMethod::Catalog : ScanMethod::Exact);
  j["lanner"] = names_of(d, r.lanner);
  j["parabolic"] = names_of(d, r.parabolic);
  const auto match = is_connected(d) ? catalog_match(d) : std::nullopt;
  j["catalog_match"] = match ? json(match->name) : json(nullptr);
  emit(j);
  return kOk;
}

int cmd_certify(const std::string& path, bool subdiagrams, const std::vector<std::string>& leaf) {
  const CoxeterDiagram d = load_diagram(path);
  json j;
  j["command"] = "certify";
  j["input"] = path;
  if (!leaf.empty()) {
    const DottedLeafResult r = dotted_leaf_test(d, leaf[0], leaf[1]);
    j["mode"] = "dotted_leaf";
    j["leaf"] = leaf;
    j["det_s"] = r.det_s.to_string();
    j["det_ws"] = r.det_ws.to_string();
    j["det_vws"] = r.det_vws.to_string();
    j["delta"] = r.delta.to_string();
    j["identity_holds"] = r.identity_holds;
    j["s_has_hyperbolic"] = r.s_has_hyperbolic;
    j["certificate"] = certificate_json(r.certificate);
    j["verdict"] = r.superhyperbolic ? "superhyperbolic" : "unknown";
    emit(j);
    return r.superhyperbolic ? kOk : kUnknown;
  }
  const SuperhyperbolicVerdict v = certify_superhyperbolic_family(d, subdiagrams);
  j["mode"] = "family";
  j["verdict"] = to_string(v.status);
  j["holds_for_all_rho"] = v.holds_for_all_rho;
  j["method"] = v.method;
  j["det"] = v.det.to_string();
  j["subdiagram"] = induced(d, v.subdiagram).names();
  j["lanner_witness"] = induced(d, v.lanner_witness).names();
  j["certificate"] = certificate_json(v.certificate);
  emit(j);
  return v.status == SuperhyperbolicVerdict::Status::Superhyperbolic ? kOk : kUnknown;
}

std::vector<int> parse_orders(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("bad order list '" + s + "'");
    }
  }
  if (out.empty()) throw ParseError("empty order list");
  return out;
}

struct SearchOptions {
  std::string mode = "expansion";
  int order = 0;
  std::string lanner;
  int extra = 1;
  std::string orders;
  int cap = 10;
  int jobs = 1;
  bool allow_unlinked = false;
  bool no_inter_edges = false;
  bool case_b = false;
  bool timings = false;
};

int cmd_search(const SearchOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  json summary;
  summary["command"] = "search";
  summary["mode"] = o.mode;
  summary["cap"] = o.cap;
  if (o.mode == "expansion") {
    std::vector<std::pair<std::string, CoxeterDiagram>> targets;
    if (!o.lanner.empty()) {
      const CoxeterDiagram l = o.lanner.rfind("fixture:", 0) == 0 || o.lanner.find('.') != std::string::npos
                                   ? load_diagram(o.lanner)
                                   : CoxeterDiagram();
      if (l.order() > 0) {
        targets.emplace_back(o.lanner, l);
      } else {
        for (const auto& e : catalog_table3(std::max(o.cap, 10))) {
          if (e.name == o.lanner) targets.emplace_back(e.name, e.diagram);
        }
        if (targets.empty()) throw ParseError("unknown Lanner diagram '" + o.lanner + "'");
      }
    } else {
      if (o.order < 3 || o.order > 5) throw DomainError("--order must be 3, 4 or 5");
      targets = lanner_universe(o.order, o.cap);
    }
    summary["extra"] = o.extra;
    std::uint64_t total = 0, nodes = 0;
    json per = json::array();
    for (const auto& [name, l] : targets) {
      const ExpansionResult r = expansion_search(l, o.extra, o.cap, o.jobs);
      for (const auto& d : r.diagrams) {
        json line;
        line["lanner"] = name;
        line["diagram"] = json::parse(diagram_to_json(d));
        std::cout << line.dump() << "\n";
      }
      per.push_back({{"lanner", name}, {"count", r.diagrams.size()}});
      total += r.diagrams.size();
      nodes += r.nodes;
    }
    summary["lanner_diagrams"] = targets.size();
    summary["per_lanner"] = per;
    summary["count"] = total;
    summary["nodes"] = nodes;
    summary["status"] = total == 0 ? "EMPTY" : "NONEMPTY";
  } else if (o.mode == "product") {
    ProductSpec spec;
    if (o.case_b) {
      spec = case_b_spec(o.cap);
    } else {
      spec.component_orders = parse_orders(o.orders);
      spec.label_cap = o.cap;
    }
    spec.require_linked = !o.allow_unlinked;
    spec.allow_inter_edges = !o.no_inter_edges;
    spec.jobs = o.jobs;
    const ProductResult r = product_search(spec);
    std::cout << product_json_lines(r);
    int unknown = 0;
    for (const auto& a : r.diagrams) {
      if (a.verdict.status != SuperhyperbolicVerdict::Status::Superhyperbolic) ++unknown;
    }
    summary["orders"] = spec.component_orders;
    summary["case_b"] = o.case_b;
    summary["count"] = r.diagrams.size();
    summary["superhyperbolic"] = r.diagrams.size() - unknown;
    summary["not_certified"] = unknown;
    summary["pruned_unlinked"] = r.pruned_unlinked;
    summary["nodes"] = r.nodes;
    summary["status"] = r.diagrams.empty() ? "EMPTY" : "NONEMPTY";
  } else if (o.mode == "neighbor") {
    const NeighborTable t = neighbor_table_check(o.cap, o.jobs);
    auto rows = [](const std::vector<NeighborRow>& v) {
      json a = json::array();
      for (const auto& r : v) {
        a.push_back({{"a", r.a}, {"b", r.b}, {"c", r.c}, {"local_det", format_scalar(r.local_det)},
                     {"expandable_by_two", r.expandable_by_two}});
      }
      return a;
    };
    summary["rows"] = rows(t.rows);
    summary["survivors"] = rows(t.survivors);
    summary["partners"] = rows(t.partners);
  } else {
    throw ParseError("--mode must be expansion, product or neighbor");
  }
  if (o.timings) {
    summary["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  std::cout << summary.dump() << "\n";
  return kOk;
}

int cmd_nikulin(int dim) {
  const FaceBoundReport r = three_free_contradiction(dim);
  json j;
  j["command"] = "nikulin";
  j["report"] = json::parse(r.to_json());
  emit(j);
  return kOk;
}

int cmd_catalog(int max_n, int max_label, int table) {
  if (table == 0) {
    std::cout << catalog_json(max_n, max_label) << "\n";
    return kOk;
  }
  std::vector<CatalogEntry> entries;
  if (table == 1) entries = catalog_table1(max_n, max_label);
  else if (table == 2) entries = catalog_table2(max_n);
  else if (table == 3) entries = catalog_table3(max_label);
  else throw ParseError("--table must be 1, 2 or 3");
  json a = json::array();
  for (const auto& e : entries) {
    a.push_back({{"table", static_cast<int>(e.table)},
                 {"name", e.name},
                 {"family", e.family},
                 {"params", e.params},
                 {"diagram", json::parse(diagram_to_json(e.diagram))}});
  }
  std::cout << a.dump(2) << "\n";
  return kOk;
}

bool check_env() {
  const char* env = std::getenv("COXETERLAB_LEVEL_CAP");
  if (!env) return true;
  try {
    size_t used = 0;
    const int v = std::stoi(env, &used);
    return used == std::string(env).size() && v >= 1;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter diagram toolkit: classification, superhyperbolicity certificates, searches"};
  app.require_subcommand(1);

  std::string path;
  std::vector<std::string> assign;
  bool catalog_scan = false;
  auto* classify_cmd = app.add_subcommand("classify", "classify a diagram file");
  classify_cmd->add_option("path", path, "diagram file (.cox text or JSON) or fixture:NAME")->required();
  classify_cmd->add_option("--assign,-a", assign, "dotted variable value, name=p/q");
  classify_cmd->add_flag("--catalog-scan", catalog_scan, "match subdiagrams against the tables");

  bool no_sub = false;
  std::vector<std::string> leaf;
  auto* certify_cmd = app.add_subcommand("certify", "certify superhyperbolicity for every rho > 1");
  certify_cmd->add_option("path", path, "diagram file or fixture:NAME")->required();
  certify_cmd->add_flag("--no-subdiagrams", no_sub, "only use the whole diagram");
  certify_cmd->add_option("--leaf", leaf, "dotted leaf v and its neighbour w")->expected(2);

  SearchOptions so;
  auto* search_cmd = app.add_subcommand("search", "expansion, product and neighbour-table searches");
  search_cmd->add_option("--mode", so.mode, "expansion | product | neighbor");
  search_cmd->add_option("--order", so.order, "order of the Lanner diagrams to expand");
  search_cmd->add_option("--lanner", so.lanner, "a single Lanner diagram: table name, file or fixture:NAME");
  search_cmd->add_option("--extra", so.extra, "number of new vertices");
  search_cmd->add_option("--orders", so.orders, "component orders, e.g. 3,2,2,2");
  search_cmd->add_option("--cap", so.cap, "largest finite label");
  search_cmd->add_option("--jobs,-j", so.jobs, "worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--allow-unlinked", so.allow_unlinked, "keep products with unlinked components");
  search_cmd->add_flag("--no-inter-edges", so.no_inter_edges, "no edges between components");
  search_cmd->add_flag("--case-b", so.case_b, "restrict the product search to the case B configuration");
  search_cmd->add_flag("--timings", so.timings, "add wall time to the summary");

  int dim = 13;
  auto* nikulin_cmd = app.add_subcommand("nikulin", "face-count bound for 3-free polytopes");
  nikulin_cmd->add_option("--dim,-d", dim, "dimension")->required();

  int max_n = 10, max_label = 10, table = 0;
  auto* catalog_cmd = app.add_subcommand("catalog", "dump the elliptic, parabolic and Lanner tables");
  catalog_cmd->add_option("--max-n", max_n, "largest rank");
  catalog_cmd->add_option("--max-label", max_label, "largest label");
  catalog_cmd->add_option("--table", table, "1, 2 or 3 (default: all)");

  std::string out_dir;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "list or export the built-in diagrams");
  fixtures_cmd->add_option("--export", out_dir, "write <dir>/<name>.cox");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }
  if (!check_env()) {
    std::cerr << "error: COXETERLAB_LEVEL_CAP must be a positive integer\n";
    return kConfig;
  }

  try {
    if (*classify_cmd) return cmd_classify(path, assign, catalog_scan);
    if (*certify_cmd) return cmd_certify(path, !no_sub, leaf);
    if (*search_cmd) return cmd_search(so);
    if (*nikulin_cmd) return cmd_nikulin(dim);
    if (*catalog_cmd) return cmd_catalog(max_n, max_label, table);
    if (*fixtures_cmd) {
      if (out_dir.empty()) {
        for (const auto& n : fixture_names()) std::cout << n << "\n";
      } else {
        for (const auto& p : export_fixtures(out_dir)) std::cout << p << "\n";
      }
      return kOk;
    }
  } catch (const GuardError& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kConfig;
  } catch (const UnassignedVariableError& e) {
    std::cerr << "unassigned variable: " << e.what() << "\n";
    return kConfig;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
