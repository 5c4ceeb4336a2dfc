#pragma once

#include <string>
#include <vector>

#include "coxeterlab/diagram.hpp"

namespace coxeterlab {

/// Names of the built-in diagrams: s1..s7, u, v, w, cor_a..cor_f, case_d,
/// case_e3, case_e4, h4, e8_affine, g2_affine, l237.
std::vector<std::string> fixture_names();
/// Text form of a built-in diagram. DomainError for unknown names.
const std::string& fixture_text(const std::string& name);
CoxeterDiagram fixture(const std::string& name);

/// Writes <dir>/<name>.cox for every fixture; returns the paths written.
std::vector<std::string> export_fixtures(const std::string& dir);

/// Triangle (k, l, m) on v1 v2 v3 (v1v2 = m, v2v3 = l, v3v1 = k) joined at v3
/// by label m' to v4, which lies on the dotted triangle v4 v5 v6 (v4v5 = k',
/// v5v6 = l', v4v6 dotted, symbolic or numeric). Labels 2 are omitted.
CoxeterDiagram lanner_pair_diagram(int k, int l, int m, int k2, int l2, int m2,
                                   const std::string& var = "rho");
CoxeterDiagram lanner_pair_diagram(int k, int l, int m, int k2, int l2, int m2,
                                   const mpq_class& value);

}  // namespace coxeterlab
