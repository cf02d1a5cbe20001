#pragma once

#include <map>
#include <optional>
#include <string>

#include "lvmb/fan.hpp"
#include "lvmb/moment.hpp"
#include "lvmb/polytope.hpp"

namespace lvmb {

// File formats. All parse errors throw std::invalid_argument naming the
// offending field.
//
//   complex input: {"m": int, "maximal_faces": [[int]], "h_basis": [[{"re","im"}]]}
//   fan input:     {"fan": {"ambient_dim": n, "rays": [[int]], "cones": [[int]]},
//                   "h_basis": [...]}
//   polytope:      {"dim": n, "normals": [["p/q"]], "offsets": ["p/q"],
//                   "vertices": optional}
//
// Rationals serialize as "p/q" with "/q" omitted when q = 1; Gaussian
// rationals as {"re": "p/q", "im": "r/s"}.

LVMBData parse_input_json(const std::string& text);
std::string input_to_json(const LVMBData& data);

Fan parse_fan_json(const std::string& text);
std::string fan_to_json(const Fan& fan);

HPolytope parse_polytope_json(const std::string& text);
std::string polytope_to_json(const HPolytope& p,
                             const std::map<ConeKey, RatVector>* vertex_map = nullptr);

// {"num_vars": n, "sense": "maximize"|"minimize", "objective": ["p/q"],
//  "constraints": [{"coeffs": [...], "rel": "="|">=", "rhs": "p/q"}]}
LPProblem parse_lp_json(const std::string& text);
std::string lp_to_json(const LPProblem& p);

struct ReportRendering {
    bool include_runtime = false;  // runtimes break byte-identical output, so opt-in
    double runtime_ms = 0;
};

std::string classification_to_json(const ClassificationReport& report,
                                   const ReportRendering& opts = {});
std::string convexity_to_json(const ClassificationReport& report, const ConvexityReport& harness,
                              const ReportRendering& opts = {});

}  // namespace lvmb
