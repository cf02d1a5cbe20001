#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lvmb/fan.hpp"
#include "lvmb/matrix.hpp"

namespace lvmb {

// Half-space representation P = { x : <x, normals_i> >= offsets_i }.
struct HPolytope {
    std::size_t dim = 0;
    std::vector<RatVector> normals;
    std::vector<Rational> offsets;
};

struct FaceDescriptor {
    std::vector<std::size_t> tight_set;  // inequality indices tight on the face
    std::size_t dim = 0;
};

// Thrown when vertex enumeration meets a vertex with more than dim tight
// inequalities or an empty/unbounded H-representation.
class PolytopeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// One inequality per ray of the fan, in ray order.
HPolytope polytope_from_support(const Fan& qfan, const std::vector<Rational>& a);

// For a complete simplicial fan and a strictly convex support function:
// the vertex of P attached to each maximal cone, obtained from one square
// solve per cone. Throws PolytopeError when a per-cone system is singular
// or two cones share a vertex (both mean the input was not strictly
// convex).
std::map<ConeKey, RatVector> vertices(const HPolytope& p, const Fan& qfan);

// Face attaining the minimum of <., v> over P (delegates to the exact LP).
FaceDescriptor min_face(const HPolytope& p, const RatVector& v);

// All vertices of a bounded full-dimensional H-polytope by square-subset
// enumeration. Throws PolytopeError on empty or unbounded input.
std::vector<RatVector> enumerate_vertices(const HPolytope& p);

// Inner normal fan, built from vertex tight sets; requires a simple
// polytope (every vertex has exactly dim tight inequalities). Inequalities
// that are tight at no vertex contribute no ray.
Fan normal_fan(const HPolytope& p);

// True iff normal_fan(p) equals qfan exactly (primitive rays and cone
// collections). Degenerate polytopes and redundant inequalities yield false
// with a diagnostic.
bool is_normal_to(const HPolytope& p, const Fan& qfan, std::string* diagnostic = nullptr);

bool contains(const HPolytope& p, const RatVector& x);
bool contains(const HPolytope& p, const std::vector<double>& x, double tol);

// max(0, largest violation of an inequality), for harness reporting.
double membership_violation(const HPolytope& p, const std::vector<double>& x);

}  // namespace lvmb
