#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lvmb/lattice.hpp"
#include "lvmb/matrix.hpp"
#include "lvmb/simplicial_complex.hpp"

namespace lvmb {

// A cone of a simplicial fan, identified by the sorted set of its ray
// indices into the owning fan's ray table.
using ConeKey = std::vector<int>;

// Simplicial fan: primitive integer rays, cones as ray-index sets, closed
// under taking faces (for simplicial cones, faces are exactly the subsets).
class Fan {
public:
    Fan() = default;

    // Validates rays (primitive, nonzero, distinct, right dimension) and
    // cone indices, then closes the cone collection under subsets. The
    // 0-cone {} is always present. Throws std::invalid_argument.
    static Fan make(int ambient_dim, std::vector<IntVector> rays, std::vector<ConeKey> cones);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<IntVector>& rays() const { return rays_; }
    const std::set<ConeKey>& cones() const { return cones_; }
    bool has_cone(const ConeKey& c) const { return cones_.count(c) > 0; }

    // Cones not contained in any other cone, in deterministic (set) order.
    std::vector<ConeKey> maximal_cones() const;

private:
    int ambient_dim_ = 0;
    std::vector<IntVector> rays_;
    std::set<ConeKey> cones_;
};

// Witness that a collection of cones is not a fan.
struct FanDefect {
    std::string reason;
    ConeKey cone_a;
    ConeKey cone_b;  // empty when a single cone is at fault
};

using ProjectedFan = std::variant<Fan, FanDefect>;

// The fan of the simplicial complex: ray e_i per vertex i >= 1 of sigma,
// e_0 = -e_1-...-e_m when 0 is a vertex, one cone per face. Rays are ordered
// by ascending vertex label. The result is always nonsingular.
Fan fan_from_complex(const SimplicialComplex& sigma);

// True iff every cone's generators are part of a Z-basis (all elementary
// divisors 1). Expects a simplicial fan.
bool is_nonsingular(const Fan& f);

// Geometry checks beyond what Fan::make enforces: every cone's rays must be
// linearly independent (a dependent cone is reported as a line when it
// contains one, as non-simplicial otherwise), and distinct maximal cones
// must intersect in the common face spanned by their shared rays. The
// latter is decided by an exact LP. Returns the first defect found.
std::optional<FanDefect> validate_geometry(const Fan& f);

// Image of the fan under the quotient map q (full row rank, rows = target
// dimension). Ray indices are preserved. Projected rays are re-primitivized;
// a ray mapping to zero or two rays colliding into one primitive vector is
// a defect, as is any failure of validate_geometry on the image. The
// 0-dimensional target is the Hopf degenerate case and yields the fan {0}.
ProjectedFan project_fan(const Fan& f, const RatMatrix& q);

// Wall criterion for completeness: all maximal cones have full dimension,
// every (n-1)-face of a maximal cone lies in exactly two maximal cones, and
// the maximal cones are wall-connected. Cross-checked against membership of
// pseudo-random rational points; disagreement throws std::logic_error.
// Fans in R^0 are complete by convention.
bool is_complete(const Fan& f);

// All faces of a simplicial cone: the subsets of its ray set.
std::vector<ConeKey> faces_of(const ConeKey& cone, const Fan& f);

// Equality as fans: identical ray sets as primitive vectors and identical
// cone collections after matching rays. Order-insensitive.
bool fans_equal(const Fan& a, const Fan& b, std::string* why = nullptr);

// Exact membership test of a rational point in some cone of the fan.
bool fan_contains_point(const Fan& f, const RatVector& x);

}  // namespace lvmb
