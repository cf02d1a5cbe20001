#pragma once

#include <vector>

#include "lvmb/matrix.hpp"

namespace lvmb {

// Primitive integer vectors, the rays of every fan.
using IntVector = std::vector<long long>;

RatVector to_rational(const IntVector& v);

// Scales a nonzero rational vector to the primitive integer vector with the
// same direction (clears denominators, divides by the gcd; orientation is
// preserved). Throws std::invalid_argument on the zero vector.
IntVector primitivize(const RatVector& v);

bool is_primitive(const IntVector& v);

// Diagonal of the Smith normal form (nonnegative, divisibility chain,
// zeros for the rank-deficient tail).
std::vector<Integer> smith_divisors(const std::vector<IntVector>& rows);

// True iff the given vectors are a part of a Z-basis of the ambient lattice,
// i.e. linearly independent with all elementary divisors equal to 1.
bool extends_to_z_basis(const std::vector<IntVector>& rows);

}  // namespace lvmb
