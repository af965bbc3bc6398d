#pragma once

#include <vector>

#include "tlcp/config.hpp"
#include "tlcp/matrix.hpp"

namespace tlcp {

// All vertices of {x : G x <= h, E x = f}, sorted lexicographically.
// Exact basis enumeration in the equality-reduced coordinates; a polyhedron
// with no vertex (a nonempty lineality space) yields an empty list.
// Throws DimensionCapExceededError when the ambient dimension exceeds cap.
std::vector<Vec> vertex_enumeration(const Matrix& g, const Vec& h, const Matrix& e, const Vec& f,
                                    int cap = enumeration_cap());

// Generators of the recession cone {G x <= 0, E x = 0} intersected with the
// standard simplex {x >= 0, sum x = 1}, rescaled to primitive integer
// vectors and sorted lexicographically. Empty iff the cone cut down to the
// nonnegative orthant is {0}.
std::vector<Vec> recession_generators(const Matrix& g, const Matrix& e,
                                      int cap = enumeration_cap());

} // namespace tlcp
