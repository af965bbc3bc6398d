#pragma once

#include <vector>

#include "tlcp/matrix.hpp"

namespace tlcp {

// Exact solution set of A x = b.
struct LinearSystemSolution {
    enum class Kind { Inconsistent, Unique, Affine };

    Kind kind = Kind::Inconsistent;
    Vec particular;              // one solution; meaningless when Inconsistent
    std::vector<Vec> nullspace;  // basis of ker A; empty iff Unique

    bool consistent() const { return kind != Kind::Inconsistent; }
};

LinearSystemSolution solve_linear_system(const Matrix& a, const Vec& b);

int rank(const Matrix& a);

// Fraction-free Bareiss determinant; requires square.
Rational determinant(const Matrix& a);

// Determinant of the principal submatrix on the given 0-based indices.
// Throws EmptyIndexSetError for an empty set.
Rational principal_minor(const Matrix& a, const std::vector<int>& indices);

} // namespace tlcp
