#pragma once

#include <optional>
#include <vector>

#include "tlcp/matrix.hpp"

namespace tlcp {

// minimize objective . x
// subject to ineq_lhs x <= ineq_rhs, eq_lhs x == eq_rhs,
//            lower[i] <= x[i] <= upper[i] where bounds are present.
// Variables are free unless bounded. An empty objective means pure
// feasibility (the zero objective).
struct LinearProgram {
    Vec objective;
    Matrix ineq_lhs;
    Vec ineq_rhs;
    Matrix eq_lhs;
    Vec eq_rhs;
    std::vector<std::optional<Rational>> lower;
    std::vector<std::optional<Rational>> upper;

    static LinearProgram in_dimension(int d);

    int dimension() const { return dim_; }
    void add_le(Vec row, Rational rhs);   // row . x <= rhs
    void add_ge(Vec row, Rational rhs);   // row . x >= rhs
    void add_eq(Vec row, Rational rhs);   // row . x == rhs

private:
    int dim_ = 0;
};

struct LPOutcome {
    enum class Kind { Infeasible, Optimal, Unbounded };

    Kind kind = Kind::Infeasible;
    // Optimal: a minimizer. Unbounded: a feasible point.
    Vec point;
    // Optimal only.
    Rational value;
    // Unbounded only: direction d with lhs-feasibility preserved and
    // objective . d < 0 along x + t d for all t >= 0.
    Vec ray;
};

// Exact two-phase simplex with Bland's rule (lowest eligible index enters,
// ties on the ratio test broken by lowest basic index). Deterministic and
// cycle-free; every returned point satisfies the constraints exactly.
LPOutcome lp_solve(const LinearProgram& p);

} // namespace tlcp
