#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tlcp/classify.hpp"
#include "tlcp/config.hpp"
#include "tlcp/scan.hpp"
#include "tlcp/tensor.hpp"

namespace tlcp {

// Tensor linear complementarity problem: find Z >= 0 with
// W = contract(M, Z) + Q >= 0 and <Z, W> = 0.
struct TLCPInstance {
    DenseTensor m;
    DenseTensor q;

    // Validates the acting pair (M of order 2k cubical, Q of order k, same
    // side). m = 1 gives the classical linear complementarity problem.
    TLCPInstance(DenseTensor m_in, DenseTensor q_in);

    int half_order() const { return q.order(); }
    int side() const { return q.order() == 0 ? 1 : q.shape().dims[0]; }
    std::size_t flat_dimension() const { return q.size(); }
};

struct Solution {
    DenseTensor z;
    DenseTensor w;  // contract(M, Z) + Q
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<DenseTensor> point;  // Z >= 0 with MZ + Q >= 0
};

// Feasibility of the positivity constraints alone, by one exact LP.
FeasibilityResult is_feasible(const TLCPInstance& inst, int cap = enumeration_cap());

// Complementary pivoting with the all-ones covering vector and a
// lexicographic ratio test (no degeneracy cycling). Ray termination is
// reported with the point and direction of the secondary ray; it carries no
// claim about solvability unless the tensor class supplies one.
struct LemkeResult {
    enum class Kind { FoundSolution, RayTermination };

    Kind kind = Kind::FoundSolution;
    std::optional<Solution> solution;
    std::optional<DenseTensor> ray_base;
    std::optional<DenseTensor> ray_direction;
    int pivots = 0;
};

LemkeResult lemke_solve(const TLCPInstance& inst, int cap = enumeration_cap());

// One complementary support pattern alpha: solutions with z = 0 off alpha
// and w = 0 on alpha. Nonempty pieces are polyhedra inside the nonnegative
// orthant, hence pointed: each has at least one vertex.
struct SolutionPiece {
    std::uint64_t pattern = 0;            // bit i set iff flat index i in alpha
    std::vector<MultiIndex> support;      // alpha as multi-indices, ascending
    enum class Status { Point, Polyhedron };
    Status status = Status::Point;
    std::vector<DenseTensor> vertices;    // lexicographically sorted; Point: exactly one
    std::vector<DenseTensor> rays;        // primitive integer generators, sorted
    int dim = 0;
};

struct SolutionSet {
    std::vector<SolutionPiece> pieces;  // pattern order; duplicate point-pieces dropped

    bool empty() const { return pieces.empty(); }
    bool singleton() const;
    bool bounded() const;  // no piece has rays
};

struct EnumerateOptions {
    int cap = enumeration_cap();
    scan::Mode mode = scan::default_mode();
};

// The full solution set as a union of pieces over all 2^N support patterns.
SolutionSet enumerate_solution_set(const TLCPInstance& inst, const EnumerateOptions& opt = {});

struct VerifyResult {
    bool ok = true;
    std::string violation;            // empty when ok
    std::optional<MultiIndex> index;  // first offending component
};

// Exact check of Z >= 0, MZ + Q >= 0, <Z, MZ + Q> = 0.
VerifyResult verify_solution(const TLCPInstance& inst, const DenseTensor& z);

// <Z, MZ> + <Q, Z>; zero at solutions, positive at feasible non-solutions.
Rational qp_objective(const TLCPInstance& inst, const DenseTensor& z);

// Certificate for the quadratic program min qp_objective over the feasible
// set, at a claimed minimizer z_star with multiplier tensor u_star.
struct KKTCertificate {
    DenseTensor z_star;
    DenseTensor u_star;
};

// The five stationarity/feasibility/complementarity conditions:
//   1. 2 M z* + q - M u* >= 0          (gradient minus multiplier term)
//   2. z* o (2 M z* + q - M u*) = 0    (componentwise)
//   3. z* >= 0 and M z* + q >= 0
//   4. u* >= 0 and u* o (M z* + q) = 0 (multiplier supported on {w* = 0})
//   5. <z* - u*, M(z* - u*)> <= 0
// Requires block-symmetric M (the QP gradient identity depends on it).
struct KKTReport {
    bool ok = true;
    std::array<bool, 5> condition{true, true, true, true, true};
    std::string detail;
};

KKTReport verify_kkt(const TLCPInstance& inst, const KKTCertificate& cert);

// From a valid certificate on a column sufficient instance, derives that
// z_star itself solves the complementarity problem, re-proving each link of
// the chain exactly. Throws KKTInvalidError / NotColumnSufficientError on
// bad input and ChainViolatedError if a derived identity fails (a bug).
Solution solve_via_kkt_chain(const TLCPInstance& inst, const KKTCertificate& cert,
                             const ClassifyOptions& opt = {});

} // namespace tlcp
