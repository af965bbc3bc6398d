#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlcp/classify.hpp"
#include "tlcp/solver.hpp"

namespace tlcp {

// (<Z1, M Z2 + Q>, <Z2, M Z1 + Q>). Both vanish for every pair of solutions
// exactly when the solution set is convex.
std::pair<Rational, Rational> cross_complementarity(const TLCPInstance& inst,
                                                    const DenseTensor& z1, const DenseTensor& z2);

struct ConvexityReport {
    enum class Verdict { Empty, Singleton, Convex, NonConvex };

    Verdict verdict = Verdict::Empty;
    // NonConvex: two solutions whose cross products do not both vanish.
    std::optional<std::pair<DenseTensor, DenseTensor>> violating_pair;
    std::optional<std::pair<Rational, Rational>> cross_values;
    int piece_count = 0;
    int vertex_generators = 0;
    int ray_generators = 0;

    bool is_convex() const { return verdict != Verdict::NonConvex; }
};

// Decides convexity of the solution set by checking cross complementarity
// on piece generators (vertices and rays); bilinearity and the sign of
// every generator term reduce the solution-pair condition to finitely many
// generator pairs.
ConvexityReport check_convexity(const TLCPInstance& inst, const EnumerateOptions& opt = {});

// For a tensor that is not column sufficient: a Q for which the solution
// set is provably non-convex, with the two solutions X1, X2 and their cross
// products (at least one is strictly positive).
struct NonConvexWitness {
    DenseTensor q;
    DenseTensor x1;
    DenseTensor x2;
    std::pair<Rational, Rational> cross_values;
    MultiIndex strict_index;   // component with x_i (M x)_i < 0 in the generator
    DenseTensor generator;     // the column sufficiency violation used
};

// Builds the witness from the classifier's violation z: with Y = M z, take
// Q = max(Y, 0) - M max(z, 0) (equal to max(-Y, 0) - M max(-z, 0) at the
// complementary supports), X1 = max(z, 0), X2 = max(-z, 0). Throws
// NotApplicableError when M is column sufficient; re-verifies everything it
// claims and throws ChainViolatedError on any failure.
NonConvexWitness construct_nonconvex_witness(const DenseTensor& m, const ClassifyOptions& opt = {});

struct UniquenessResult {
    enum class Kind { Unique, Multiple };

    Kind kind = Kind::Unique;
    std::optional<DenseTensor> solution;  // Unique: the single solution
    std::optional<std::pair<DenseTensor, DenseTensor>> pair;  // Multiple: two distinct
};

// Solution multiplicity for strictly positive Q (where Z = 0 always solves).
// Throws QNotStrictlyPositiveError otherwise.
UniquenessResult check_uniqueness_positive_q(const DenseTensor& m, const DenseTensor& q,
                                             const EnumerateOptions& opt = {});

// Randomized cross-validation of the structural claims on generated
// instances: classification lattice consistency; convex (or degenerate)
// solution sets for column sufficient tensors over random Q; constructible
// non-convexity for the rest; uniqueness at strictly positive Q for the
// orthant-restricted class. Deterministic for a fixed (seed, count).
struct HarnessOptions {
    std::uint64_t seed = 1;
    int count = 1;
    int m = 2;
    int n = 2;
    long entry_lo = -3;
    long entry_hi = 3;
    int q_trials = 3;
    int cap = enumeration_cap();
    scan::Mode mode = scan::default_mode();
};

struct HarnessReport {
    HarnessOptions options;
    int tensors = 0;
    int column_sufficient = 0;
    int column_sufficient_on_nonneg = 0;
    int p_class = 0;
    int nondegenerate = 0;
    int convexity_checks = 0;
    int witness_constructions = 0;
    int uniqueness_checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

HarnessReport theorem_harness(const HarnessOptions& opt);

} // namespace tlcp
