#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "tlcp/config.hpp"
#include "tlcp/scan.hpp"
#include "tlcp/tensor.hpp"

namespace tlcp {

// Structured classes of an even-order cubical tensor M, all defined through
// the quadratic products z_i (A z)_i of the flattened matrix A = flatten(M).
enum class TensorClass {
    ColumnSufficient,          // z o Az <= 0 implies z o Az = 0
    ColumnSufficientOnNonneg,  // same restricted to z >= 0
    P,                         // z != 0 implies some z_i (Az)_i > 0
    NonDegenerate,             // z != 0 implies some z_i (Az)_i != 0
    SemiPositive,              // every 0 != z >= 0 has z_i > 0, (Az)_i >= 0 for some i
    StrictlySemiPositive,      // every 0 != z >= 0 has z_i > 0, (Az)_i > 0 for some i
    Copositive,                // z >= 0 implies <z, Az> >= 0
    StrictlyCopositive,        // 0 != z >= 0 implies <z, Az> > 0
    PositiveSemidefinite,      // <z, Az> >= 0 for all z
};

inline constexpr std::array<TensorClass, 9> kAllTensorClasses = {
    TensorClass::ColumnSufficient,     TensorClass::ColumnSufficientOnNonneg,
    TensorClass::P,                    TensorClass::NonDegenerate,
    TensorClass::SemiPositive,         TensorClass::StrictlySemiPositive,
    TensorClass::Copositive,           TensorClass::StrictlyCopositive,
    TensorClass::PositiveSemidefinite,
};

// Stable snake_case name, e.g. "column_sufficient".
std::string_view class_name(TensorClass c);

struct ClassifyOptions {
    int cap = enumeration_cap();
    scan::Mode mode = scan::default_mode();
};

// Outcome of one membership test. When the class is rejected, `witness` is a
// tensor violating the defining condition, deterministic for a fixed input:
// scans pick the first feasible pattern and canonicalize within it.
// `violating` lists the multi-indices where the defining inequality is
// strict (or the support, for the semipositivity classes), when applicable.
// `witness_value` carries <z, Az> for the quadratic-form classes.
struct Verdict {
    bool holds = true;
    std::optional<DenseTensor> witness;
    std::vector<MultiIndex> violating;
    std::optional<Rational> witness_value;
};

Verdict is_column_sufficient(const DenseTensor& m, const ClassifyOptions& opt = {});
Verdict is_column_sufficient_on_nonneg(const DenseTensor& m, const ClassifyOptions& opt = {});
Verdict is_p(const DenseTensor& m, const ClassifyOptions& opt = {});
Verdict is_nondegenerate(const DenseTensor& m, const ClassifyOptions& opt = {});
Verdict is_semi_positive(const DenseTensor& m, const ClassifyOptions& opt = {});
Verdict is_strictly_semi_positive(const DenseTensor& m, const ClassifyOptions& opt = {});
Verdict is_copositive(const DenseTensor& m, const ClassifyOptions& opt = {});
Verdict is_strictly_copositive(const DenseTensor& m, const ClassifyOptions& opt = {});
Verdict is_positive_semidefinite(const DenseTensor& m, const ClassifyOptions& opt = {});

struct ClassificationReport {
    std::map<TensorClass, Verdict> results;

    bool holds(TensorClass c) const { return results.at(c).holds; }
    const Verdict& result(TensorClass c) const { return results.at(c); }
};

// Runs every membership test and cross-checks the implication lattice
// (positive semidefinite / P-class imply column sufficient; copositive
// implies the orthant-restricted class, which implies semipositive;
// P equals column sufficient plus non-degenerate; strict classes imply
// their non-strict versions). A lattice violation throws
// InternalInconsistencyError since it can only be a bug.
ClassificationReport classify(const DenseTensor& m, const ClassifyOptions& opt = {});

} // namespace tlcp
