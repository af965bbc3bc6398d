// Decision procedures for the structured tensor classes.
//
// Everything reduces to exact feasibility questions about A = flatten(M).
// For the sign-pattern families the key fact is homogeneity: a violating z
// with sign pattern sigma rescales so that sigma_i z_i >= 1 on the support
// and any strict product reaches <= -1, so scanning the finite pattern space
// with one LP per pattern is sound and complete.
//
// Pattern LP for sigma with support S = {i : sigma_i != 0}:
//   z_i = 0               off S
//   sigma_i z_i >= 1      on S
//   product rows on S, by family:
//     column sufficiency / P:  sigma_i (Az)_i <= 0, strict index k <= -1
//     non-degeneracy:          (Az)_i  = 0
//     semipositivity:          (Az)_i <= -1   (strict version: <= 0)
// minimizing sum_S sigma_i z_i. Feasible implies optimal (the objective is
// at least |S|), and the minimizer is the canonical witness.
//
// Scan order: patterns are enumerated lexicographically with component
// values ordered (0, +1, -1), first component most significant; the column
// sufficiency families expand each pattern into strict indices k in
// ascending order. The first feasible entry wins, which pins the witness.

#include "tlcp/classify.hpp"

#include <string>

#include "tlcp/errors.hpp"
#include "tlcp/linsys.hpp"
#include "tlcp/lp.hpp"

namespace tlcp {

std::string_view class_name(TensorClass c) {
    switch (c) {
        case TensorClass::ColumnSufficient: return "column_sufficient";
        case TensorClass::ColumnSufficientOnNonneg: return "column_sufficient_on_nonneg";
        case TensorClass::P: return "p";
        case TensorClass::NonDegenerate: return "nondegenerate";
        case TensorClass::SemiPositive: return "semi_positive";
        case TensorClass::StrictlySemiPositive: return "strictly_semi_positive";
        case TensorClass::Copositive: return "copositive";
        case TensorClass::StrictlyCopositive: return "strictly_copositive";
        case TensorClass::PositiveSemidefinite: return "positive_semidefinite";
    }
    return "unknown";
}

namespace {

enum class ProductRule {
    SignedNonPositive,  // sigma_i (Az)_i <= 0 (optionally <= -1 at one index)
    Zero,               // (Az)_i = 0
    AllLeMinusOne,      // (Az)_i <= -1 (supports only, sigma = +1)
    AllLeZero,          // (Az)_i <= 0  (supports only, sigma = +1)
};

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

// Pattern of ordinal `ord` in base `base` (2 or 3), first component most
// significant; digit values map 0 -> 0, 1 -> +1, 2 -> -1.
std::vector<int> pattern_from_ordinal(std::size_t ord, int n, int base) {
    std::vector<int> sigma(static_cast<std::size_t>(n), 0);
    for (int c = n - 1; c >= 0; --c) {
        int digit = static_cast<int>(ord % static_cast<std::size_t>(base));
        ord /= static_cast<std::size_t>(base);
        sigma[c] = digit == 2 ? -1 : digit;
    }
    return sigma;
}

std::optional<Vec> solve_pattern(const Matrix& a, const std::vector<int>& sigma,
                                 ProductRule rule, int strict_k) {
    const int n = a.rows();
    LinearProgram lp = LinearProgram::in_dimension(n);
    lp.objective.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        Vec unit(static_cast<std::size_t>(n), Rational(0));
        unit[i] = 1;
        if (sigma[i] == 0) {
            lp.add_eq(std::move(unit), Rational(0));
            continue;
        }
        lp.objective[i] = sigma[i];
        if (sigma[i] > 0) {
            lp.add_ge(std::move(unit), Rational(1));
        } else {
            lp.add_le(std::move(unit), Rational(-1));
        }
        Vec row(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) row[c] = a(i, c);
        switch (rule) {
            case ProductRule::SignedNonPositive: {
                if (sigma[i] < 0)
                    for (auto& x : row) x = -x;
                lp.add_le(std::move(row), i == strict_k ? Rational(-1) : Rational(0));
                break;
            }
            case ProductRule::Zero:
                lp.add_eq(std::move(row), Rational(0));
                break;
            case ProductRule::AllLeMinusOne:
                lp.add_le(std::move(row), Rational(-1));
                break;
            case ProductRule::AllLeZero:
                lp.add_le(std::move(row), Rational(0));
                break;
        }
    }
    LPOutcome out = lp_solve(lp);
    if (out.kind == LPOutcome::Kind::Infeasible) return std::nullopt;
    if (out.kind != LPOutcome::Kind::Optimal)
        throw InternalInconsistencyError("pattern LP cannot be unbounded");
    return out.point;
}

struct ScanHit {
    std::vector<int> sigma;
    int k = -1;  // strict index, when the family uses one
    Vec z;
};

// Scans ordinals 1 .. base^N - 1 (times N strict indices when with_strict),
// in lexicographic pattern order; returns the first feasible entry.
std::optional<ScanHit> scan_patterns(const DenseTensor& m, int base, ProductRule rule,
                                     bool with_strict, const ClassifyOptions& opt) {
    const Matrix a = flatten(m);
    const std::size_t n = static_cast<std::size_t>(a.rows());
    require_enumerable(n, opt.cap);
    const std::size_t pattern_count = ipow(static_cast<std::size_t>(base), n) - 1;
    const std::size_t total = with_strict ? pattern_count * n : pattern_count;
    const int ni = static_cast<int>(n);

    auto decode = [&](std::size_t idx) {
        std::size_t ord = with_strict ? 1 + idx / n : 1 + idx;
        int k = with_strict ? static_cast<int>(idx % n) : -1;
        return std::make_pair(pattern_from_ordinal(ord, ni, base), k);
    };

    auto feasible = [&](std::size_t idx) {
        auto [sigma, k] = decode(idx);
        if (k >= 0 && sigma[k] == 0) return false;
        return solve_pattern(a, sigma, rule, k).has_value();
    };

    std::optional<std::size_t> hit = scan::first_hit(total, feasible, opt.mode);
    if (!hit) return std::nullopt;

    auto [sigma, k] = decode(*hit);
    std::optional<Vec> z = solve_pattern(a, sigma, rule, k);
    if (!z) throw InternalInconsistencyError("pattern scan hit became infeasible on re-solve");
    return ScanHit{std::move(sigma), k, std::move(*z)};
}

DenseTensor shaped(const DenseTensor& m, const Vec& z) {
    return unvectorize(z, m.order() / 2, m.shape().side());
}

Rational form_value(const DenseTensor& m, const DenseTensor& z) {
    return inner_product(z, contract(m, z));
}

Verdict reject_with(const DenseTensor& m, const ScanHit& hit, bool strict_index_applies) {
    Verdict v;
    v.holds = false;
    DenseTensor zt = shaped(m, hit.z);
    if (strict_index_applies && hit.k >= 0) v.violating.push_back(zt.index_at(hit.k));
    v.witness_value = form_value(m, zt);
    v.witness = std::move(zt);
    return v;
}

} // namespace

Verdict is_column_sufficient(const DenseTensor& m, const ClassifyOptions& opt) {
    auto hit = scan_patterns(m, 3, ProductRule::SignedNonPositive, true, opt);
    if (!hit) return {};
    return reject_with(m, *hit, true);
}

Verdict is_column_sufficient_on_nonneg(const DenseTensor& m, const ClassifyOptions& opt) {
    auto hit = scan_patterns(m, 2, ProductRule::SignedNonPositive, true, opt);
    if (!hit) return {};
    return reject_with(m, *hit, true);
}

Verdict is_p(const DenseTensor& m, const ClassifyOptions& opt) {
    auto hit = scan_patterns(m, 3, ProductRule::SignedNonPositive, false, opt);
    if (!hit) return {};
    return reject_with(m, *hit, false);
}

Verdict is_nondegenerate(const DenseTensor& m, const ClassifyOptions& opt) {
    auto hit = scan_patterns(m, 3, ProductRule::Zero, false, opt);
    if (!hit) return {};
    return reject_with(m, *hit, false);
}

namespace {

Verdict reject_support(const DenseTensor& m, const ScanHit& hit) {
    Verdict v;
    v.holds = false;
    DenseTensor zt = shaped(m, hit.z);
    for (std::size_t i = 0; i < hit.sigma.size(); ++i) {
        if (hit.sigma[i] != 0) v.violating.push_back(zt.index_at(i));
    }
    v.witness_value = form_value(m, zt);
    v.witness = std::move(zt);
    return v;
}

} // namespace

Verdict is_semi_positive(const DenseTensor& m, const ClassifyOptions& opt) {
    auto hit = scan_patterns(m, 2, ProductRule::AllLeMinusOne, false, opt);
    if (!hit) return {};
    return reject_support(m, *hit);
}

Verdict is_strictly_semi_positive(const DenseTensor& m, const ClassifyOptions& opt) {
    auto hit = scan_patterns(m, 2, ProductRule::AllLeZero, false, opt);
    if (!hit) return {};
    return reject_support(m, *hit);
}

// ---------------------------------------------------------------------------
// Copositivity by face stationarity. The minimum of z^T S z over the standard
// simplex is attained on some face F where the restricted gradient is a
// multiple of the all-ones vector:
//   2 S_FF z_F = lambda 1,  1^T z_F = 1,  z_F >= 0,
// and every feasible point of that system has value lambda / 2 (multiply the
// stationarity rows by z_F and sum). Minimizing lambda over each face system
// and taking the smallest over faces yields the exact simplex minimum mu*;
// M is copositive iff mu* >= 0 and strictly copositive iff mu* > 0.

namespace {

struct SimplexMinimum {
    Rational value;
    Vec point;                    // full-dimensional z on the simplex
    std::vector<int> face;       // 0-based support
};

SimplexMinimum simplex_form_minimum(const DenseTensor& m, const ClassifyOptions& opt) {
    const Matrix a = flatten(m);
    const Matrix s = symmetric_part(a);
    const std::size_t n = static_cast<std::size_t>(a.rows());
    require_enumerable(n, opt.cap);
    const int ni = static_cast<int>(n);

    struct Candidate {
        bool feasible = false;
        Rational value;
        Vec point;
    };

    auto face_candidate = [&](std::size_t face_ordinal) -> Candidate {
        const std::uint64_t mask = face_ordinal + 1;  // skip the empty face
        std::vector<int> face;
        for (int i = 0; i < ni; ++i) {
            if ((mask >> (ni - 1 - i)) & 1) face.push_back(i);
        }
        const int f = static_cast<int>(face.size());
        // Variables (z_F, lambda).
        LinearProgram lp = LinearProgram::in_dimension(f + 1);
        for (int r = 0; r < f; ++r) {
            Vec row(static_cast<std::size_t>(f + 1), Rational(0));
            for (int c = 0; c < f; ++c) row[c] = 2 * s(face[r], face[c]);
            row[f] = -1;
            lp.add_eq(std::move(row), Rational(0));
        }
        Vec ones(static_cast<std::size_t>(f + 1), Rational(1));
        ones[f] = 0;
        lp.add_eq(std::move(ones), Rational(1));
        for (int c = 0; c < f; ++c) {
            Vec unit(static_cast<std::size_t>(f + 1), Rational(0));
            unit[c] = 1;
            lp.add_ge(std::move(unit), Rational(0));
        }
        lp.objective.assign(static_cast<std::size_t>(f + 1), Rational(0));
        lp.objective[f] = 1;  // minimize lambda; bounded on the compact face

        LPOutcome out = lp_solve(lp);
        if (out.kind == LPOutcome::Kind::Infeasible) return {};
        if (out.kind != LPOutcome::Kind::Optimal)
            throw InternalInconsistencyError("face stationarity LP cannot be unbounded");
        Candidate c;
        c.feasible = true;
        c.value = out.point[f] / 2;
        c.point.assign(n, Rational(0));
        for (int i = 0; i < f; ++i) c.point[face[i]] = out.point[i];
        return c;
    };

    const std::size_t faces = (std::size_t{1} << n) - 1;
    std::vector<Candidate> cands =
        scan::map_indexed<Candidate>(faces, face_candidate, opt.mode);

    const Candidate* best = nullptr;
    std::size_t best_ordinal = 0;
    for (std::size_t i = 0; i < faces; ++i) {
        if (!cands[i].feasible) continue;
        if (!best || cands[i].value < best->value) {
            best = &cands[i];
            best_ordinal = i;
        }
    }
    if (!best)
        throw InternalInconsistencyError(
            "simplex minimum scan found no stationary face (singletons always qualify)");

    SimplexMinimum mn;
    mn.value = best->value;
    mn.point = best->point;
    const std::uint64_t mask = best_ordinal + 1;
    for (int i = 0; i < ni; ++i) {
        if ((mask >> (ni - 1 - i)) & 1) mn.face.push_back(i);
    }
    return mn;
}

Verdict copositivity_verdict(const DenseTensor& m, const ClassifyOptions& opt, bool strict) {
    SimplexMinimum mn = simplex_form_minimum(m, opt);
    const bool holds = strict ? mn.value > 0 : mn.value >= 0;
    Verdict v;
    v.holds = holds;
    if (!holds) {
        DenseTensor zt = shaped(m, mn.point);
        Rational check = form_value(m, zt);
        if (check != mn.value)
            throw InternalInconsistencyError("simplex minimum value disagrees with its point");
        for (int i : mn.face) v.violating.push_back(zt.index_at(static_cast<std::size_t>(i)));
        v.witness_value = check;
        v.witness = std::move(zt);
    }
    return v;
}

} // namespace

Verdict is_copositive(const DenseTensor& m, const ClassifyOptions& opt) {
    return copositivity_verdict(m, opt, false);
}

Verdict is_strictly_copositive(const DenseTensor& m, const ClassifyOptions& opt) {
    return copositivity_verdict(m, opt, true);
}

// ---------------------------------------------------------------------------
// Positive semidefiniteness of the symmetric part: all principal minors
// nonnegative. The witness is built by descent: a negative diagonal entry
// gives a coordinate direction; a zero diagonal entry with a nonzero
// off-diagonal partner gives a two-coordinate direction of value -1;
// otherwise pivot on a positive diagonal entry and recurse on the Schur
// complement, lifting the witness back.

namespace {

Vec negative_form_direction(const Matrix& s) {
    const int n = s.rows();
    for (int i = 0; i < n; ++i) {
        if (s(i, i) < 0) {
            Vec z(static_cast<std::size_t>(n), Rational(0));
            z[i] = 1;
            return z;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (s(i, i) != 0) continue;
        for (int j = 0; j < n; ++j) {
            if (j == i || s(i, j) == 0) continue;
            Vec z(static_cast<std::size_t>(n), Rational(0));
            z[i] = -(s(j, j) + 1) / (2 * s(i, j));
            z[j] = 1;
            return z;  // value = 2 z_i s_ij + s_jj = -1
        }
    }
    // Diagonal entries are positive except for indices whose whole row is
    // zero; the form ignores those indices entirely.
    std::vector<int> live;
    for (int i = 0; i < n; ++i) {
        if (s(i, i) != 0) live.push_back(i);
    }
    if (live.empty())
        throw InternalInconsistencyError("psd witness descent reached the zero form");
    const int p = live[0];
    std::vector<int> rest(live.begin() + 1, live.end());
    if (rest.empty())
        throw InternalInconsistencyError("psd witness descent exhausted a semidefinite form");
    Matrix schur(static_cast<int>(rest.size()), static_cast<int>(rest.size()));
    for (std::size_t r = 0; r < rest.size(); ++r)
        for (std::size_t c = 0; c < rest.size(); ++c)
            schur(static_cast<int>(r), static_cast<int>(c)) =
                s(rest[r], rest[c]) - s(rest[r], p) * s(p, rest[c]) / s(p, p);
    Vec u = negative_form_direction(schur);
    Vec z(static_cast<std::size_t>(n), Rational(0));
    Rational cross = 0;
    for (std::size_t r = 0; r < rest.size(); ++r) {
        z[rest[r]] = u[r];
        cross += s(p, rest[r]) * u[r];
    }
    z[p] = -cross / s(p, p);
    return z;
}

} // namespace

Verdict is_positive_semidefinite(const DenseTensor& m, const ClassifyOptions& opt) {
    const Matrix a = flatten(m);
    const Matrix s = symmetric_part(a);
    const std::size_t n = static_cast<std::size_t>(a.rows());
    require_enumerable(n, opt.cap);
    const int ni = static_cast<int>(n);

    auto minor_negative = [&](std::size_t subset_ordinal) {
        const std::uint64_t mask = subset_ordinal + 1;
        std::vector<int> idx;
        for (int i = 0; i < ni; ++i) {
            if ((mask >> (ni - 1 - i)) & 1) idx.push_back(i);
        }
        return principal_minor(s, idx) < 0;
    };

    const std::size_t subsets = (std::size_t{1} << n) - 1;
    std::optional<std::size_t> neg = scan::first_hit(subsets, minor_negative, opt.mode);
    if (!neg) return {};

    Verdict v;
    v.holds = false;
    const std::uint64_t mask = *neg + 1;
    Vec z = negative_form_direction(s);
    DenseTensor zt = shaped(m, z);
    Rational value = form_value(m, zt);
    if (value >= 0)
        throw InternalInconsistencyError("psd witness descent produced a nonnegative value");
    for (int i = 0; i < ni; ++i) {
        if ((mask >> (ni - 1 - i)) & 1) v.violating.push_back(zt.index_at(i));
    }
    v.witness_value = value;
    v.witness = std::move(zt);
    return v;
}

// ---------------------------------------------------------------------------

namespace {

void require_implication(bool antecedent, bool consequent, const char* text) {
    if (antecedent && !consequent)
        throw InternalInconsistencyError(std::string("implication lattice violated: ") + text);
}

} // namespace

ClassificationReport classify(const DenseTensor& m, const ClassifyOptions& opt) {
    ClassificationReport rep;
    rep.results.emplace(TensorClass::ColumnSufficient, is_column_sufficient(m, opt));
    rep.results.emplace(TensorClass::ColumnSufficientOnNonneg,
                        is_column_sufficient_on_nonneg(m, opt));
    rep.results.emplace(TensorClass::P, is_p(m, opt));
    rep.results.emplace(TensorClass::NonDegenerate, is_nondegenerate(m, opt));
    rep.results.emplace(TensorClass::SemiPositive, is_semi_positive(m, opt));
    rep.results.emplace(TensorClass::StrictlySemiPositive, is_strictly_semi_positive(m, opt));
    rep.results.emplace(TensorClass::Copositive, is_copositive(m, opt));
    rep.results.emplace(TensorClass::StrictlyCopositive, is_strictly_copositive(m, opt));
    rep.results.emplace(TensorClass::PositiveSemidefinite, is_positive_semidefinite(m, opt));

    const bool cs = rep.holds(TensorClass::ColumnSufficient);
    const bool csk = rep.holds(TensorClass::ColumnSufficientOnNonneg);
    const bool p = rep.holds(TensorClass::P);
    const bool nd = rep.holds(TensorClass::NonDegenerate);
    const bool sp = rep.holds(TensorClass::SemiPositive);
    const bool ssp = rep.holds(TensorClass::StrictlySemiPositive);
    const bool cop = rep.holds(TensorClass::Copositive);
    const bool scop = rep.holds(TensorClass::StrictlyCopositive);
    const bool psd = rep.holds(TensorClass::PositiveSemidefinite);

    require_implication(psd, cs, "positive semidefinite implies column sufficient");
    require_implication(p, cs, "P implies column sufficient");
    require_implication(cs, csk, "column sufficient implies the orthant-restricted class");
    require_implication(cop, csk, "copositive implies the orthant-restricted class");
    require_implication(csk, sp, "the orthant-restricted class implies semipositive");
    require_implication(scop, cop, "strict copositivity implies copositivity");
    require_implication(ssp, sp, "strict semipositivity implies semipositivity");
    if (p != (cs && nd))
        throw InternalInconsistencyError(
            "implication lattice violated: P must equal column sufficient plus non-degenerate");
    return rep;
}

} // namespace tlcp
