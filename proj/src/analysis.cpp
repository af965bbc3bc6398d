#include "tlcp/analysis.hpp"

#include <algorithm>
#include <string>

#include "tlcp/errors.hpp"
#include "tlcp/random.hpp"

namespace tlcp {

std::pair<Rational, Rational> cross_complementarity(const TLCPInstance& inst,
                                                    const DenseTensor& z1,
                                                    const DenseTensor& z2) {
    if (z1.shape() != inst.q.shape() || z2.shape() != inst.q.shape())
        throw ShapeMismatchError("cross_complementarity: operand has wrong shape");
    const DenseTensor w1 = add(contract(inst.m, z1), inst.q);
    const DenseTensor w2 = add(contract(inst.m, z2), inst.q);
    return {inner_product(z1, w2), inner_product(z2, w1)};
}

// ---------------------------------------------------------------------------
// Convexity of the solution set. Every solution is a convex combination of
// its piece's vertices plus a conic combination of its piece's rays, and
// every cross term <generator, A generator' (+q)> between solutions is
// nonnegative, so the pairwise solution products vanish exactly when the
// finitely many generator products vanish. The scan order below (vertex
// pairs, then vertex/ray, then ray pairs, each in collection order) pins
// which violating pair is reported.

namespace {

struct Generators {
    std::vector<Vec> vertices;
    std::vector<int> vertex_piece;
    std::vector<Vec> rays;
    std::vector<int> ray_piece;
};

Generators collect_generators(const SolutionSet& sols) {
    Generators g;
    for (std::size_t p = 0; p < sols.pieces.size(); ++p) {
        for (const DenseTensor& v : sols.pieces[p].vertices) {
            Vec vv = vectorize(v);
            bool seen = false;
            for (const Vec& u : g.vertices) {
                if (u == vv) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                g.vertices.push_back(std::move(vv));
                g.vertex_piece.push_back(static_cast<int>(p));
            }
        }
        for (const DenseTensor& r : sols.pieces[p].rays) {
            Vec rv = vectorize(r);
            bool seen = false;
            for (const Vec& u : g.rays) {
                if (u == rv) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                g.rays.push_back(std::move(rv));
                g.ray_piece.push_back(static_cast<int>(p));
            }
        }
    }
    return g;
}

} // namespace

ConvexityReport check_convexity(const TLCPInstance& inst, const EnumerateOptions& opt) {
    const SolutionSet sols = enumerate_solution_set(inst, opt);
    ConvexityReport rep;
    rep.piece_count = static_cast<int>(sols.pieces.size());
    if (sols.empty()) {
        rep.verdict = ConvexityReport::Verdict::Empty;
        return rep;
    }

    const Matrix a = flatten(inst.m);
    const Vec q = vectorize(inst.q);
    const Generators g = collect_generators(sols);
    rep.vertex_generators = static_cast<int>(g.vertices.size());
    rep.ray_generators = static_cast<int>(g.rays.size());

    const int order = inst.half_order();
    const int side = inst.side();
    auto as_tensor = [&](const Vec& v) { return unvectorize(v, order, side); };
    auto piece_base = [&](int piece) { return vectorize(sols.pieces[piece].vertices.front()); };
    auto found = [&](const Vec& z1, const Vec& z2) {
        DenseTensor t1 = as_tensor(z1);
        DenseTensor t2 = as_tensor(z2);
        rep.cross_values = cross_complementarity(inst, t1, t2);
        rep.violating_pair = {std::move(t1), std::move(t2)};
        rep.verdict = ConvexityReport::Verdict::NonConvex;
    };

    // Vertex pairs: both cross products must vanish.
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            const Vec wj = matvec(a, g.vertices[j]);
            const Vec wi = matvec(a, g.vertices[i]);
            Rational c1 = dot(g.vertices[i], wj);
            Rational c2 = dot(g.vertices[j], wi);
            for (std::size_t t = 0; t < q.size(); ++t) {
                c1 += g.vertices[i][t] * q[t];
                c2 += g.vertices[j][t] * q[t];
            }
            if (c1 != 0 || c2 != 0) {
                found(g.vertices[i], g.vertices[j]);
                return rep;
            }
        }
    }
    // Vertex/ray pairs: <v, A u> and <u, A v + q>.
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = 0; j < g.rays.size(); ++j) {
            const Rational c1 = dot(g.vertices[i], matvec(a, g.rays[j]));
            Vec wv = matvec(a, g.vertices[i]);
            for (std::size_t t = 0; t < q.size(); ++t) wv[t] += q[t];
            const Rational c2 = dot(g.rays[j], wv);
            if (c1 != 0 || c2 != 0) {
                Vec z2 = piece_base(g.ray_piece[j]);
                for (std::size_t t = 0; t < z2.size(); ++t) z2[t] += g.rays[j][t];
                found(g.vertices[i], z2);
                return rep;
            }
        }
    }
    // Ray pairs: <u, A u'>; a self pair cannot violate for a genuine piece.
    for (std::size_t i = 0; i < g.rays.size(); ++i) {
        for (std::size_t j = i; j < g.rays.size(); ++j) {
            const Rational c1 = dot(g.rays[i], matvec(a, g.rays[j]));
            const Rational c2 = dot(g.rays[j], matvec(a, g.rays[i]));
            if (c1 == 0 && c2 == 0) continue;
            if (i == j)
                throw InternalInconsistencyError(
                    "check_convexity: a solution ray is not self-complementary");
            Vec z1 = piece_base(g.ray_piece[i]);
            Vec z2 = piece_base(g.ray_piece[j]);
            for (std::size_t t = 0; t < z1.size(); ++t) z1[t] += g.rays[i][t];
            for (std::size_t t = 0; t < z2.size(); ++t) z2[t] += g.rays[j][t];
            found(z1, z2);
            return rep;
        }
    }

    rep.verdict = sols.singleton() ? ConvexityReport::Verdict::Singleton
                                   : ConvexityReport::Verdict::Convex;

    // Spot check: with all cross products zero, midpoints of distinct
    // solution points must solve as well.
    if (g.vertices.size() >= 2) {
        Vec mid(q.size());
        for (std::size_t t = 0; t < q.size(); ++t)
            mid[t] = (g.vertices[0][t] + g.vertices[1][t]) / 2;
        VerifyResult check = verify_solution(inst, as_tensor(mid));
        if (!check.ok)
            throw InternalInconsistencyError(
                "check_convexity: zero cross products but a midpoint fails: " + check.violation);
    }
    return rep;
}

NonConvexWitness construct_nonconvex_witness(const DenseTensor& m, const ClassifyOptions& opt) {
    Verdict cs = is_column_sufficient(m, opt);
    if (cs.holds)
        throw NotApplicableError(
            "construct_nonconvex_witness: the tensor is column sufficient");

    const DenseTensor& z = *cs.witness;
    const DenseTensor y = contract(m, z);
    const DenseTensor zp = positive_part(z);
    const DenseTensor zn = negative_part(z);
    const DenseTensor yp = positive_part(y);
    const DenseTensor yn = negative_part(y);

    const DenseTensor q1 = subtract(yp, contract(m, zp));
    const DenseTensor q2 = subtract(yn, contract(m, zn));
    if (q1 != q2)
        throw ChainViolatedError(
            "construct_nonconvex_witness: the two expressions for Q disagree");

    NonConvexWitness w{q1, zp, zn, {Rational(0), Rational(0)}, cs.violating.at(0), z};

    TLCPInstance inst(m, w.q);
    VerifyResult v1 = verify_solution(inst, w.x1);
    VerifyResult v2 = verify_solution(inst, w.x2);
    if (!v1.ok || !v2.ok)
        throw ChainViolatedError("construct_nonconvex_witness: a split part fails to solve: " +
                                 (v1.ok ? v2.violation : v1.violation));
    w.cross_values = cross_complementarity(inst, w.x1, w.x2);
    if (w.cross_values.first == 0 && w.cross_values.second == 0)
        throw ChainViolatedError(
            "construct_nonconvex_witness: both cross products vanished");
    return w;
}

UniquenessResult check_uniqueness_positive_q(const DenseTensor& m, const DenseTensor& q,
                                             const EnumerateOptions& opt) {
    if (!is_positive(q))
        throw QNotStrictlyPositiveError(
            "check_uniqueness_positive_q: every entry of Q must be strictly positive");
    TLCPInstance inst(m, q);
    const SolutionSet sols = enumerate_solution_set(inst, opt);
    if (sols.empty())
        throw InternalInconsistencyError(
            "check_uniqueness_positive_q: Z = 0 solves for positive Q, yet no piece found");

    const Generators g = collect_generators(sols);
    UniquenessResult out;
    if (g.vertices.size() == 1 && g.rays.empty()) {
        out.kind = UniquenessResult::Kind::Unique;
        out.solution = unvectorize(g.vertices[0], inst.half_order(), inst.side());
        return out;
    }
    out.kind = UniquenessResult::Kind::Multiple;
    if (g.vertices.size() >= 2) {
        out.pair = {unvectorize(g.vertices[0], inst.half_order(), inst.side()),
                    unvectorize(g.vertices[1], inst.half_order(), inst.side())};
    } else {
        Vec other = g.vertices[0];
        for (std::size_t t = 0; t < other.size(); ++t) other[t] += g.rays[0][t];
        out.pair = {unvectorize(g.vertices[0], inst.half_order(), inst.side()),
                    unvectorize(other, inst.half_order(), inst.side())};
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string verdict_name(ConvexityReport::Verdict v) {
    switch (v) {
        case ConvexityReport::Verdict::Empty: return "empty";
        case ConvexityReport::Verdict::Singleton: return "singleton";
        case ConvexityReport::Verdict::Convex: return "convex";
        case ConvexityReport::Verdict::NonConvex: return "nonconvex";
    }
    return "unknown";
}

struct IterationOutcome {
    bool column_sufficient = false;
    bool column_sufficient_on_nonneg = false;
    bool p_class = false;
    bool nondegenerate = false;
    int convexity_checks = 0;
    int witness_constructions = 0;
    int uniqueness_checks = 0;
    std::vector<std::string> failures;
};

IterationOutcome run_iteration(const HarnessOptions& opt, std::size_t iteration) {
    IterationOutcome out;
    auto fail = [&](const std::string& msg) {
        out.failures.push_back("iteration " + std::to_string(iteration) + ": " + msg);
    };

    std::mt19937_64 rng = rng_for(opt.seed, iteration);
    ClassifyOptions copt{opt.cap, opt.mode};
    EnumerateOptions eopt{opt.cap, opt.mode};
    const DenseTensor m =
        random_integer_tensor(rng, cubical_shape(2 * opt.m, opt.n), opt.entry_lo, opt.entry_hi);

    try {
        const ClassificationReport rep = classify(m, copt);
        out.column_sufficient = rep.holds(TensorClass::ColumnSufficient);
        out.column_sufficient_on_nonneg = rep.holds(TensorClass::ColumnSufficientOnNonneg);
        out.p_class = rep.holds(TensorClass::P);
        out.nondegenerate = rep.holds(TensorClass::NonDegenerate);

        if (out.column_sufficient) {
            for (int t = 0; t < opt.q_trials; ++t) {
                const DenseTensor q = random_integer_tensor(
                    rng, cubical_shape(opt.m, opt.n), opt.entry_lo, opt.entry_hi);
                ConvexityReport conv = check_convexity(TLCPInstance(m, q), eopt);
                ++out.convexity_checks;
                if (conv.verdict == ConvexityReport::Verdict::NonConvex)
                    fail("column sufficient tensor produced a nonconvex solution set");
            }
        } else {
            NonConvexWitness w = construct_nonconvex_witness(m, copt);
            ++out.witness_constructions;
            ConvexityReport conv = check_convexity(TLCPInstance(m, w.q), eopt);
            if (conv.verdict != ConvexityReport::Verdict::NonConvex)
                fail("constructed witness left a " + verdict_name(conv.verdict) +
                     " solution set");
        }

        if (out.column_sufficient_on_nonneg) {
            for (int t = 0; t < opt.q_trials; ++t) {
                const DenseTensor q = random_integer_tensor(
                    rng, cubical_shape(opt.m, opt.n), 1, std::max(1L, opt.entry_hi));
                UniquenessResult u = check_uniqueness_positive_q(m, q, eopt);
                ++out.uniqueness_checks;
                if (u.kind != UniquenessResult::Kind::Unique) {
                    fail("orthant-restricted class tensor with positive Q has multiple "
                         "solutions");
                } else if (!is_zero(*u.solution)) {
                    fail("unique solution for positive Q is not the zero tensor");
                }
            }
        }
    } catch (const Error& e) {
        fail(std::string("exception: ") + e.what());
    }
    return out;
}

} // namespace

HarnessReport theorem_harness(const HarnessOptions& opt) {
    if (opt.count < 0 || opt.m < 1 || opt.n < 1 || opt.entry_lo > opt.entry_hi)
        throw Error("theorem_harness: invalid options");

    HarnessReport rep;
    rep.options = opt;
    rep.tensors = opt.count;

    std::vector<IterationOutcome> outcomes = scan::map_indexed<IterationOutcome>(
        static_cast<std::size_t>(opt.count),
        [&](std::size_t i) { return run_iteration(opt, i); }, opt.mode);

    for (const IterationOutcome& o : outcomes) {
        rep.column_sufficient += o.column_sufficient ? 1 : 0;
        rep.column_sufficient_on_nonneg += o.column_sufficient_on_nonneg ? 1 : 0;
        rep.p_class += o.p_class ? 1 : 0;
        rep.nondegenerate += o.nondegenerate ? 1 : 0;
        rep.convexity_checks += o.convexity_checks;
        rep.witness_constructions += o.witness_constructions;
        rep.uniqueness_checks += o.uniqueness_checks;
        rep.failures.insert(rep.failures.end(), o.failures.begin(), o.failures.end());
    }
    return rep;
}

} // namespace tlcp
