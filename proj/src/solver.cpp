#include "tlcp/solver.hpp"

#include <algorithm>
#include <string>

#include "tlcp/errors.hpp"
#include "tlcp/linsys.hpp"
#include "tlcp/lp.hpp"
#include "tlcp/polyhedron.hpp"

namespace tlcp {

namespace {

std::string index_text(const MultiIndex& idx) {
    std::string s = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(idx[k]);
    }
    s += ")";
    return s;
}

} // namespace

TLCPInstance::TLCPInstance(DenseTensor m_in, DenseTensor q_in)
    : m(std::move(m_in)), q(std::move(q_in)) {
    require_acting_pair(m, q);
}

FeasibilityResult is_feasible(const TLCPInstance& inst, int cap) {
    const std::size_t n = inst.flat_dimension();
    require_within_cap(n, cap);
    const Matrix a = flatten(inst.m);
    const Vec qv = vectorize(inst.q);

    LinearProgram lp = LinearProgram::in_dimension(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Vec zi(n, Rational(0));
        zi[i] = 1;
        lp.add_ge(zi, Rational(0));
        Vec row(n, Rational(0));
        for (std::size_t c = 0; c < n; ++c) row[c] = a(static_cast<int>(i), static_cast<int>(c));
        lp.add_ge(std::move(row), -qv[i]);
    }
    LPOutcome out = lp_solve(lp);
    if (out.kind == LPOutcome::Kind::Infeasible) return {false, std::nullopt};
    return {true, unvectorize(out.point, inst.half_order(), inst.side())};
}

// ---------------------------------------------------------------------------
// Lemke's method. Tableau columns are w_0..w_{N-1}, z_0..z_{N-1}, z0, rhs,
// starting from [I | -A | -1 | q] with the all-ones covering vector. The
// ratio test minimizes lexicographically over [rhs | w-block], whose rows
// stay lexico-positive, so no basis repeats and termination is guaranteed.

namespace {

struct LemkeTableau {
    std::vector<Vec> t;      // N rows, 2N + 2 columns
    std::vector<int> basis;  // w_i = i, z_i = N + i, z0 = 2N

    int rows() const { return static_cast<int>(t.size()); }
};

void lemke_pivot(LemkeTableau& tb, int r, int c) {
    Vec& prow = tb.t[r];
    const Rational piv = prow[c];
    for (auto& x : prow) x /= piv;
    for (int i = 0; i < tb.rows(); ++i) {
        if (i == r) continue;
        const Rational f = tb.t[i][c];
        if (f == 0) continue;
        for (std::size_t j = 0; j < tb.t[i].size(); ++j) {
            if (prow[j] != 0) tb.t[i][j] -= f * prow[j];
        }
    }
    tb.basis[r] = c;
}

// Lexicographic comparison of rows i and j scaled by positive entries ti, tj
// over [rhs | w-block].
bool lex_ratio_less(const LemkeTableau& tb, int i, const Rational& ti, int j,
                    const Rational& tj, int n) {
    const std::size_t rhs = static_cast<std::size_t>(2 * n) + 1;
    Rational a = tb.t[i][rhs] / ti;
    Rational b = tb.t[j][rhs] / tj;
    if (a != b) return a < b;
    for (int c = 0; c < n; ++c) {
        a = tb.t[i][c] / ti;
        b = tb.t[j][c] / tj;
        if (a != b) return a < b;
    }
    return false;
}

} // namespace

LemkeResult lemke_solve(const TLCPInstance& inst, int cap) {
    const std::size_t n = inst.flat_dimension();
    require_within_cap(n, cap);
    const int ni = static_cast<int>(n);
    const Matrix a = flatten(inst.m);
    const Vec qv = vectorize(inst.q);
    const std::size_t rhs = static_cast<std::size_t>(2 * ni) + 1;

    LemkeResult out;
    if (is_nonnegative(inst.q)) {
        out.kind = LemkeResult::Kind::FoundSolution;
        out.solution = Solution{DenseTensor(inst.q.shape()), inst.q};
        return out;
    }

    LemkeTableau tb;
    tb.t.assign(n, Vec(rhs + 1, Rational(0)));
    tb.basis.resize(n);
    for (int i = 0; i < ni; ++i) {
        tb.t[i][i] = 1;
        for (int j = 0; j < ni; ++j) tb.t[i][ni + j] = -a(i, j);
        tb.t[i][2 * ni] = -1;
        tb.t[i][rhs] = qv[i];
        tb.basis[i] = i;
    }

    // z0 enters; the lexicographic minimum row leaves (its rhs is the most
    // negative, so all rhs become nonnegative).
    int leave = 0;
    for (int i = 1; i < ni; ++i) {
        if (lex_ratio_less(tb, i, Rational(1), leave, Rational(1), ni)) leave = i;
    }
    int leaving_var = tb.basis[leave];
    lemke_pivot(tb, leave, 2 * ni);
    out.pivots = 1;

    const int pivot_limit = 1000 * ni + 1000;
    while (true) {
        const int enter = leaving_var < ni ? ni + leaving_var : leaving_var - ni;

        leave = -1;
        for (int i = 0; i < ni; ++i) {
            if (tb.t[i][enter] <= 0) continue;
            if (leave < 0 ||
                lex_ratio_less(tb, i, tb.t[i][enter], leave, tb.t[leave][enter], ni))
                leave = i;
        }
        if (leave < 0) {
            // Secondary ray: current point plus the entering direction.
            Vec zbase(n, Rational(0));
            Vec zdir(n, Rational(0));
            for (int i = 0; i < ni; ++i) {
                if (tb.basis[i] >= ni && tb.basis[i] < 2 * ni) {
                    zbase[tb.basis[i] - ni] = tb.t[i][rhs];
                    zdir[tb.basis[i] - ni] = -tb.t[i][enter];
                }
            }
            if (enter >= ni && enter < 2 * ni) zdir[enter - ni] = 1;
            out.kind = LemkeResult::Kind::RayTermination;
            out.ray_base = unvectorize(zbase, inst.half_order(), inst.side());
            out.ray_direction = unvectorize(zdir, inst.half_order(), inst.side());
            return out;
        }

        leaving_var = tb.basis[leave];
        lemke_pivot(tb, leave, enter);
        ++out.pivots;

        if (leaving_var == 2 * ni) {
            Vec z(n, Rational(0));
            for (int i = 0; i < ni; ++i) {
                if (tb.basis[i] >= ni && tb.basis[i] < 2 * ni) z[tb.basis[i] - ni] = tb.t[i][rhs];
            }
            DenseTensor zt = unvectorize(z, inst.half_order(), inst.side());
            DenseTensor wt = add(contract(inst.m, zt), inst.q);
            VerifyResult check = verify_solution(inst, zt);
            if (!check.ok)
                throw InternalInconsistencyError("lemke: pivoting produced a non-solution: " +
                                                 check.violation);
            out.kind = LemkeResult::Kind::FoundSolution;
            out.solution = Solution{std::move(zt), std::move(wt)};
            return out;
        }
        if (out.pivots > pivot_limit)
            throw InternalInconsistencyError("lemke: pivot limit exceeded");
    }
}

// ---------------------------------------------------------------------------
// Solution set enumeration over complementary support patterns.

namespace {

// Piece polyhedron for pattern alpha: z_i = 0 off alpha, (Az + q)_i = 0 on
// alpha, z_i >= 0 on alpha, (Az + q)_i >= 0 off alpha.
void pattern_system(const Matrix& a, const Vec& q, std::uint64_t mask, int n, Matrix& g, Vec& h,
                    Matrix& e, Vec& f) {
    g = Matrix(0, n);
    e = Matrix(0, n);
    h.clear();
    f.clear();
    for (int i = 0; i < n; ++i) {
        const bool in_alpha = (mask >> i) & 1;
        Vec unit(static_cast<std::size_t>(n), Rational(0));
        unit[i] = 1;
        Vec arow(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) arow[c] = a(i, c);
        if (in_alpha) {
            e.append_row(arow);
            f.push_back(-q[i]);
            for (auto& x : unit) x = -x;
            g.append_row(unit);
            h.push_back(Rational(0));
        } else {
            e.append_row(unit);
            f.push_back(Rational(0));
            for (auto& x : arow) x = -x;
            g.append_row(arow);
            h.push_back(q[i]);
        }
    }
}

bool pattern_feasible(const Matrix& g, const Vec& h, const Matrix& e, const Vec& f) {
    LinearProgram lp = LinearProgram::in_dimension(g.cols());
    for (int r = 0; r < g.rows(); ++r) {
        Vec row(static_cast<std::size_t>(g.cols()));
        for (int c = 0; c < g.cols(); ++c) row[c] = g(r, c);
        lp.add_le(std::move(row), h[r]);
    }
    for (int r = 0; r < e.rows(); ++r) {
        Vec row(static_cast<std::size_t>(e.cols()));
        for (int c = 0; c < e.cols(); ++c) row[c] = e(r, c);
        lp.add_eq(std::move(row), f[r]);
    }
    return lp_solve(lp).kind != LPOutcome::Kind::Infeasible;
}

int piece_dimension(const std::vector<Vec>& vertices, const std::vector<Vec>& rays, int n) {
    Matrix span(0, n);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        Vec diff(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) diff[c] = vertices[i][c] - vertices[0][c];
        span.append_row(diff);
    }
    for (const Vec& r : rays) span.append_row(r);
    if (span.rows() == 0) return 0;
    return rank(span);
}

} // namespace

bool SolutionSet::singleton() const {
    return pieces.size() == 1 && pieces[0].status == SolutionPiece::Status::Point;
}

bool SolutionSet::bounded() const {
    for (const auto& p : pieces) {
        if (!p.rays.empty()) return false;
    }
    return true;
}

SolutionSet enumerate_solution_set(const TLCPInstance& inst, const EnumerateOptions& opt) {
    const std::size_t n = inst.flat_dimension();
    require_enumerable(n, opt.cap);
    const int ni = static_cast<int>(n);
    const Matrix a = flatten(inst.m);
    const Vec qv = vectorize(inst.q);
    const std::uint64_t patterns = std::uint64_t{1} << n;

    struct RawPiece {
        std::vector<Vec> vertices;
        std::vector<Vec> rays;
        int dim = 0;
    };

    auto build = [&](std::size_t mask) -> std::optional<RawPiece> {
        Matrix g, e;
        Vec h, f;
        pattern_system(a, qv, mask, ni, g, h, e, f);
        if (!pattern_feasible(g, h, e, f)) return std::nullopt;
        RawPiece piece;
        piece.vertices = vertex_enumeration(g, h, e, f, opt.cap);
        if (piece.vertices.empty())
            throw InternalInconsistencyError(
                "enumerate_solution_set: nonempty piece inside the orthant has no vertex");
        piece.rays = recession_generators(g, e, opt.cap);
        piece.dim = piece_dimension(piece.vertices, piece.rays, ni);
        return piece;
    };

    std::vector<std::optional<RawPiece>> raw =
        scan::map_indexed<std::optional<RawPiece>>(patterns, build, opt.mode);

    SolutionSet out;
    std::vector<Vec> seen_points;
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        if (!raw[mask]) continue;
        RawPiece& rp = *raw[mask];
        const bool is_point = rp.vertices.size() == 1 && rp.rays.empty();
        if (is_point) {
            bool dup = false;
            for (const Vec& p : seen_points) {
                if (p == rp.vertices[0]) {
                    dup = true;
                    break;
                }
            }
            if (dup) continue;
            seen_points.push_back(rp.vertices[0]);
        }

        SolutionPiece piece;
        piece.pattern = mask;
        for (int i = 0; i < ni; ++i) {
            if ((mask >> i) & 1) piece.support.push_back(inst.q.index_at(i));
        }
        piece.status =
            is_point ? SolutionPiece::Status::Point : SolutionPiece::Status::Polyhedron;
        for (const Vec& v : rp.vertices)
            piece.vertices.push_back(unvectorize(v, inst.half_order(), inst.side()));
        for (const Vec& r : rp.rays)
            piece.rays.push_back(unvectorize(r, inst.half_order(), inst.side()));
        piece.dim = rp.dim;
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

VerifyResult verify_solution(const TLCPInstance& inst, const DenseTensor& z) {
    if (z.shape() != inst.q.shape())
        throw ShapeMismatchError("verify_solution: candidate has wrong shape");
    const DenseTensor w = add(contract(inst.m, z), inst.q);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] < 0)
            return {false, "z negative at " + index_text(z.index_at(i)), z.index_at(i)};
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0)
            return {false, "Mz + q negative at " + index_text(w.index_at(i)), w.index_at(i)};
    }
    const Rational ip = inner_product(z, w);
    if (ip != 0) return {false, "complementarity fails: <z, Mz + q> = " + to_string(ip),
                         std::nullopt};
    return {true, "", std::nullopt};
}

Rational qp_objective(const TLCPInstance& inst, const DenseTensor& z) {
    if (z.shape() != inst.q.shape())
        throw ShapeMismatchError("qp_objective: candidate has wrong shape");
    return inner_product(z, contract(inst.m, z)) + inner_product(inst.q, z);
}

KKTReport verify_kkt(const TLCPInstance& inst, const KKTCertificate& cert) {
    if (cert.z_star.shape() != inst.q.shape() || cert.u_star.shape() != inst.q.shape())
        throw ShapeMismatchError("verify_kkt: certificate has wrong shape");
    if (!is_block_symmetric(inst.m))
        throw NotBlockSymmetricError(
            "verify_kkt: M must be block symmetric for the QP gradient identity");

    const DenseTensor& z = cert.z_star;
    const DenseTensor& u = cert.u_star;
    const DenseTensor w = add(contract(inst.m, z), inst.q);
    const DenseTensor mu = contract(inst.m, u);
    // T1 = 2Mz + q - Mu = w + M(z - u)
    DenseTensor t1 = subtract(add(contract(inst.m, z), w), mu);

    KKTReport rep;
    auto fail = [&rep](int which, const std::string& msg) {
        rep.condition[which - 1] = false;
        rep.ok = false;
        if (rep.detail.empty()) rep.detail = msg;
    };

    for (std::size_t i = 0; i < t1.size(); ++i) {
        if (t1[i] < 0) {
            fail(1, "stationarity residual negative at " + index_text(t1.index_at(i)));
            break;
        }
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] * t1[i] != 0) {
            fail(2, "z* not complementary to the stationarity residual at " +
                        index_text(z.index_at(i)));
            break;
        }
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] < 0 || w[i] < 0) {
            fail(3, "primal infeasibility at " + index_text(z.index_at(i)));
            break;
        }
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] * w[i] != 0) {
            fail(4, "multiplier violates sign or support at " + index_text(u.index_at(i)));
            break;
        }
    }
    const DenseTensor diff = subtract(z, u);
    if (inner_product(diff, contract(inst.m, diff)) > 0)
        fail(5, "<z* - u*, M(z* - u*)> is positive");
    return rep;
}

Solution solve_via_kkt_chain(const TLCPInstance& inst, const KKTCertificate& cert,
                             const ClassifyOptions& opt) {
    KKTReport rep = verify_kkt(inst, cert);
    if (!rep.ok) throw KKTInvalidError("solve_via_kkt_chain: " + rep.detail);
    Verdict cs = is_column_sufficient(inst.m, opt);
    if (!cs.holds)
        throw NotColumnSufficientError("solve_via_kkt_chain: M is not column sufficient");

    const DenseTensor& z = cert.z_star;
    const DenseTensor& u = cert.u_star;
    const DenseTensor w = add(contract(inst.m, z), inst.q);
    const DenseTensor dzu = subtract(z, u);
    const DenseTensor mdzu = contract(inst.m, dzu);

    // Each step is implied by the certificate and column sufficiency; a
    // failure here is a bug, not bad input.
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] * mdzu[i] > 0)
            throw ChainViolatedError("chain step 1: z* o M(z* - u*) has a positive component");
        if (u[i] * mdzu[i] < 0)
            throw ChainViolatedError("chain step 2: u* o M(z* - u*) has a negative component");
        if (dzu[i] * mdzu[i] > 0)
            throw ChainViolatedError(
                "chain step 3: (z* - u*) o M(z* - u*) has a positive component");
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (dzu[i] * mdzu[i] != 0)
            throw ChainViolatedError(
                "chain step 4: column sufficiency failed to zero the products");
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] * w[i] != 0)
            throw ChainViolatedError("chain step 5: z* o (Mz* + q) nonzero at " +
                                     index_text(z.index_at(i)));
    }
    VerifyResult check = verify_solution(inst, z);
    if (!check.ok) throw ChainViolatedError("chain step 6: " + check.violation);
    return Solution{z, w};
}

} // namespace tlcp
