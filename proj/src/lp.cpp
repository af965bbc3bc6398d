// Exact two-phase primal simplex.
//
// The program is brought to standard form min c.y, R y = rhs, y >= 0 by
// splitting every variable into a difference of nonnegative parts and adding
// one slack per inequality; bounds become inequality rows first. Phase 1
// minimizes the sum of one artificial per row. Pivoting follows Bland's
// rule throughout (smallest eligible entering index; ratio ties broken by
// smallest basic index), which terminates without any non-degeneracy
// assumption and makes the returned basis, point and ray deterministic.

#include "tlcp/lp.hpp"

#include <string>
#include <utility>

#include "tlcp/errors.hpp"

namespace tlcp {

LinearProgram LinearProgram::in_dimension(int d) {
    if (d < 0) throw ShapeMismatchError("lp: negative dimension");
    LinearProgram p;
    p.dim_ = d;
    p.ineq_lhs = Matrix(0, d);
    p.eq_lhs = Matrix(0, d);
    p.lower.resize(static_cast<std::size_t>(d));
    p.upper.resize(static_cast<std::size_t>(d));
    return p;
}

void LinearProgram::add_le(Vec row, Rational rhs) {
    if (row.size() != static_cast<std::size_t>(dim_))
        throw ShapeMismatchError("lp: constraint row has wrong length");
    ineq_lhs.append_row(row);
    ineq_rhs.push_back(std::move(rhs));
}

void LinearProgram::add_ge(Vec row, Rational rhs) {
    for (auto& x : row) x = -x;
    add_le(std::move(row), -rhs);
}

void LinearProgram::add_eq(Vec row, Rational rhs) {
    if (row.size() != static_cast<std::size_t>(dim_))
        throw ShapeMismatchError("lp: constraint row has wrong length");
    eq_lhs.append_row(row);
    eq_rhs.push_back(std::move(rhs));
}

namespace {

struct Tableau {
    std::vector<Vec> t;      // rows x (cols + 1); last column is the rhs
    std::vector<int> basis;  // basis[i] = column basic in row i

    int rows() const { return static_cast<int>(t.size()); }
};

void pivot(Tableau& tb, int r, int c) {
    Vec& prow = tb.t[r];
    const Rational piv = prow[c];
    for (auto& x : prow) x /= piv;
    for (int i = 0; i < tb.rows(); ++i) {
        if (i == r) continue;
        const Rational f = tb.t[i][c];
        if (f == 0) continue;
        Vec& row = tb.t[i];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (prow[j] != 0) row[j] -= f * prow[j];
        }
    }
    tb.basis[r] = c;
}

// cost is indexed by column id; columns [0, eligible) may enter.
// Returns the entering column on unboundedness, -1 at optimality.
int bland(Tableau& tb, const Vec& cost, int eligible) {
    for (;;) {
        int enter = -1;
        for (int j = 0; j < eligible; ++j) {
            Rational reduced = cost[j];
            for (int i = 0; i < tb.rows(); ++i) {
                const Rational& cb = cost[tb.basis[i]];
                if (cb != 0 && tb.t[i][j] != 0) reduced -= cb * tb.t[i][j];
            }
            if (reduced < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return -1;

        int leave = -1;
        Rational best;
        for (int i = 0; i < tb.rows(); ++i) {
            const Rational& a = tb.t[i][enter];
            if (a <= 0) continue;
            Rational ratio = tb.t[i].back() / a;
            if (leave < 0 || ratio < best ||
                (ratio == best && tb.basis[i] < tb.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) return enter;
        pivot(tb, leave, enter);
    }
}

} // namespace

LPOutcome lp_solve(const LinearProgram& p) {
    const int d = p.dimension();
    if (!p.objective.empty() && p.objective.size() != static_cast<std::size_t>(d))
        throw ShapeMismatchError("lp: objective has wrong length");
    if (p.ineq_lhs.rows() != static_cast<int>(p.ineq_rhs.size()) ||
        p.eq_lhs.rows() != static_cast<int>(p.eq_rhs.size()))
        throw ShapeMismatchError("lp: constraint matrix and rhs disagree");
    if ((p.ineq_lhs.rows() > 0 && p.ineq_lhs.cols() != d) ||
        (p.eq_lhs.rows() > 0 && p.eq_lhs.cols() != d))
        throw ShapeMismatchError("lp: constraint row length disagrees with dimension");
    if ((!p.lower.empty() && p.lower.size() != static_cast<std::size_t>(d)) ||
        (!p.upper.empty() && p.upper.size() != static_cast<std::size_t>(d)))
        throw ShapeMismatchError("lp: bounds have wrong length");

    // Bounds as inequality rows.
    Matrix g = p.ineq_lhs;
    Vec h = p.ineq_rhs;
    auto bound_row = [&](int var, bool upper_bound, const Rational& value) {
        Vec row(d, Rational(0));
        row[var] = upper_bound ? 1 : -1;
        g.append_row(row);
        h.push_back(upper_bound ? value : -value);
    };
    for (int j = 0; j < d; ++j) {
        if (!p.lower.empty() && p.lower[j]) bound_row(j, false, *p.lower[j]);
        if (!p.upper.empty() && p.upper[j]) bound_row(j, true, *p.upper[j]);
    }

    const int num_ineq = g.rows();
    const int num_rows = num_ineq + p.eq_lhs.rows();
    const int k = 2 * d + num_ineq;  // u, v, slacks

    // Rows [R | artificials | rhs] with rhs >= 0.
    Tableau tb;
    tb.t.assign(num_rows, Vec(static_cast<std::size_t>(k + num_rows) + 1, Rational(0)));
    tb.basis.resize(num_rows);
    for (int r = 0; r < num_rows; ++r) {
        Vec& row = tb.t[r];
        const bool ineq = r < num_ineq;
        Rational rhs = ineq ? h[r] : p.eq_rhs[r - num_ineq];
        for (int j = 0; j < d; ++j) {
            const Rational& a = ineq ? g(r, j) : p.eq_lhs(r - num_ineq, j);
            row[j] = a;
            row[d + j] = -a;
        }
        if (ineq) row[2 * d + r] = 1;
        row.back() = rhs;
        if (rhs < 0) {
            for (auto& x : row) x = -x;
        }
        row[k + r] = 1;
        tb.basis[r] = k + r;
    }

    // Phase 1.
    Vec cost1(static_cast<std::size_t>(k + num_rows), Rational(0));
    for (int r = 0; r < num_rows; ++r) cost1[k + r] = 1;
    if (bland(tb, cost1, k) >= 0)
        throw InternalInconsistencyError("lp: phase 1 reported unbounded");

    Rational infeas = 0;
    for (int r = 0; r < tb.rows(); ++r) {
        if (tb.basis[r] >= k) infeas += tb.t[r].back();
    }
    if (infeas != 0) return {LPOutcome::Kind::Infeasible, {}, Rational(0), {}};

    // Drive remaining artificials out of the basis; drop redundant rows.
    for (int r = 0; r < tb.rows();) {
        if (tb.basis[r] < k) {
            ++r;
            continue;
        }
        int c = -1;
        for (int j = 0; j < k; ++j) {
            if (tb.t[r][j] != 0) {
                c = j;
                break;
            }
        }
        if (c >= 0) {
            pivot(tb, r, c);
            ++r;
        } else {
            tb.t.erase(tb.t.begin() + r);
            tb.basis.erase(tb.basis.begin() + r);
        }
    }

    // Phase 2 on the real columns.
    for (auto& row : tb.t) row.erase(row.begin() + k, row.end() - 1);
    Vec cost2(static_cast<std::size_t>(k), Rational(0));
    for (int j = 0; j < d && !p.objective.empty(); ++j) {
        cost2[j] = p.objective[j];
        cost2[d + j] = -p.objective[j];
    }
    int unbounded_col = bland(tb, cost2, k);

    auto current_point = [&]() {
        Vec y(static_cast<std::size_t>(k), Rational(0));
        for (int r = 0; r < tb.rows(); ++r) y[tb.basis[r]] = tb.t[r].back();
        Vec x(static_cast<std::size_t>(d), Rational(0));
        for (int j = 0; j < d; ++j) x[j] = y[j] - y[d + j];
        return x;
    };

    if (unbounded_col >= 0) {
        LPOutcome out;
        out.kind = LPOutcome::Kind::Unbounded;
        out.point = current_point();
        Vec dy(static_cast<std::size_t>(k), Rational(0));
        dy[unbounded_col] = 1;
        for (int r = 0; r < tb.rows(); ++r) dy[tb.basis[r]] = -tb.t[r][unbounded_col];
        out.ray.assign(static_cast<std::size_t>(d), Rational(0));
        for (int j = 0; j < d; ++j) out.ray[j] = dy[j] - dy[d + j];
        return out;
    }

    LPOutcome out;
    out.kind = LPOutcome::Kind::Optimal;
    out.point = current_point();
    out.value = 0;
    for (int j = 0; j < d && !p.objective.empty(); ++j) out.value += p.objective[j] * out.point[j];
    return out;
}

} // namespace tlcp
