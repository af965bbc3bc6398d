#include "tlcp/polyhedron.hpp"

#include <algorithm>

#include "tlcp/errors.hpp"
#include "tlcp/linsys.hpp"

namespace tlcp {

namespace {

bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

bool satisfies_ineq(const Matrix& g, const Vec& h, const Vec& x) {
    for (int r = 0; r < g.rows(); ++r) {
        Rational s = 0;
        for (int c = 0; c < g.cols(); ++c) s += g(r, c) * x[c];
        if (s > h[r]) return false;
    }
    return true;
}

void sort_dedupe(std::vector<Vec>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

} // namespace

std::vector<Vec> vertex_enumeration(const Matrix& g, const Vec& h, const Matrix& e, const Vec& f,
                                    int cap) {
    if (g.rows() != static_cast<int>(h.size()) || e.rows() != static_cast<int>(f.size()))
        throw ShapeMismatchError("vertex_enumeration: matrix and rhs disagree");
    const int d = g.cols() > 0 ? g.cols() : e.cols();
    if ((g.cols() > 0 && g.cols() != d) || (e.cols() > 0 && e.cols() != d))
        throw ShapeMismatchError("vertex_enumeration: ambient dimensions disagree");
    require_within_cap(static_cast<std::size_t>(d), cap);
    if (d == 0) return {};

    // Eliminate the equalities: x = x0 + V y with V a nullspace basis.
    Matrix eq = e.cols() > 0 ? e : Matrix(0, d);
    LinearSystemSolution sol = solve_linear_system(eq, f);
    if (!sol.consistent()) return {};
    const Vec& x0 = sol.particular;
    const int dr = static_cast<int>(sol.nullspace.size());

    if (dr == 0) {
        if (satisfies_ineq(g, h, x0)) return {x0};
        return {};
    }

    // Reduced inequalities (G V) y <= h - G x0.
    Matrix gr(g.rows(), dr);
    Vec hr(static_cast<std::size_t>(g.rows()));
    for (int r = 0; r < g.rows(); ++r) {
        Rational gx0 = 0;
        for (int c = 0; c < d; ++c) gx0 += g(r, c) * x0[c];
        hr[r] = h[r] - gx0;
        for (int j = 0; j < dr; ++j) {
            Rational s = 0;
            for (int c = 0; c < d; ++c) s += g(r, c) * sol.nullspace[j][c];
            gr(r, j) = s;
        }
    }

    // A vertex has dr active, linearly independent reduced rows.
    std::vector<Vec> vertices;
    if (g.rows() < dr) return {};
    std::vector<int> comb(static_cast<std::size_t>(dr));
    for (int i = 0; i < dr; ++i) comb[i] = i;
    for (;;) {
        Matrix a(dr, dr);
        Vec b(static_cast<std::size_t>(dr));
        for (int i = 0; i < dr; ++i) {
            for (int j = 0; j < dr; ++j) a(i, j) = gr(comb[i], j);
            b[i] = hr[comb[i]];
        }
        LinearSystemSolution basic = solve_linear_system(a, b);
        if (basic.kind == LinearSystemSolution::Kind::Unique) {
            bool ok = true;
            for (int r = 0; r < g.rows() && ok; ++r) {
                Rational s = 0;
                for (int j = 0; j < dr; ++j) s += gr(r, j) * basic.particular[j];
                if (s > hr[r]) ok = false;
            }
            if (ok) {
                Vec x = x0;
                for (int j = 0; j < dr; ++j)
                    for (int c = 0; c < d; ++c) x[c] += basic.particular[j] * sol.nullspace[j][c];
                vertices.push_back(std::move(x));
            }
        }
        // Next dr-combination of [0, g.rows()).
        int i = dr - 1;
        while (i >= 0 && comb[i] == g.rows() - dr + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < dr; ++j) comb[j] = comb[j - 1] + 1;
    }
    sort_dedupe(vertices);
    return vertices;
}

std::vector<Vec> recession_generators(const Matrix& g, const Matrix& e, int cap) {
    const int d = g.cols() > 0 ? g.cols() : e.cols();
    if ((g.cols() > 0 && g.cols() != d) || (e.cols() > 0 && e.cols() != d))
        throw ShapeMismatchError("recession_generators: ambient dimensions disagree");
    require_within_cap(static_cast<std::size_t>(d), cap);
    if (d == 0) return {};

    // Vertices of {G x <= 0, E x = 0} cut by the standard simplex.
    Matrix g2 = g.cols() > 0 ? g : Matrix(0, d);
    Vec h2(static_cast<std::size_t>(g2.rows()), Rational(0));
    for (int j = 0; j < d; ++j) {
        Vec row(static_cast<std::size_t>(d), Rational(0));
        row[j] = -1;
        g2.append_row(row);
        h2.push_back(Rational(0));
    }
    Matrix e2 = e.cols() > 0 ? e : Matrix(0, d);
    Vec f2(static_cast<std::size_t>(e2.rows()), Rational(0));
    e2.append_row(Vec(static_cast<std::size_t>(d), Rational(1)));
    f2.push_back(Rational(1));

    std::vector<Vec> gens = vertex_enumeration(g2, h2, e2, f2, cap);

    // Rescale each generator to a primitive integer vector.
    for (Vec& v : gens) {
        Integer l = 1;
        for (const Rational& x : v) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
        Integer gcd_all = 0;
        std::vector<Integer> ints(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            ints[i] = Integer(numerator(v[i])) * (l / Integer(denominator(v[i])));
            gcd_all = boost::multiprecision::gcd(gcd_all, ints[i]);
        }
        if (gcd_all == 0) gcd_all = 1;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(ints[i] / gcd_all);
    }
    sort_dedupe(gens);
    return gens;
}

} // namespace tlcp
