#include "tlcp/linsys.hpp"

#include <string>

#include "tlcp/errors.hpp"

namespace tlcp {

namespace {

// Reduced row echelon form of [a | b]; returns pivot column of each row
// (-1 for zero rows). aug has a.cols() + extra columns.
std::vector<int> rref(Matrix& aug, int coeff_cols) {
    const int m = aug.rows();
    std::vector<int> pivot_col(m, -1);
    int row = 0;
    for (int col = 0; col < coeff_cols && row < m; ++col) {
        int p = -1;
        for (int r = row; r < m; ++r) {
            if (aug(r, col) != 0) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row) {
            for (int c = 0; c < aug.cols(); ++c) std::swap(aug(p, c), aug(row, c));
        }
        Rational inv = aug(row, col);
        for (int c = 0; c < aug.cols(); ++c) aug(row, c) /= inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || aug(r, col) == 0) continue;
            Rational f = aug(r, col);
            for (int c = 0; c < aug.cols(); ++c) aug(r, c) -= f * aug(row, c);
        }
        pivot_col[row] = col;
        ++row;
    }
    return pivot_col;
}

} // namespace

LinearSystemSolution solve_linear_system(const Matrix& a, const Vec& b) {
    if (static_cast<std::size_t>(a.rows()) != b.size())
        throw ShapeMismatchError("solve_linear_system: rhs length mismatch");
    const int m = a.rows();
    const int n = a.cols();
    Matrix aug(m, n + 1);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    std::vector<int> pivot_col = rref(aug, n);

    for (int r = 0; r < m; ++r) {
        if (pivot_col[r] < 0 || pivot_col[r] >= n) {
            // Row has no coefficient pivot; inconsistent if rhs survives.
            bool zero_row = true;
            for (int c = 0; c < n; ++c) {
                if (aug(r, c) != 0) {
                    zero_row = false;
                    break;
                }
            }
            if (zero_row && aug(r, n) != 0) return {LinearSystemSolution::Kind::Inconsistent, {}, {}};
        }
    }

    std::vector<int> col_pivot_row(n, -1);
    for (int r = 0; r < m; ++r) {
        if (pivot_col[r] >= 0) col_pivot_row[pivot_col[r]] = r;
    }

    Vec particular(n, Rational(0));
    for (int c = 0; c < n; ++c) {
        if (col_pivot_row[c] >= 0) particular[c] = aug(col_pivot_row[c], n);
    }

    std::vector<Vec> nullspace;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (col_pivot_row[free_col] >= 0) continue;
        Vec v(n, Rational(0));
        v[free_col] = 1;
        for (int c = 0; c < n; ++c) {
            if (col_pivot_row[c] >= 0) v[c] = -aug(col_pivot_row[c], free_col);
        }
        nullspace.push_back(std::move(v));
    }

    LinearSystemSolution out;
    out.kind = nullspace.empty() ? LinearSystemSolution::Kind::Unique
                                 : LinearSystemSolution::Kind::Affine;
    out.particular = std::move(particular);
    out.nullspace = std::move(nullspace);
    return out;
}

int rank(const Matrix& a) {
    Matrix work = a;
    std::vector<int> pivot_col = rref(work, a.cols());
    int r = 0;
    for (int p : pivot_col) {
        if (p >= 0) ++r;
    }
    return r;
}

Rational determinant(const Matrix& a) {
    if (a.rows() != a.cols()) throw ShapeMismatchError("determinant: matrix not square");
    const int n = a.rows();
    if (n == 0) return 1;
    Matrix w = a;
    Rational prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r) {
                if (w(r, k) != 0) {
                    p = r;
                    break;
                }
            }
            if (p < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(w(k, c), w(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

Rational principal_minor(const Matrix& a, const std::vector<int>& indices) {
    if (a.rows() != a.cols()) throw ShapeMismatchError("principal_minor: matrix not square");
    if (indices.empty()) throw EmptyIndexSetError("principal_minor: empty index set");
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] < 0 || indices[k] >= a.rows())
            throw IndexOutOfRangeError("principal_minor: index " + std::to_string(indices[k]) +
                                       " out of range");
        if (k > 0 && indices[k] <= indices[k - 1])
            throw IndexOutOfRangeError("principal_minor: indices must be strictly increasing");
    }
    return determinant(submatrix(a, indices, indices));
}

} // namespace tlcp
