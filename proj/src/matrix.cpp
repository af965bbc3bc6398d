#include "tlcp/matrix.hpp"

#include "tlcp/errors.hpp"

namespace tlcp {

Matrix::Matrix(int rows, int cols, const Rational& fill)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, fill) {}

Matrix Matrix::identity(int n) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = 1;
    return a;
}

void Matrix::append_row(std::span<const Rational> row) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<std::size_t>(cols_) != row.size())
        throw ShapeMismatchError("append_row: length mismatch");
    e_.insert(e_.end(), row.begin(), row.end());
    ++rows_;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw ShapeMismatchError("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec matvec(const Matrix& a, std::span<const Rational> x) {
    if (static_cast<std::size_t>(a.cols()) != x.size())
        throw ShapeMismatchError("matvec: dimension mismatch");
    Vec y(a.rows(), Rational(0));
    for (int r = 0; r < a.rows(); ++r) {
        Rational s = 0;
        for (int c = 0; c < a.cols(); ++c) s += a(r, c) * x[c];
        y[r] = s;
    }
    return y;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
    return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatchError("matmul: dimension mismatch");
    Matrix p(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(r, k) == 0) continue;
            for (int c = 0; c < b.cols(); ++c) p(r, c) += a(r, k) * b(k, c);
        }
    return p;
}

Matrix symmetric_part(const Matrix& a) {
    if (a.rows() != a.cols()) throw ShapeMismatchError("symmetric_part: matrix not square");
    Matrix s(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) s(r, c) = (a(r, c) + a(c, r)) / 2;
    return s;
}

Matrix submatrix(const Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            s(static_cast<int>(r), static_cast<int>(c)) = a(rows[r], cols[c]);
    return s;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace tlcp
