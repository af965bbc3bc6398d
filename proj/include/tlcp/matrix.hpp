#pragma once

#include <span>
#include <vector>

#include "tlcp/rational.hpp"

namespace tlcp {

using Vec = std::vector<Rational>;

// Dense rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const Rational& fill = Rational(0));

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const {
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }

    // Appends one row; the length must match cols() (sets it on a 0-column
    // matrix).
    void append_row(std::span<const Rational> row);

    std::span<const Rational> entries() const { return e_; }

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> e_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vec matvec(const Matrix& a, std::span<const Rational> x);
Matrix transpose(const Matrix& a);
Matrix matmul(const Matrix& a, const Matrix& b);

// (A + A^T) / 2; requires square.
Matrix symmetric_part(const Matrix& a);

// Rows and columns selected by 0-based indices, in the given order.
Matrix submatrix(const Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols);

bool is_zero(const Vec& v);

} // namespace tlcp
