#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tlcp/matrix.hpp"
#include "tlcp/rational.hpp"

namespace tlcp {

// 1-based multi-index (i1, ..., im) into a tensor.
using MultiIndex = std::vector<int>;

// Tensor shape: an ordered list of positive dimensions. Order 0 (a scalar)
// is permitted; it arises when a mode product contracts away every index.
struct Shape {
    std::vector<int> dims;

    Shape() = default;
    explicit Shape(std::vector<int> d);

    int order() const { return static_cast<int>(dims.size()); }
    std::size_t element_count() const;

    // True when every dimension equals the first (vacuously true for order 0).
    bool is_cubical() const;
    // Common dimension of a cubical shape; throws ShapeMismatchError otherwise.
    int side() const;

    bool operator==(const Shape&) const = default;
};

// Cubical shape with `order` copies of `n`.
Shape cubical_shape(int order, int n);

// Dense rational tensor in row-major layout: the last index varies fastest,
// so for shape (d1, ..., dm) the flat position of (i1, ..., im) is
// sum_k (i_k - 1) * prod_{j > k} d_j.
class DenseTensor {
public:
    explicit DenseTensor(Shape shape, const Rational& fill = Rational(0));

    // Builds a tensor equal to `fill` everywhere except the listed entries.
    // Throws IndexOutOfRangeError / DuplicateIndexError.
    static DenseTensor with_entries(Shape shape,
                                    const std::vector<std::pair<MultiIndex, Rational>>& entries,
                                    const Rational& fill = Rational(0));

    const Shape& shape() const { return shape_; }
    int order() const { return shape_.order(); }
    std::size_t size() const { return e_.size(); }

    // Flat position of a 1-based multi-index; throws IndexOutOfRangeError.
    std::size_t position(const MultiIndex& idx) const;
    // Inverse of position().
    MultiIndex index_at(std::size_t flat) const;

    Rational& at(const MultiIndex& idx) { return e_[position(idx)]; }
    const Rational& at(const MultiIndex& idx) const { return e_[position(idx)]; }

    Rational& operator[](std::size_t flat) { return e_[flat]; }
    const Rational& operator[](std::size_t flat) const { return e_[flat]; }

    std::span<const Rational> entries() const { return e_; }

    bool operator==(const DenseTensor&) const = default;

private:
    Shape shape_;
    std::vector<Rational> e_;
};

// Elementwise algebra. All binary ops require identical shapes.
DenseTensor add(const DenseTensor& a, const DenseTensor& b);
DenseTensor subtract(const DenseTensor& a, const DenseTensor& b);
DenseTensor scale(const Rational& c, const DenseTensor& a);
DenseTensor elementwise_max(const DenseTensor& a, const DenseTensor& b);
DenseTensor positive_part(const DenseTensor& a);  // max(a, 0)
DenseTensor negative_part(const DenseTensor& a);  // max(-a, 0); a = pos - neg
Rational inner_product(const DenseTensor& a, const DenseTensor& b);
Rational norm_squared(const DenseTensor& a);

bool is_nonnegative(const DenseTensor& a);
bool is_positive(const DenseTensor& a);
bool is_zero(const DenseTensor& a);

// Mode product of M (order m') with N (order p) over the strictly increasing
// 1-based mode positions J = (j1 < ... < jp), each <= m'. Every mode jl of M
// is contracted against mode l of N; the result keeps the remaining modes of
// M in their original relative order:
//
//   (M x_J N)[remaining] = sum_{k1..kp} M[... k_l at position j_l ...] * N[k1..kp]
//
// Dimensions must match position-wise. With p = m' the result has order 0 and
// equals inner_product(M, N) when J covers every mode.
DenseTensor jp_mode_product(const DenseTensor& m, const DenseTensor& n,
                            const std::vector<int>& modes);

// Contraction of M in R^[2m,n] against Z in R^[m,n] over M's trailing m
// modes: contract(M, Z)[i] = sum_j M[i j] Z[j]. Linear in Z, and equal to
// the mode product over J = (m+1, ..., 2m).
DenseTensor contract(const DenseTensor& m, const DenseTensor& z);

// Validates that (M, Z) form an acting pair: M cubical of even order 2m with
// side n, Z cubical of order m with side n. Throws NotEvenOrderError or
// ShapeMismatchError.
void require_acting_pair(const DenseTensor& m, const DenseTensor& z);

// flatten(M)[pos(i), pos(j)] = M[i j]; an N x N matrix with N = n^m. Because
// positions are row-major on both sides, the matrix is M's entry array
// reinterpreted, and flatten(M) * vectorize(Z) = vectorize(contract(M, Z)).
Matrix flatten(const DenseTensor& m);

Vec vectorize(const DenseTensor& z);
DenseTensor unvectorize(std::span<const Rational> v, int order, int n);

// M[i j] == M[j i] for all multi-index blocks, i.e. flatten(M) symmetric.
bool is_block_symmetric(const DenseTensor& m);

// Restriction of every index to [1, k]; throws KOutOfRangeError.
DenseTensor sequential_principal_subtensor(const DenseTensor& a, int k);

// Identity of the acting pair: contract(block_identity(m, n), Z) = Z.
DenseTensor block_identity(int m, int n);

} // namespace tlcp
