#pragma once

// Worked 4th-order tensors over n = 2 used across the test suites, named by
// the property pair they exhibit.

#include "tlcp/tensor.hpp"

namespace tlcp::examples {

// Orthant-restricted column sufficiency without full column sufficiency;
// its solution set at Q = O is a nonconvex union of two rays.
inline DenseTensor csk_not_cs() {
    return DenseTensor::with_entries(cubical_shape(4, 2),
                                     {{{1, 1, 1, 1}, 2},
                                      {{1, 2, 2, 1}, 2},
                                      {{2, 1, 1, 2}, 1},
                                      {{2, 1, 2, 2}, 2},
                                      {{2, 2, 1, 1}, 1},
                                      {{2, 2, 2, 2}, 1}});
}

// Column sufficient but indefinite.
inline DenseTensor cs_not_psd() {
    return DenseTensor::with_entries(cubical_shape(4, 2),
                                     {{{1, 1, 2, 1}, -2},
                                      {{2, 1, 1, 1}, 1},
                                      {{2, 2, 2, 2}, 1}});
}

// Orthant-restricted column sufficiency without copositivity.
inline DenseTensor csk_not_cop() {
    return DenseTensor::with_entries(cubical_shape(4, 2),
                                     {{{1, 1, 1, 2}, -10},
                                      {{1, 2, 1, 2}, 1},
                                      {{2, 1, 2, 2}, 1},
                                      {{2, 2, 1, 1}, 1}});
}

// Column sufficient but without the sign-reversal-free property.
inline DenseTensor cs_not_p() {
    return DenseTensor::with_entries(cubical_shape(4, 2),
                                     {{{1, 1, 1, 2}, -10},
                                      {{1, 2, 1, 1}, 1},
                                      {{1, 2, 1, 2}, 1},
                                      {{2, 1, 2, 2}, 1},
                                      {{2, 2, 2, 1}, -1}});
}

// Nondegenerate but not column sufficient.
inline DenseTensor nd_not_p() {
    return DenseTensor::with_entries(cubical_shape(4, 2),
                                     {{{1, 1, 1, 1}, 1},
                                      {{1, 1, 2, 2}, -1},
                                      {{1, 2, 1, 2}, 1},
                                      {{1, 2, 2, 1}, -1},
                                      {{2, 1, 1, 2}, -2},
                                      {{2, 1, 2, 1}, 1},
                                      {{2, 2, 1, 1}, -2},
                                      {{2, 2, 2, 2}, 1}});
}

inline DenseTensor q22(std::initializer_list<Rational> v) {
    DenseTensor t(cubical_shape(2, 2));
    std::size_t i = 0;
    for (const Rational& x : v) t[i++] = x;
    return t;
}

} // namespace tlcp::examples
