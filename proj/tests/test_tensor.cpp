#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlcp/errors.hpp"
#include "tlcp/random.hpp"
#include "tlcp/tensor.hpp"

using namespace tlcp;

namespace {

DenseTensor example_csk_not_cs() {
    return DenseTensor::with_entries(cubical_shape(4, 2),
                                     {{{1, 1, 1, 1}, 2},
                                      {{1, 2, 2, 1}, 2},
                                      {{2, 1, 1, 2}, 1},
                                      {{2, 1, 2, 2}, 2},
                                      {{2, 2, 1, 1}, 1},
                                      {{2, 2, 2, 2}, 1}});
}

} // namespace

TEST_CASE("shape basics") {
    Shape s({2, 3, 4});
    CHECK(s.order() == 3);
    CHECK(s.element_count() == 24);
    CHECK_FALSE(s.is_cubical());
    CHECK(cubical_shape(4, 2).is_cubical());
    CHECK(cubical_shape(4, 2).side() == 2);
    CHECK_THROWS_AS(s.side(), ShapeMismatchError);
    CHECK(Shape().order() == 0);
    CHECK(Shape().element_count() == 1);
    CHECK(Shape().is_cubical());
    CHECK_THROWS_AS(Shape({2, 0}), ShapeMismatchError);
}

TEST_CASE("row-major positions") {
    DenseTensor t(Shape({2, 3, 4}));
    CHECK(t.position({1, 1, 1}) == 0);
    CHECK(t.position({1, 1, 2}) == 1);
    CHECK(t.position({1, 2, 1}) == 4);
    CHECK(t.position({2, 1, 1}) == 12);
    CHECK(t.position({2, 3, 4}) == 23);
    for (std::size_t p = 0; p < t.size(); ++p) CHECK(t.position(t.index_at(p)) == p);
    CHECK_THROWS_AS(t.position({0, 1, 1}), IndexOutOfRangeError);
    CHECK_THROWS_AS(t.position({1, 4, 1}), IndexOutOfRangeError);
    CHECK_THROWS_AS(t.position({1, 1}), IndexOutOfRangeError);
}

TEST_CASE("with_entries rejects duplicates and bad indices") {
    Shape s = cubical_shape(2, 2);
    CHECK_THROWS_AS(DenseTensor::with_entries(s, {{{1, 1}, 1}, {{1, 1}, 2}}),
                    DuplicateIndexError);
    CHECK_THROWS_AS(DenseTensor::with_entries(s, {{{3, 1}, 1}}), IndexOutOfRangeError);
    DenseTensor t = DenseTensor::with_entries(s, {{{2, 1}, Rational(1, 3)}}, Rational(7));
    CHECK(t.at({2, 1}) == Rational(1, 3));
    CHECK(t.at({1, 1}) == 7);
}

TEST_CASE("elementwise algebra and split parts") {
    std::mt19937_64 rng = rng_for(11, 0);
    DenseTensor a = random_integer_tensor(rng, Shape({2, 3}), -5, 5);
    DenseTensor b = random_integer_tensor(rng, Shape({2, 3}), -5, 5);
    DenseTensor sum = add(a, b);
    CHECK(subtract(sum, b) == a);
    CHECK(scale(Rational(-2), a) == subtract(DenseTensor(a.shape()), add(a, a)));

    DenseTensor pos = positive_part(a);
    DenseTensor neg = negative_part(a);
    CHECK(subtract(pos, neg) == a);
    CHECK(is_nonnegative(pos));
    CHECK(is_nonnegative(neg));
    for (std::size_t p = 0; p < a.size(); ++p) CHECK(pos[p] * neg[p] == 0);
    CHECK(elementwise_max(a, a) == a);

    CHECK_THROWS_AS(add(a, DenseTensor(Shape({3, 2}))), ShapeMismatchError);
}

TEST_CASE("inner product and norm") {
    DenseTensor a = DenseTensor::with_entries(Shape({2, 2}), {{{1, 1}, 3}, {{2, 2}, -2}});
    DenseTensor b = DenseTensor::with_entries(Shape({2, 2}), {{{1, 1}, Rational(1, 3)}, {{2, 1}, 9}});
    CHECK(inner_product(a, b) == 1);
    CHECK(norm_squared(a) == 13);
    CHECK(is_zero(DenseTensor(Shape({2, 2}))));
    CHECK_FALSE(is_zero(a));
    CHECK(is_positive(DenseTensor(Shape({2, 2}), 1)));
    CHECK_FALSE(is_positive(positive_part(a)));
}

TEST_CASE("mode product validation") {
    DenseTensor m(Shape({2, 3}));
    DenseTensor v(Shape({3}));
    CHECK_THROWS_AS(jp_mode_product(m, v, {}), InvalidModeSetError);
    CHECK_THROWS_AS(jp_mode_product(m, v, {2, 2}), InvalidModeSetError);
    CHECK_THROWS_AS(jp_mode_product(m, v, {2, 1}), InvalidModeSetError);
    CHECK_THROWS_AS(jp_mode_product(m, v, {3}), InvalidModeSetError);
    CHECK_THROWS_AS(jp_mode_product(m, v, {1}), ShapeMismatchError);
    CHECK_THROWS_AS(jp_mode_product(m, DenseTensor(Shape({3, 2})), {1}), InvalidModeSetError);
}

TEST_CASE("mode product contracts the chosen modes") {
    // m[i][j] = 3(i-1) + j over shape (2,3)
    DenseTensor m(Shape({2, 3}));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j) m.at({i, j}) = 3 * (i - 1) + j;

    DenseTensor v(Shape({3}));
    v.at({1}) = 1;
    v.at({2}) = 0;
    v.at({3}) = 2;
    DenseTensor rows = jp_mode_product(m, v, {2});
    CHECK(rows.shape() == Shape({2}));
    CHECK(rows.at({1}) == 7);   // 1 + 2*3
    CHECK(rows.at({2}) == 16);  // 4 + 2*6

    DenseTensor u(Shape({2}));
    u.at({1}) = 1;
    u.at({2}) = -1;
    DenseTensor cols = jp_mode_product(m, u, {1});
    CHECK(cols.shape() == Shape({3}));
    CHECK(cols.at({1}) == -3);
    CHECK(cols.at({3}) == -3);

    DenseTensor full = jp_mode_product(m, m, {1, 2});
    CHECK(full.order() == 0);
    CHECK(full[0] == inner_product(m, m));
}

TEST_CASE("contract equals the trailing-half mode product") {
    std::mt19937_64 rng = rng_for(12, 0);
    DenseTensor m = random_integer_tensor(rng, cubical_shape(4, 3), -4, 4);
    DenseTensor z = random_integer_tensor(rng, cubical_shape(2, 3), -4, 4);
    CHECK(contract(m, z) == jp_mode_product(m, z, {3, 4}));
}

TEST_CASE("contract on the worked tensor") {
    DenseTensor a = example_csk_not_cs();
    DenseTensor ones(cubical_shape(2, 2), 1);
    DenseTensor y = contract(a, ones);
    CHECK(y.at({1, 1}) == 2);
    CHECK(y.at({1, 2}) == 2);
    CHECK(y.at({2, 1}) == 3);
    CHECK(y.at({2, 2}) == 2);
}

TEST_CASE("acting pair validation") {
    CHECK_THROWS_AS(require_acting_pair(DenseTensor(cubical_shape(3, 2)),
                                        DenseTensor(cubical_shape(1, 2))),
                    NotEvenOrderError);
    CHECK_THROWS_AS(require_acting_pair(DenseTensor(cubical_shape(4, 2)),
                                        DenseTensor(cubical_shape(2, 3))),
                    ShapeMismatchError);
    CHECK_THROWS_AS(require_acting_pair(DenseTensor(Shape({2, 2, 2, 3})),
                                        DenseTensor(cubical_shape(2, 2))),
                    ShapeMismatchError);
    require_acting_pair(DenseTensor(cubical_shape(4, 2)), DenseTensor(cubical_shape(2, 2)));
}

TEST_CASE("flatten entries and matvec bridge") {
    DenseTensor a = example_csk_not_cs();
    Matrix fa = flatten(a);
    CHECK(fa.rows() == 4);
    CHECK(fa.cols() == 4);
    CHECK(fa(0, 0) == 2);
    CHECK(fa(1, 2) == 2);
    CHECK(fa(2, 1) == 1);
    CHECK(fa(2, 3) == 2);
    CHECK(fa(3, 0) == 1);
    CHECK(fa(3, 3) == 1);
    CHECK(fa(0, 1) == 0);

    CHECK_THROWS_AS(flatten(DenseTensor(cubical_shape(3, 2))), NotEvenOrderError);

    std::mt19937_64 rng = rng_for(13, 0);
    for (int trial = 0; trial < 8; ++trial) {
        const int m = 1 + trial % 2;
        const int n = 2 + trial % 3;
        DenseTensor mt = random_integer_tensor(rng, cubical_shape(2 * m, n), -6, 6);
        DenseTensor zt = random_integer_tensor(rng, cubical_shape(m, n), -6, 6);
        CHECK(matvec(flatten(mt), vectorize(zt)) == vectorize(contract(mt, zt)));
    }
}

TEST_CASE("vectorize round trip") {
    std::mt19937_64 rng = rng_for(14, 0);
    DenseTensor z = random_integer_tensor(rng, cubical_shape(3, 2), -9, 9);
    CHECK(unvectorize(vectorize(z), 3, 2) == z);
    CHECK_THROWS_AS(unvectorize(Vec{1, 2, 3}, 2, 2), ShapeMismatchError);
}

TEST_CASE("block symmetry") {
    CHECK(is_block_symmetric(block_identity(2, 2)));
    CHECK_FALSE(is_block_symmetric(example_csk_not_cs()));
    std::mt19937_64 rng = rng_for(15, 0);
    CHECK(is_block_symmetric(random_block_symmetric_psd(rng, 2, 2, -3, 3)));
}

TEST_CASE("sequential principal subtensor") {
    DenseTensor a = example_csk_not_cs();
    DenseTensor sub = sequential_principal_subtensor(a, 1);
    CHECK(sub.shape() == cubical_shape(4, 1));
    CHECK(sub.at({1, 1, 1, 1}) == 2);
    CHECK(sequential_principal_subtensor(a, 2) == a);
    CHECK_THROWS_AS(sequential_principal_subtensor(a, 0), KOutOfRangeError);
    CHECK_THROWS_AS(sequential_principal_subtensor(a, 3), KOutOfRangeError);
}

TEST_CASE("block identity acts as identity") {
    std::mt19937_64 rng = rng_for(16, 0);
    DenseTensor id = block_identity(2, 3);
    DenseTensor z = random_integer_tensor(rng, cubical_shape(2, 3), -9, 9);
    CHECK(contract(id, z) == z);
    CHECK(flatten(id) == Matrix::identity(9));
}
