#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlcp/analysis.hpp"
#include "tlcp/errors.hpp"

#include "examples.hpp"

using namespace tlcp;
using namespace tlcp::examples;

namespace {

DenseTensor mat2(std::initializer_list<Rational> v) {
    DenseTensor t(cubical_shape(2, 2));
    std::size_t i = 0;
    for (const Rational& x : v) t[i++] = x;
    return t;
}

DenseTensor vec2(std::initializer_list<Rational> v) {
    DenseTensor t(cubical_shape(1, 2));
    std::size_t i = 0;
    for (const Rational& x : v) t[i++] = x;
    return t;
}

DenseTensor unit22(std::size_t flat) {
    DenseTensor t(cubical_shape(2, 2));
    t[flat] = 1;
    return t;
}

} // namespace

TEST_CASE("cross complementarity products") {
    TLCPInstance inst(csk_not_cs(), q22({0, 0, 0, 0}));
    auto [c1, c2] = cross_complementarity(inst, unit22(1), unit22(2));
    CHECK(c1 == 2);
    CHECK(c2 == 1);

    TLCPInstance pos(csk_not_cs(), q22({1, 1, 1, 1}));
    auto zz = cross_complementarity(pos, q22({0, 0, 0, 0}), q22({0, 0, 0, 0}));
    CHECK(zz.first == 0);
    CHECK(zz.second == 0);

    CHECK_THROWS_AS(cross_complementarity(inst, vec2({0, 0}), unit22(1)), ShapeMismatchError);
}

TEST_CASE("nonconvex solution set of the two-ray example") {
    TLCPInstance inst(csk_not_cs(), q22({0, 0, 0, 0}));
    ConvexityReport rep = check_convexity(inst);
    CHECK(rep.verdict == ConvexityReport::Verdict::NonConvex);
    CHECK_FALSE(rep.is_convex());
    CHECK(rep.piece_count == 9);
    CHECK(rep.vertex_generators == 1);
    CHECK(rep.ray_generators == 2);
    REQUIRE(rep.violating_pair.has_value());
    CHECK(rep.violating_pair->first == unit22(1));
    CHECK(rep.violating_pair->second == unit22(2));
    REQUIRE(rep.cross_values.has_value());
    CHECK(rep.cross_values->first == 2);
    CHECK(rep.cross_values->second == 1);
}

TEST_CASE("convexity verdicts on convex instances") {
    ConvexityReport single = check_convexity(TLCPInstance(cs_not_psd(), q22({1, 1, 1, 1})));
    CHECK(single.verdict == ConvexityReport::Verdict::Singleton);
    CHECK(single.is_convex());
    CHECK(single.piece_count == 1);
    CHECK(single.vertex_generators == 1);
    CHECK(single.ray_generators == 0);
    CHECK_FALSE(single.violating_pair.has_value());

    ConvexityReport empty =
        check_convexity(TLCPInstance(mat2({0, -1, 0, 0}), vec2({-1, 0})));
    CHECK(empty.verdict == ConvexityReport::Verdict::Empty);
    CHECK(empty.is_convex());
    CHECK(empty.piece_count == 0);

    // Unbounded but convex: the second component is free.
    ConvexityReport ray = check_convexity(TLCPInstance(mat2({0, 0, 0, 0}), vec2({1, 0})));
    CHECK(ray.verdict == ConvexityReport::Verdict::Convex);
    CHECK(ray.piece_count == 2);
    CHECK(ray.vertex_generators == 1);
    CHECK(ray.ray_generators == 1);

    // A segment of solutions: z1 + z2 = 1, z >= 0. Two vertex generators,
    // which also exercises the midpoint re-verification.
    ConvexityReport segment =
        check_convexity(TLCPInstance(mat2({1, 1, 1, 1}), vec2({-1, -1})));
    CHECK(segment.verdict == ConvexityReport::Verdict::Convex);
    CHECK(segment.piece_count == 3);
    CHECK(segment.vertex_generators == 2);
    CHECK(segment.ray_generators == 0);
}

TEST_CASE("nonconvexity witness for the two-ray example") {
    NonConvexWitness w = construct_nonconvex_witness(csk_not_cs());
    CHECK(w.q == q22({0, 0, 0, 0}));
    CHECK(w.x1 == unit22(1));
    CHECK(w.x2 == unit22(2));
    CHECK(w.cross_values.first == 2);
    CHECK(w.cross_values.second == 1);
    CHECK(w.strict_index == MultiIndex{1, 2});
    CHECK(w.generator == subtract(unit22(1), unit22(2)));

    TLCPInstance inst(csk_not_cs(), w.q);
    CHECK(verify_solution(inst, w.x1).ok);
    CHECK(verify_solution(inst, w.x2).ok);
}

TEST_CASE("nonconvexity witness for a classical matrix") {
    DenseTensor m = mat2({0, -1, 0, 0});
    NonConvexWitness w = construct_nonconvex_witness(m);
    CHECK(w.q == vec2({1, 0}));
    CHECK(w.x1 == vec2({1, 1}));
    CHECK(w.x2 == vec2({0, 0}));
    CHECK(w.cross_values.first == 1);
    CHECK(w.cross_values.second == 0);
    CHECK(w.strict_index == MultiIndex{1});
    CHECK(w.generator == vec2({1, 1}));
}

TEST_CASE("witness construction rejects column sufficient tensors") {
    CHECK_THROWS_AS(construct_nonconvex_witness(block_identity(2, 2)), NotApplicableError);
    CHECK_THROWS_AS(construct_nonconvex_witness(cs_not_psd()), NotApplicableError);
}

TEST_CASE("uniqueness at strictly positive q") {
    UniquenessResult u = check_uniqueness_positive_q(cs_not_psd(), q22({1, 1, 1, 1}));
    CHECK(u.kind == UniquenessResult::Kind::Unique);
    REQUIRE(u.solution.has_value());
    CHECK(*u.solution == q22({0, 0, 0, 0}));
    CHECK_FALSE(u.pair.has_value());

    // -z + 1 has the two solutions z = 0 and z = 1.
    DenseTensor m(cubical_shape(2, 1));
    m[0] = -1;
    DenseTensor q(cubical_shape(1, 1));
    q[0] = 1;
    UniquenessResult two = check_uniqueness_positive_q(m, q);
    CHECK(two.kind == UniquenessResult::Kind::Multiple);
    REQUIRE(two.pair.has_value());
    CHECK(two.pair->first[0] == 0);
    CHECK(two.pair->second[0] == 1);
    CHECK_FALSE(two.solution.has_value());

    CHECK_THROWS_AS(check_uniqueness_positive_q(cs_not_psd(), q22({1, 0, 1, 1})),
                    QNotStrictlyPositiveError);
    CHECK_THROWS_AS(check_uniqueness_positive_q(cs_not_psd(), q22({1, -1, 1, 1})),
                    QNotStrictlyPositiveError);
}

TEST_CASE("theorem harness on a small deterministic batch") {
    HarnessOptions opt;
    opt.seed = 1;
    opt.count = 3;
    HarnessReport rep = theorem_harness(opt);
    CHECK(rep.tensors == 3);
    CHECK(rep.ok());
    CHECK(rep.failures.empty());
    CHECK(rep.column_sufficient == 0);
    CHECK(rep.column_sufficient_on_nonneg == 0);
    CHECK(rep.p_class == 0);
    CHECK(rep.nondegenerate == 1);
    CHECK(rep.witness_constructions == 3);
    CHECK(rep.convexity_checks == 0);
    CHECK(rep.uniqueness_checks == 0);

    HarnessReport again = theorem_harness(opt);
    CHECK(again.nondegenerate == rep.nondegenerate);
    CHECK(again.witness_constructions == rep.witness_constructions);
    CHECK(again.failures == rep.failures);
}

TEST_CASE("theorem harness validates its options") {
    HarnessOptions bad;
    bad.count = -1;
    CHECK_THROWS_AS(theorem_harness(bad), Error);

    HarnessOptions swapped;
    swapped.entry_lo = 3;
    swapped.entry_hi = -3;
    CHECK_THROWS_AS(theorem_harness(swapped), Error);
}
