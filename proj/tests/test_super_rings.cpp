#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qchar/super_rings.hpp"
#include "qchar/verify.hpp"
#include "test_util.hpp"

using namespace qchar;

namespace {

LaurentPoly P(const std::vector<std::pair<ExponentVector, Rational>>& terms, int n) {
    return LaurentPoly::make(terms, n);
}

const Frac h(1, 2);

LaurentPoly half_shift(int n) {  // (x1...xn)^(1/2)
    return P({{ExponentVector(n, h), 1}}, n);
}

}  // namespace

TEST_CASE("degree-zero rings") {
    CHECK_FALSE(is_in_ring(P({{{1, 0}, 1}, {{0, 1}, 1}}, 2), RingId::GroupPQ).member);

    const LaurentPoly deg0 = P({{{1, -1}, 1}, {{-1, 1}, 1}}, 2);  // x1/x2 + x2/x1
    CHECK(is_in_ring(deg0, RingId::GroupPQ).member);
    CHECK(is_in_ring(deg0, RingId::GroupPSQ).member);
    CHECK(is_in_ring(deg0, RingId::AlgebraPQ).member);

    // PQ == Q and degree 0
    CHECK(is_in_ring(deg0, RingId::GroupQ).member);
    CHECK_FALSE(is_in_ring(P({{{1, -1}, 1}}, 2), RingId::GroupPQ).member);  // degree 0 but asymmetric
}

TEST_CASE("half-integer category") {
    const LaurentPoly odd2 = odd_product(2);
    CHECK(is_in_ring(odd2 * half_shift(2), RingId::HalfIntegerCategory).member);
    CHECK_FALSE(is_in_ring(half_shift(2), RingId::HalfIntegerCategory).member);

    // mixed integer + half-integer member
    const LaurentPoly f = odd2 + odd2 * half_shift(2);
    CHECK(is_in_ring(f, RingId::HalfIntegerCategory).member);
    CHECK(is_in_ring(f, RingId::AlgebraQ).member);

    // class-0 part must itself be in J_n
    const LaurentPoly bad = P({{{2, 2}, 1}}, 2) + odd2 * half_shift(2);
    CHECK_FALSE(is_in_ring(bad, RingId::HalfIntegerCategory).member);

    // non-symmetric half-integer quotient
    const LaurentPoly asym = odd2 * P({{{Frac(3, 2), h}, 1}}, 2);
    CHECK_FALSE(is_in_ring(asym, RingId::HalfIntegerCategory).member);

    // a=1/3 belongs to the full algebra ring but not the half-integer category
    const LaurentPoly third = odd2 * P({{ExponentVector(2, Frac(1, 3)), 1}}, 2);
    CHECK_FALSE(is_in_ring(third, RingId::HalfIntegerCategory).member);
    CHECK(is_in_ring(third, RingId::AlgebraQ).member);
}

TEST_CASE("GroupQ and GroupSQ agree; AlgebraQ contains GroupQ") {
    for (int n = 2; n <= 3; ++n) {
        for (const LaurentPoly& f : jn_member_battery(n)) {
            CHECK(is_in_ring(f, RingId::GroupQ).member == is_in_ring(f, RingId::GroupSQ).member);
            CHECK(is_in_ring(f, RingId::AlgebraQ).member);
        }
        for (const LaurentPoly& f : jn_nonmember_battery(n))
            CHECK(is_in_ring(f, RingId::GroupQ).member == is_in_ring(f, RingId::GroupSQ).member);
    }
}

TEST_CASE("coset_split") {
    const LaurentPoly odd2 = odd_product(2);
    const LaurentPoly f = odd2 + odd2 * half_shift(2);
    const CosetDecomposition d = coset_split(f);
    CHECK(d.integer_part == odd2);
    REQUIRE(d.fractional_parts.size() == 1);
    CHECK(d.fractional_parts.at(h) == half_shift(2));
    CHECK(reconstruct(d) == f);

    // pure J_n input
    const CosetDecomposition pure = coset_split(odd2);
    CHECK(pure.integer_part == odd2);
    CHECK(pure.fractional_parts.empty());

    // a = 1/3
    const Frac third(1, 3);
    const LaurentPoly g = odd2 * P({{ExponentVector(2, third), 1}}, 2);
    const CosetDecomposition d3 = coset_split(g);
    CHECK(d3.integer_part.is_zero());
    REQUIRE(d3.fractional_parts.size() == 1);
    CHECK(d3.fractional_parts.at(third) == P({{ExponentVector(2, third), 1}}, 2));
    CHECK(reconstruct(d3) == g);

    CHECK_THROWS_AS(coset_split(half_shift(2)), NotInRingError);
    CHECK_THROWS_AS(coset_split(LaurentPoly::variable(2, 0)), NotInRingError);
}

TEST_CASE("coset_split then re-testing each part succeeds") {
    std::mt19937 rng(41);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 2 + rep % 2;
        const LaurentPoly odd = odd_product(n);
        LaurentPoly f(n);
        for (const Weight& w : {testing::random_lambda(rng, n, -2, 2), testing::random_lambda(rng, n, -2, 2)})
            f += testing::random_rational(rng) * schur_p(w);
        LaurentPoly sym(n);
        for (int t = 0; t < 2; ++t)
            sym += testing::random_rational(rng) * schur_p(testing::random_lambda(rng, n, -1, 1));
        f += odd * (P({{ExponentVector(n, h), 1}}, n) * sym);
        const CosetDecomposition d = coset_split(f);
        CHECK(reconstruct(d) == f);
        CHECK(static_cast<bool>(is_in_Jn(d.integer_part)));
        for (const auto& [cls, g] : d.fractional_parts) CHECK(is_symmetric(g));
    }
}

TEST_CASE("typical characters of half-integer weights live in the half-integer category") {
    const std::vector<RationalWeight> weights = {
        {Frac(3, 2), h},
        {Frac(5, 2), Frac(3, 2), h},
        {Frac(7, 2), h, Frac(-3, 2)},
        {h, Frac(-3, 2), Frac(-5, 2)},
    };
    for (const RationalWeight& lambda : weights) {
        const LaurentPoly ch = typical_char(lambda);
        const int n = static_cast<int>(lambda.size());
        CHECK(is_in_ring(ch, RingId::HalfIntegerCategory).member);
        const auto parts = coset_components(ch);
        REQUIRE(parts.size() == 1);
        CHECK(is_symmetric(exact_div(parts.at(h), odd_product(n))));
    }
}

TEST_CASE("mixed cosets propagate as errors") {
    const LaurentPoly mixed = P({{{h, 1}, 1}}, 2);
    CHECK_THROWS_AS(is_in_ring(mixed, RingId::AlgebraQ), MixedCosetError);
    CHECK_THROWS_AS(coset_split(mixed), MixedCosetError);
}
