#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qchar/char_ring.hpp"
#include "test_util.hpp"

using namespace qchar;

namespace {

LaurentPoly P(const std::vector<std::pair<ExponentVector, Rational>>& terms, int n) {
    return LaurentPoly::make(terms, n);
}

}  // namespace

TEST_CASE("is_in_Jn") {
    CHECK(static_cast<bool>(is_in_Jn(P({{{1, 0}, 1}, {{0, 1}, 1}}, 2))));
    CHECK(static_cast<bool>(is_in_Jn(LaurentPoly::one(2))));
    CHECK(static_cast<bool>(is_in_Jn(P({{{3, 1}, 1}, {{2, 2}, 2}, {{1, 3}, 1}}, 2))));

    const MembershipResult sq = is_in_Jn(P({{{2, 2}, 1}}, 2));
    CHECK_FALSE(sq.member);
    CHECK(sq.reason == "t-dependence t^4 on wall (1,2)");

    const MembershipResult asym = is_in_Jn(LaurentPoly::variable(2, 0));
    CHECK_FALSE(asym.member);
    CHECK(asym.reason == "not symmetric under swap of x1,x2");

    CHECK_THROWS_AS(is_in_Jn(P({{{Frac(1, 2), Frac(1, 2)}, 1}}, 2)), DomainError);

    // n < 2: no wall, every (symmetric) polynomial qualifies
    CHECK(static_cast<bool>(is_in_Jn(P({{{-4}, 3}}, 1))));
    CHECK(static_cast<bool>(is_in_Jn(LaurentPoly::constant(0, Rational(5)))));
}

TEST_CASE("ev") {
    CHECK(ev(P({{{1, 0}, 1}, {{0, 1}, 1}}, 2)).is_zero());

    const LaurentPoly sym3 = P({{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}, 3);
    CHECK(ev(sym3) == LaurentPoly::variable(1, 0));

    // the worked example: ev(p_{(3,1,0,0),4}) = p_{(3,1),2}
    CHECK(ev(schur_p({3, 1, 0, 0})) == schur_p({3, 1}));

    CHECK_THROWS_AS(ev(LaurentPoly::variable(2, 0)), DomainError);       // not in J_n
    CHECK_THROWS_AS(ev(LaurentPoly::variable(1, 0)), DomainError);       // n < 2
    CHECK_THROWS_AS(ev(P({{{2, 2}, 1}}, 2)), DomainError);               // t-dependent
}

TEST_CASE("lift_weight") {
    CHECK(lift_weight({3, 1}) == Weight{3, 1, 0, 0});
    CHECK(lift_weight({2, -1}) == Weight{2, 0, 0, -1});
    CHECK(lift_weight({}) == Weight{0, 0});
    CHECK(lift_weight({1, 0}) == Weight{1, 0, 0, 0});
    CHECK_THROWS_AS(lift_weight({1, 1}), DomainError);
}

TEST_CASE("ev after lift is the identity on the P-basis") {
    for (int n = 2; n <= 4; ++n)
        for (const Weight& mu : lambda_n_weights(n - 2, -2, 2))
            CHECK(ev(schur_p(lift_weight(mu))) == schur_p(mu));
}

TEST_CASE("decompose_p frozen examples") {
    const LaurentPoly x1 = LaurentPoly::variable(2, 0);
    const LaurentPoly x2 = LaurentPoly::variable(2, 1);

    const PBasisExpansion sq = decompose_p((x1 + x2) * (x1 + x2));
    REQUIRE(sq.coefficients.size() == 1);
    CHECK(sq.coefficients.at({2, 0}) == 1);

    const PBasisExpansion k = decompose_p(x1 * x2 * (x1 + x2) * (x1 + x2));
    REQUIRE(k.coefficients.size() == 1);
    CHECK(k.coefficients.at({3, 1}) == 1);

    CHECK(decompose_p(LaurentPoly::zero(2)).coefficients.empty());
    CHECK_THROWS_AS(decompose_p(P({{{2, 2}, 1}}, 2)), DomainError);
}

TEST_CASE("decompose_p at n=1 and n=0") {
    const PBasisExpansion one_var = decompose_p(P({{{5}, 2}, {{-3}, Rational(1, 3)}}, 1));
    REQUIRE(one_var.coefficients.size() == 2);
    CHECK(one_var.coefficients.at({5}) == 2);
    CHECK(one_var.coefficients.at({-3}) == Rational(1, 3));

    const PBasisExpansion c = decompose_p(LaurentPoly::constant(0, Rational(7, 2)));
    REQUIRE(c.coefficients.size() == 1);
    CHECK(c.coefficients.at({}) == Rational(7, 2));
}

TEST_CASE("decompose_p roundtrip on random combinations") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        std::uniform_int_distribution<int> nd(1, 3);
        const int n = nd(rng);
        std::map<Weight, Rational> combo;
        std::uniform_int_distribution<int> kd(1, 4);
        const int k = kd(rng);
        for (int t = 0; t < k; ++t) combo[testing::random_lambda(rng, n, -3, 3)] = testing::random_rational(rng);
        LaurentPoly f(n);
        for (const auto& [w, c] : combo) f += c * schur_p(w);
        const PBasisExpansion got = decompose_p(f);
        CHECK(got.coefficients == combo);
        CHECK(reconstruct(got) == f);
    }
}

TEST_CASE("products of P-functions stay in the ring and decompose") {
    std::mt19937 rng(29);
    for (int rep = 0; rep < 8; ++rep) {
        const int n = 2 + rep % 2;
        const LaurentPoly f = schur_p(testing::random_lambda(rng, n, -2, 2)) *
                              schur_p(testing::random_lambda(rng, n, -2, 2));
        CHECK(static_cast<bool>(is_in_Jn(f)));
        CHECK(reconstruct(decompose_p(f)) == f);
    }
}

TEST_CASE("decompose_p normalizes the basis") {
    for (const Weight& lambda : lambda_n_weights(2, -2, 2)) {
        const PBasisExpansion e = decompose_p(schur_p(lambda));
        REQUIRE(e.coefficients.size() == 1);
        CHECK(e.coefficients.at(lambda) == 1);
    }
}

TEST_CASE("linear-solve fallback path") {
    const LaurentPoly target = Rational(2) * schur_p({2, 0}) + Rational(5) * schur_p({0, 0});
    const auto got = detail::solve_p_combination(target, {Weight{2, 0}, Weight{0, 0}, Weight{1, 0}});
    REQUIRE(got.has_value());
    CHECK(got->size() == 2);
    CHECK(got->at({2, 0}) == 2);
    CHECK(got->at({0, 0}) == 5);

    // x1^2 alone is not in span{p_(2,0)}
    const auto missing = detail::solve_p_combination(LaurentPoly::variable(2, 0) * LaurentPoly::variable(2, 0),
                                                     {Weight{2, 0}});
    CHECK_FALSE(missing.has_value());
}

TEST_CASE("kernel membership and factorization") {
    const LaurentPoly x1 = LaurentPoly::variable(2, 0);
    const LaurentPoly x2 = LaurentPoly::variable(2, 1);

    const LaurentPoly f = x1 * x2 * (x1 + x2) * (x1 + x2);
    CHECK(is_in_kernel(f));
    const KernelFactorization kf = kernel_decompose(f);
    REQUIRE(kf.s_coefficients.size() == 1);
    CHECK(kf.s_coefficients.at({2, 1}) == 1);
    CHECK(reconstruct(kf) == f);

    const LaurentPoly g = x1 + x2;
    CHECK(is_in_kernel(g));
    const KernelFactorization kg = kernel_decompose(g);
    REQUIRE(kg.s_coefficients.size() == 1);
    CHECK(kg.s_coefficients.at({0, 0}) == 1);

    const LaurentPoly sym3 = P({{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}, 3);
    CHECK_FALSE(is_in_kernel(sym3));
    CHECK_THROWS_AS(kernel_decompose(sym3), DomainError);

    CHECK(kernel_decompose(LaurentPoly::zero(2)).s_coefficients.empty());
}

TEST_CASE("kernel factorization reconstructs on random kernel elements") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 2 + rep % 2;
        LaurentPoly g(n);
        std::uniform_int_distribution<int> kd(1, 3);
        for (int t = 0, k = kd(rng); t < k; ++t) {
            GeneralWeight mu(n);
            std::uniform_int_distribution<int> e(-2, 2);
            for (int i = 0; i < n; ++i) mu[i] = e(rng);
            std::sort(mu.rbegin(), mu.rend());
            g += testing::random_rational(rng) * schur_s(mu);
        }
        const LaurentPoly f = odd_product(n) * g;
        CHECK(is_in_kernel(f));
        CHECK(reconstruct(kernel_decompose(f)) == f);
    }
}

TEST_CASE("exactness in the middle: f decomposes as image plus kernel") {
    std::mt19937 rng(37);
    for (int rep = 0; rep < 6; ++rep) {
        const int n = 2 + rep % 2;
        LaurentPoly f(n);
        for (int t = 0; t < 3; ++t)
            f += testing::random_rational(rng) * schur_p(testing::random_lambda(rng, n, -2, 2));
        const PBasisExpansion down = decompose_p(ev(f));
        LaurentPoly lifted(n);
        for (const auto& [mu, c] : down.coefficients) lifted += c * schur_p(lift_weight(mu));
        const LaurentPoly k = f - lifted;
        CHECK(is_in_kernel(k));
        CHECK(reconstruct(kernel_decompose(k)) == k);
    }
}

TEST_CASE("is_polynomial_character") {
    CHECK(is_polynomial_character(P({{{1, 0}, 1}, {{0, 1}, 1}}, 2)));
    CHECK(is_polynomial_character(LaurentPoly::one(2)));
    CHECK_FALSE(is_polynomial_character(P({{{-1, 0}, 1}, {{0, -1}, 1}}, 2)));  // in J_2, negative exponents
    CHECK(static_cast<bool>(is_in_Jn(P({{{-1, 0}, 1}, {{0, -1}, 1}}, 2))));
    CHECK_FALSE(is_polynomial_character(LaurentPoly::variable(2, 0)));
    CHECK_FALSE(is_polynomial_character(P({{{Frac(1, 2), Frac(1, 2)}, 1}}, 2)));
}
