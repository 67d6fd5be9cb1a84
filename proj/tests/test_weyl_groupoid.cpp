#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qchar/schur.hpp"
#include "qchar/verify.hpp"
#include "qchar/weyl_groupoid.hpp"
#include "test_util.hpp"

using namespace qchar;

namespace {

LaurentPoly P(const std::vector<std::pair<ExponentVector, Rational>>& terms, int n) {
    return LaurentPoly::make(terms, n);
}

}  // namespace

TEST_CASE("build_groupoid counts") {
    const Groupoid g2 = build_groupoid(2);
    CHECK(g2.objects.size() == 3);  // two wall objects and [W]
    CHECK(g2.generators.size() == 5);  // r on each wall, s on each object

    const Groupoid g3 = build_groupoid(3);
    CHECK(g3.objects.size() == 7);  // 6 wall objects and [W]
    CHECK_THROWS_AS(build_groupoid(1), DomainError);
}

TEST_CASE("object labels and the permutation action") {
    const WallObject a{0, 1, +1};
    CHECK(object_label(GroupoidObject{a}) == "[e1-e2]");
    CHECK(object_label(GroupoidObject{a.opposite()}) == "[-(e1-e2)]");
    CHECK(object_label(GroupoidObject{BasePoint{}}) == "[W]");

    // the swap (1 2) sends [e1-e2] to [e2-e1] = [-(e1-e2)]
    const Permutation s = Permutation::transposition(2, 0, 1);
    CHECK(act(s, GroupoidObject{a}) == GroupoidObject{a.opposite()});
    CHECK(act(s, GroupoidObject{BasePoint{}}) == GroupoidObject{BasePoint{}});
}

TEST_CASE("normalization cancels r pairs") {
    const WallObject a{0, 1, +1};
    const GroupoidMorphism rr = make_morphism({Reflection{a}, Reflection{a.opposite()}});
    CHECK(rr.source == GroupoidObject{a});
    CHECK(rr.target == GroupoidObject{a});
    const GroupoidMorphism id = normalize(rr);
    CHECK(id.word.empty());

    // realization is the identity map
    const AffineMap m = realize(rr, 2);
    CHECK(m == (AffineMap{Permutation(2), std::vector<Rational>(2, 0)}));
}

TEST_CASE("composability is checked") {
    const WallObject a{0, 1, +1};
    CHECK_THROWS_AS(make_morphism({Reflection{a}, Reflection{a}}), DomainError);
}

TEST_CASE("wall_restrict frozen values") {
    const LaurentPoly x1 = LaurentPoly::variable(2, 0);
    const LaurentPoly x2 = LaurentPoly::variable(2, 1);
    CHECK(wall_restrict(x1 + x2, 0, 1).is_zero());
    CHECK(wall_restrict(x1 * x2, 0, 1) == P({{{2}, -1}}, 1));  // -t^2: t-dependent
    CHECK(wall_restrict(P({{{1, -1}, 1}, {{-1, 1}, 1}}, 2), 0, 1) == LaurentPoly::constant(1, -2));
}

TEST_CASE("translate_action marks t-degrees") {
    // a t-free restriction is fixed
    CHECK(fixed_by_translation(LaurentPoly::constant(1, 5)));
    CHECK(fixed_by_translation(LaurentPoly::zero(1)));
    // t^4 picks up the multiplier c^4
    const LaurentPoly t4 = P({{{4}, 1}}, 1);
    CHECK_FALSE(fixed_by_translation(t4));
    CHECK(translate_action(t4) == P({{{4, 4}, 1}}, 2));
    CHECK(translate_action(LaurentPoly::constant(1, 5)) == P({{{0, 0}, 5}}, 2));
}

TEST_CASE("is_groupoid_invariant") {
    CHECK(is_groupoid_invariant(schur_p({2, 1})));
    CHECK_FALSE(is_groupoid_invariant(P({{{2, 2}, 1}}, 2)));
    CHECK(is_groupoid_invariant(LaurentPoly::constant(3, Rational(9, 4))));
    CHECK_THROWS_AS(is_groupoid_invariant(P({{{Frac(1, 2), Frac(1, 2)}, 1}}, 2)), DomainError);

    const MembershipResult m = groupoid_invariance(LaurentPoly::variable(2, 0));
    CHECK_FALSE(m.member);
    CHECK(m.reason == "not fixed by the [W] component (not S_n-symmetric)");
}

TEST_CASE("groupoid invariance matches J_n membership on the batteries") {
    for (int n = 2; n <= 3; ++n) {
        for (const LaurentPoly& f : jn_member_battery(n)) {
            CHECK(is_groupoid_invariant(f));
            CHECK(static_cast<bool>(is_in_Jn(f)));
        }
        for (const LaurentPoly& f : jn_nonmember_battery(n)) {
            CHECK_FALSE(is_groupoid_invariant(f));
            CHECK_FALSE(is_in_Jn(f).member);
        }
    }
}

TEST_CASE("relations and functoriality via the verify suite") {
    for (int n = 2; n <= 3; ++n) CHECK(all_pass(verify_groupoid(n, 40)));
}

TEST_CASE("functor respects composition") {
    std::mt19937 rng(43);
    const int n = 3;
    const auto perms = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int rep = 0; rep < 20; ++rep) {
        // random composable word from a random wall
        std::uniform_int_distribution<int> pi(0, n - 1);
        int i = pi(rng), j = pi(rng);
        while (j == i) j = pi(rng);
        if (i > j) std::swap(i, j);
        const WallObject start{i, j, rep % 2 == 0 ? 1 : -1};
        std::vector<Generator> word;
        GroupoidObject at{start};
        for (int step = 0; step < 4; ++step) {
            if (rep % 3 == 0 && std::holds_alternative<WallObject>(at))
                word.push_back(Reflection{std::get<WallObject>(at)});
            else
                word.push_back(WeylMove{perms[pick(rng)], at});
            at = generator_target(word.back());
        }
        const GroupoidMorphism whole = make_morphism(word);
        const GroupoidMorphism left = make_morphism({word[0], word[1]});
        const GroupoidMorphism right = make_morphism({word[2], word[3]});
        const AffineMap composed = compose(realize(right, n), realize(left, n));
        CHECK(realize(whole, n) == composed);
        for (int s = 1; s <= 3; ++s) {
            const auto x = wall_point(start, n, s);
            CHECK(apply_affine(realize(whole, n), x) == apply_affine(composed, x));
        }
    }
}

TEST_CASE("wall translation realizations") {
    // tau for [e1-e2] adds (+1,-1); for the opposite sign it adds (-1,+1)
    const AffineMap plus = realize(Generator{Reflection{WallObject{0, 1, +1}}}, 2);
    CHECK(plus.shift == std::vector<Rational>{1, -1});
    const AffineMap minus = realize(Generator{Reflection{WallObject{0, 1, -1}}}, 2);
    CHECK(minus.shift == std::vector<Rational>{-1, 1});

    // points of the wall x_i = -x_j stay on the wall under tau
    const WallObject a{0, 1, +1};
    for (int s = 1; s <= 3; ++s) {
        const auto x = wall_point(a, 2, s);
        CHECK(x[1] == -x[0]);
        const auto y = apply_affine(plus, x);
        CHECK(y[1] == -y[0]);
    }
}
