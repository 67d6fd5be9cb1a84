#include "qchar/verify.hpp"

#include <random>
#include <sstream>

#include "qchar/char_ring.hpp"
#include "qchar/io.hpp"
#include "qchar/schur.hpp"
#include "qchar/weyl_groupoid.hpp"

namespace qchar {

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::string p_name(const Weight& w, int n) { return "p_" + weight_str(w) + "," + std::to_string(n); }

CheckResult equal_check(std::string name, const LaurentPoly& got, const LaurentPoly& expected) {
    CheckResult r{std::move(name), got == expected, ""};
    if (!r.pass)
        r.detail = "got " + render(got, RenderFormat::Text) + ", expected " + render(expected, RenderFormat::Text);
    return r;
}

}  // namespace

std::vector<CheckResult> verify_lift(int n, std::int64_t lo, std::int64_t hi) {
    if (n < 2) throw DomainError("verify_lift needs n >= 2");
    std::vector<CheckResult> out;
    for (const Weight& mu : lambda_n_weights(n - 2, lo, hi)) {
        const Weight lifted = lift_weight(mu);
        out.push_back(equal_check("ev(" + p_name(lifted, n) + ") == " + p_name(mu, n - 2),
                                  ev(schur_p(lifted)), schur_p(mu)));
    }
    return out;
}

std::vector<CheckResult> verify_kernel(int n, std::int64_t lo, std::int64_t hi) {
    const LaurentPoly odd = odd_product(n);
    const Weight rho = rho0(n);
    std::vector<CheckResult> out;
    for (const GeneralWeight& mu : decreasing_weights(n, lo, hi)) {
        Weight lambda(n);
        for (int i = 0; i < n; ++i) lambda[i] = mu[i] + rho[i];
        const LaurentPoly lhs = odd * schur_s(mu);
        const LaurentPoly rhs = schur_p(lambda);
        CheckResult r{"odd_product*s_" + weight_str(mu) + " == " + p_name(lambda, n), lhs == rhs, ""};
        if (!r.pass) {
            // Report the observed scalar, if the two sides are proportional.
            const ExponentVector e = leading_exponent(rhs);
            r.detail = "computed scalar " + to_string(lhs.coeff(e));
        }
        out.push_back(std::move(r));
        if (n >= 2) {
            CheckResult k{"ev(odd_product*s_" + weight_str(mu) + ") == 0", is_in_kernel(lhs), ""};
            out.push_back(std::move(k));
        }
    }
    return out;
}

std::vector<CheckResult> verify_euler(int n, std::int64_t lo, std::int64_t hi) {
    std::vector<CheckResult> out;
    for (const Weight& lambda : lambda_n_weights(n, lo, hi)) {
        const int l = weight_stats(lambda).length;
        CheckResult r{"E" + weight_str(lambda) + " == 2^" + std::to_string(l / 2) + "*p", false, ""};
        try {
            r.pass = euler_char(lambda) == Rational(pow2(l / 2)) * schur_p(lambda);
        } catch (const Error& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> verify_typical(int n, std::int64_t lo, std::int64_t hi) {
    std::vector<CheckResult> out;
    for (const Weight& lambda : lambda_n_weights(n, lo, hi)) {
        if (!is_typical(lambda)) continue;
        const int l = weight_stats(lambda).length;
        CheckResult r{"chL" + weight_str(lambda) + " == 2^" + std::to_string((l + 1) / 2) + "*p", false, ""};
        try {
            const LaurentPoly ch = typical_char(lambda);
            r.pass = ch == Rational(pow2((l + 1) / 2)) * schur_p(lambda);
            if (!r.pass) r.detail = "wrong scalar or polynomial";
        } catch (const Error& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

LaurentPoly monomial_symmetric(const GeneralWeight& nu) {
    LaurentPoly acc(static_cast<int>(nu.size()));
    const LaurentPoly x = weight_monomial(nu);
    for (const Permutation& w : coset_reps(nu)) acc += act_permutation(w, x);
    return acc;
}

std::vector<LaurentPoly> jn_member_battery(int n) {
    std::vector<LaurentPoly> out;
    std::vector<LaurentPoly> ps;
    for (const Weight& w : lambda_n_weights(n, -2, 2)) ps.push_back(schur_p(w));
    out = ps;
    out.push_back(LaurentPoly::constant(n, Rational(7, 3)));
    for (std::size_t k = 0; k + 1 < ps.size() && k < 5; ++k) out.push_back(ps[k] * ps[k + 1]);
    for (std::size_t k = 0; k + 2 < ps.size() && k < 3; ++k)
        out.push_back(Rational(2, 3) * ps[k] - Rational(5) * ps[k + 2]);
    return out;
}

std::vector<LaurentPoly> jn_nonmember_battery(int n) {
    std::vector<LaurentPoly> out;
    out.push_back(LaurentPoly::variable(n, 0));  // x1: not symmetric
    if (n >= 2) {
        out.push_back(LaurentPoly::variable(n, 0) * LaurentPoly::variable(n, 0) * LaurentPoly::variable(n, 1));
        ExponentVector e(n, Frac(0));
        e[0] = 1;
        e[1] = -1;
        out.push_back(LaurentPoly::monomial(n, e, 1));  // x1/x2: not symmetric
        GeneralWeight pair(n, 0);
        pair[0] = pair[1] = 1;
        out.push_back(monomial_symmetric(pair));  // m_(1,1,...): symmetric, t-dependent
        GeneralWeight sq(n, 0);
        sq[0] = sq[1] = 2;
        out.push_back(monomial_symmetric(sq));  // m_(2,2,...)
        GeneralWeight single(n, 0);
        single[0] = 2;
        out.push_back(monomial_symmetric(single) + monomial_symmetric(pair));  // wrong mix of m's
        Weight ones(n, 0);
        ones[0] = 1;
        out.push_back(monomial_symmetric(pair) + schur_p(ones));
    }
    return out;
}

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

WallObject random_wall(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    if (i > j) std::swap(i, j);
    return WallObject{i, j, pick(rng) % 2 == 0 ? 1 : -1};
}

bool maps_agree(const AffineMap& a, const AffineMap& b, const WallObject& wall, int n) {
    if (!(a == b)) return false;
    for (int s = 1; s <= 3; ++s) {
        const auto x = wall_point(wall, n, s);
        if (apply_affine(a, x) != apply_affine(b, x)) return false;
    }
    return true;
}

}  // namespace

std::vector<CheckResult> verify_groupoid(int n, int sampled_words) {
    std::vector<CheckResult> out;
    const auto battery_check = [&](const LaurentPoly& f, bool expect_member, int idx) {
        const bool inv = is_groupoid_invariant(f);
        const bool jn = static_cast<bool>(is_in_Jn(f));
        CheckResult r;
        r.name = std::string("groupoid == Jn on ") + (expect_member ? "member #" : "non-member #") +
                 std::to_string(idx) + " (n=" + std::to_string(n) + ")";
        r.pass = inv == jn && jn == expect_member;
        if (!r.pass)
            r.detail = inv != jn ? "predicates disagree" : (expect_member ? "member rejected" : "non-member accepted");
        return r;
    };
    int idx = 0;
    for (const LaurentPoly& f : jn_member_battery(n)) out.push_back(battery_check(f, true, idx++));
    idx = 0;
    for (const LaurentPoly& f : jn_nonmember_battery(n)) out.push_back(battery_check(f, false, idx++));

    std::mt19937 rng(20240517u + static_cast<unsigned>(n));
    // Defining relations, instantiated on random data.
    int relation_fails = 0;
    for (int k = 0; k < sampled_words; ++k) {
        const WallObject alpha = random_wall(n, rng);
        const Permutation w = random_permutation(n, rng);
        const Permutation u = random_permutation(n, rng);

        // r_alpha r_{-alpha} = id as a word rewrite.
        const GroupoidMorphism rr = make_morphism({Reflection{alpha}, Reflection{alpha.opposite()}});
        const GroupoidMorphism rr_norm = normalize(rr);
        if (!rr_norm.word.empty() || !(realize(rr, n) == AffineMap{Permutation(n), std::vector<Rational>(n, 0)}))
            ++relation_fails;

        // Triangle: (uw)_alpha = u_{w alpha} o w_alpha.
        const GroupoidMorphism lhs1 = make_morphism({WeylMove{u.compose(w), alpha}});
        const GroupoidMorphism rhs1 =
            make_morphism({WeylMove{w, alpha}, WeylMove{u, act(w, GroupoidObject{alpha})}});
        if (!(lhs1.target == rhs1.target) || !maps_agree(realize(lhs1, n), realize(rhs1, n), alpha, n))
            ++relation_fails;

        // Square: r_{w alpha} o w_alpha = w_{-alpha} o r_alpha.
        const auto walpha = std::get<WallObject>(act(w, GroupoidObject{alpha}));
        const GroupoidMorphism lhs2 = make_morphism({WeylMove{w, alpha}, Reflection{walpha}});
        const GroupoidMorphism rhs2 =
            make_morphism({Reflection{alpha}, WeylMove{w, GroupoidObject{alpha.opposite()}}});
        if (!(lhs2.target == rhs2.target) || !maps_agree(realize(lhs2, n), realize(rhs2, n), alpha, n))
            ++relation_fails;

        // A random composable word of length <= 4 survives normalization.
        std::vector<Generator> word;
        GroupoidObject at = GroupoidObject{alpha};
        std::uniform_int_distribution<int> len(1, 4);
        std::uniform_int_distribution<int> coin(0, 1);
        const int target_len = len(rng);
        for (int step = 0; step < target_len; ++step) {
            if (coin(rng) == 0 && std::holds_alternative<WallObject>(at)) {
                word.push_back(Reflection{std::get<WallObject>(at)});
            } else {
                word.push_back(WeylMove{random_permutation(n, rng), at});
            }
            at = generator_target(word.back());
        }
        const GroupoidMorphism m = make_morphism(word);
        const GroupoidMorphism nm = normalize(m);
        if (!(realize(m, n) == realize(nm, n)) || !(nm.source == m.source) || !(nm.target == m.target))
            ++relation_fails;
    }
    out.push_back({"groupoid relations on " + std::to_string(sampled_words) + " sampled words (n=" +
                       std::to_string(n) + ")",
                   relation_fails == 0,
                   relation_fails == 0 ? "" : std::to_string(relation_fails) + " relation instances failed"});
    return out;
}

}  // namespace qchar
