#include "qchar/schur.hpp"

#include <sstream>
#include <string>

#include "qchar/io.hpp"

namespace qchar {

namespace {

std::string weight_text(const GeneralWeight& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string weight_text(const RationalWeight& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
    os << ")";
    return os.str();
}

// prod over pairs i<j with pred(i,j) of (x_i + sign*x_j).
template <typename Pred>
LaurentPoly pair_product(int n, int sign, Pred&& pred) {
    LaurentPoly r = LaurentPoly::one(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!pred(i, j)) continue;
            r = r * (LaurentPoly::variable(n, i) + Rational(sign) * LaurentPoly::variable(n, j));
        }
    }
    return r;
}

// Exact division by prod_{i<j}(x_i - x_j), one binomial factor at a time.
// Exact quotients are unique, so chaining the factors gives the same result
// as dividing by the expanded product, with far smaller remainders.
LaurentPoly div_by_vandermonde(LaurentPoly f, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            f = exact_div(f, LaurentPoly::variable(n, i) - LaurentPoly::variable(n, j));
    return f;
}

}  // namespace

Weight rho0(int n) {
    Weight r(n);
    for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
    return r;
}

LaurentPoly odd_product(int n) {
    return pair_product(n, +1, [](int, int) { return true; });
}

LaurentPoly vandermonde(int n) {
    return pair_product(n, -1, [](int, int) { return true; });
}

WeylDenominators weyl_denominators(int n) {
    WeylDenominators d{LaurentPoly::one(n), LaurentPoly::one(n)};
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ExponentVector e(n, Frac(0));
            e[i] = -1;
            e[j] = 1;
            const LaurentPoly ratio = LaurentPoly::monomial(n, e, 1);  // x_j / x_i
            d.R0 = d.R0 * (LaurentPoly::one(n) - ratio);
            d.R1 = d.R1 * (LaurentPoly::one(n) + ratio);
        }
    }
    return d;
}

LaurentPoly weight_monomial(const RationalWeight& lambda) {
    const int n = static_cast<int>(lambda.size());
    ExponentVector e(lambda.begin(), lambda.end());
    return LaurentPoly::monomial(n, e, 1);
}

LaurentPoly weight_monomial(const Weight& lambda) { return weight_monomial(to_rational_weight(lambda)); }

std::vector<Permutation> coset_reps(const GeneralWeight& lambda) {
    if (!is_weakly_decreasing(lambda)) throw DomainError("coset_reps: weight not weakly decreasing");
    const int n = static_cast<int>(lambda.size());
    std::vector<Permutation> reps;
    for (const Permutation& w : all_permutations(n)) {
        bool minimal = true;
        for (int i = 0; i + 1 < n && minimal; ++i) {
            if (lambda[i] == lambda[i + 1] && w(i) > w(i + 1)) minimal = false;
        }
        if (minimal) reps.push_back(w);
    }
    return reps;
}

LaurentPoly schur_s(const GeneralWeight& lambda) {
    if (!is_weakly_decreasing(lambda)) throw DomainError("schur_s: weight not weakly decreasing");
    const int n = static_cast<int>(lambda.size());
    const Weight rho = rho0(n);
    Weight shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = lambda[i] + rho[i];
    LaurentPoly alt(n);
    const LaurentPoly xs = weight_monomial(shifted);
    for (const Permutation& w : all_permutations(n))
        accumulate_permuted(alt, Rational(w.sign()), w, xs);
    return div_by_vandermonde(alt, n);
}

LaurentPoly schur_p(const Weight& lambda) {
    if (!is_in_Lambda_n(lambda)) throw DomainError("schur_p: weight " + weight_text(lambda) + " not in Lambda_n");
    const int n = static_cast<int>(lambda.size());
    const LaurentPoly van = vandermonde(n);
    const auto gt = [&](int i, int j) { return lambda[i] > lambda[j]; };
    const LaurentPoly numerator = weight_monomial(lambda) * pair_product(n, +1, gt);
    const LaurentPoly strict_diff = pair_product(n, -1, gt);
    // Per-representative cofactor: Q_w = exact_div(V, w(strict_diff)). Since
    // V = strict_diff * (V/strict_diff) and w(V) = sign(w) V, the quotient is
    // sign(w) * w(V/strict_diff), so one exact division serves every w.
    const LaurentPoly eq_cofactor = exact_div(van, strict_diff);
    const LaurentPoly base = numerator * eq_cofactor;
    LaurentPoly acc(n);
    for (const Permutation& w : coset_reps(lambda))
        accumulate_permuted(acc, Rational(w.sign()), w, base);
    return div_by_vandermonde(acc, n);
}

LaurentPoly euler_char(const Weight& lambda) {
    if (!is_in_Lambda_n(lambda)) throw DomainError("euler_char: weight " + weight_text(lambda) + " not in Lambda_n");
    const int n = static_cast<int>(lambda.size());
    // Positive roots e_i - e_j with lambda_i = lambda_j contribute the factor
    // 1/(1 + x_j/x_i) = x_i/(x_i + x_j); over the common denominator
    // prod_{i<j}(x_i + x_j) each w-summand becomes w(x^lambda M P) with
    //   M = prod_{lambda_i = lambda_j} x_i,  P = prod_{lambda_i > lambda_j} (x_i + x_j).
    ExponentVector me(n, Frac(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (lambda[i] == lambda[j]) me[i] += 1;
    const auto gt = [&](int i, int j) { return lambda[i] > lambda[j]; };
    const LaurentPoly base =
        weight_monomial(lambda) * LaurentPoly::monomial(n, me, 1) * pair_product(n, +1, gt);
    LaurentPoly alt(n);
    for (const Permutation& w : all_permutations(n))
        accumulate_permuted(alt, Rational(w.sign()), w, base);
    const LaurentPoly e = Rational(pow2(weight_stats(lambda).length / 2)) * div_by_vandermonde(alt, n);

    const LaurentPoly expected = Rational(pow2(weight_stats(lambda).length / 2)) * schur_p(lambda);
    if (e != expected)
        throw Error("euler_char(" + weight_text(lambda) + ") is not the expected multiple of schur_p; the " +
                    "root-set convention for equal parts is inconsistent for this weight.\n  computed: " +
                    render(e, RenderFormat::Text) + "\n  expected: " + render(expected, RenderFormat::Text));
    return e;
}

LaurentPoly typical_char(const RationalWeight& lambda) {
    const int n = static_cast<int>(lambda.size());
    if (!is_weakly_decreasing(lambda))
        throw DomainError("typical_char: weight not weakly decreasing");
    for (int i = 0; i + 1 < n; ++i)
        if (lambda[i] == lambda[i + 1] && !lambda[i].is_zero())
            throw DomainError("typical_char: repeated nonzero part in " + weight_text(lambda));
    if (!is_typical(lambda))
        throw DomainError("typical_char: weight " + weight_text(lambda) +
                          " is atypical (two parts sum to zero)");
    int l = 0;
    for (const Frac& x : lambda)
        if (!x.is_zero()) ++l;
    LaurentPoly alt(n);
    const LaurentPoly xs = weight_monomial(lambda);
    for (const Permutation& w : all_permutations(n))
        accumulate_permuted(alt, Rational(w.sign()), w, xs);
    const LaurentPoly ch =
        Rational(pow2((l + 1) / 2)) * div_by_vandermonde(odd_product(n) * alt, n);
    for (const auto& [e, c] : ch.terms()) {
        if (!is_integer(c) || c < 0)
            throw Error("typical_char(" + weight_text(lambda) + "): coefficient " + to_string(c) +
                        " is not a nonnegative integer");
    }
    return ch;
}

LaurentPoly typical_char(const Weight& lambda) { return typical_char(to_rational_weight(lambda)); }

}  // namespace qchar
