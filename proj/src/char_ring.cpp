#include "qchar/char_ring.hpp"

#include <algorithm>
#include <sstream>

namespace qchar {

namespace {

std::string weight_text(const GeneralWeight& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

void require_integral(const LaurentPoly& f) {
    for (const auto& [e, c] : f.terms()) {
        for (const Frac& x : e) {
            if (!x.is_integer())
                throw DomainError(
                    "fractional exponents are outside J_n; use the half-integer or full-algebra ring "
                    "tests of super_rings");
        }
    }
}

}  // namespace

MembershipResult is_in_Jn(const LaurentPoly& f) {
    require_integral(f);
    const int n = f.nvars();
    for (int i = 0; i + 1 < n; ++i) {
        if (act_permutation(Permutation::transposition(n, i, i + 1), f) != f)
            return {false, "not symmetric under swap of x" + std::to_string(i + 1) + ",x" + std::to_string(i + 2)};
    }
    if (n >= 2) {
        const LaurentPoly ws = wall_substitute(f, 0, 1);
        for (const auto& [e, c] : ws.terms()) {
            if (!e[0].is_zero())
                return {false, "t-dependence t^" + e[0].str() + " on wall (1,2)"};
        }
    }
    return {true, ""};
}

LaurentPoly ev(const LaurentPoly& f) {
    const int n = f.nvars();
    if (n < 2) throw DomainError("ev needs at least two variables");
    const MembershipResult m = is_in_Jn(f);
    if (!m) throw DomainError("ev: input is not in J_n: " + m.reason);
    const LaurentPoly ws = wall_substitute(f, n - 2, n - 1);
    std::vector<std::pair<ExponentVector, Rational>> terms;
    terms.reserve(ws.term_count());
    for (const auto& [e, c] : ws.terms()) {
        if (!e[0].is_zero()) throw Error("ev: residual t-dependence on a J_n member");
        terms.emplace_back(ExponentVector(e.begin() + 1, e.end()), c);
    }
    return LaurentPoly::make(terms, n - 2);
}

Weight lift_weight(const Weight& mu) {
    if (!is_in_Lambda_n(mu)) throw DomainError("lift_weight: " + weight_text(mu) + " not in Lambda_n");
    Weight out;
    out.reserve(mu.size() + 2);
    std::size_t k = 0;
    while (k < mu.size() && mu[k] > 0) out.push_back(mu[k++]);
    out.push_back(0);
    out.push_back(0);
    while (k < mu.size()) out.push_back(mu[k++]);
    return out;
}

namespace detail {

std::optional<std::map<Weight, Rational>> solve_p_combination(const LaurentPoly& target,
                                                              const std::vector<Weight>& candidates) {
    // Exact Gaussian elimination on the monomial-by-candidate matrix.
    std::vector<LaurentPoly> basis;
    basis.reserve(candidates.size());
    std::map<ExponentVector, std::size_t> row_index;
    for (const Weight& w : candidates) {
        basis.push_back(schur_p(w));
        for (const auto& [e, c] : basis.back().terms()) row_index.emplace(e, 0);
    }
    for (const auto& [e, c] : target.terms()) {
        if (!row_index.count(e)) return std::nullopt;  // monomial outside every candidate support
        row_index.emplace(e, 0);
    }
    std::size_t nrows = 0;
    for (auto& [e, idx] : row_index) idx = nrows++;
    const std::size_t ncols = candidates.size();

    std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (std::size_t j = 0; j < ncols; ++j)
        for (const auto& [e, c] : basis[j].terms()) m[row_index[e]][j] = c;
    for (const auto& [e, c] : target.terms()) m[row_index[e]][ncols] = c;

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pr = row;
        while (pr < nrows && m[pr][col] == 0) ++pr;
        if (pr == nrows) continue;
        std::swap(m[pr], m[row]);
        const Rational inv = m[row][col];
        for (std::size_t j = col; j <= ncols; ++j) m[row][j] /= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t j = col; j <= ncols; ++j) m[r][j] -= factor * m[row][j];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < nrows; ++r)
        if (m[r][ncols] != 0) return std::nullopt;

    std::map<Weight, Rational> out;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        const Rational& c = m[r][ncols];
        if (c != 0) out.emplace(candidates[pivot_col_of_row[r]], c);
    }
    return out;
}

}  // namespace detail

namespace {

// Greedy reduction of one homogeneous component against the P-basis; nullopt
// signals a stall (leading weight outside Lambda_n or outside the hull).
std::optional<std::map<Weight, Rational>> greedy_p(const LaurentPoly& comp, std::int64_t lo, std::int64_t hi) {
    std::map<Weight, Rational> acc;
    LaurentPoly rem = comp;
    while (!rem.is_zero()) {
        const ExponentVector e = leading_exponent(rem);
        Weight mu(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) mu[k] = e[k].num();  // integral by precondition
        if (!is_in_Lambda_n(mu)) return std::nullopt;
        for (auto v : mu)
            if (v < lo || v > hi) return std::nullopt;
        const Rational c = rem.coeff(e);
        rem -= c * schur_p(mu);
        acc[mu] += c;
    }
    return acc;
}

}  // namespace

PBasisExpansion decompose_p(const LaurentPoly& f) {
    const MembershipResult m = is_in_Jn(f);
    if (!m) throw DomainError("decompose_p: input is not in J_n: " + m.reason);
    PBasisExpansion out;
    out.nvars = f.nvars();
    for (const auto& [deg, comp] : homogeneous_components(f)) {
        std::int64_t lo = 0, hi = 0;
        bool first = true;
        for (const auto& [e, c] : comp.terms()) {
            for (const Frac& x : e) {
                lo = first ? x.num() : std::min(lo, x.num());
                hi = first ? x.num() : std::max(hi, x.num());
                first = false;
            }
        }
        auto coeffs = greedy_p(comp, lo, hi);
        if (!coeffs) {
            std::vector<Weight> candidates;
            for (const Weight& w : lambda_n_weights(comp.nvars(), lo, hi)) {
                std::int64_t sum = 0;
                for (auto v : w) sum += v;
                if (Frac(sum) == deg) candidates.push_back(w);
            }
            coeffs = detail::solve_p_combination(comp, candidates);
            if (!coeffs)
                throw NotInSpanError("decompose_p: homogeneous component of degree " + deg.str() +
                                     " is not in the span of the P-basis");
        }
        for (const auto& [w, c] : *coeffs)
            if (c != 0) out.coefficients[w] = c;
    }
    return out;
}

bool is_in_kernel(const LaurentPoly& f) {
    const MembershipResult m = is_in_Jn(f);
    if (!m) throw DomainError("is_in_kernel: input is not in J_n: " + m.reason);
    if (f.nvars() < 2) return f.is_zero();
    return ev(f).is_zero();
}

KernelFactorization kernel_decompose(const LaurentPoly& f) {
    if (!is_in_kernel(f)) throw DomainError("kernel_decompose: ev(f) != 0");
    KernelFactorization out;
    out.nvars = f.nvars();
    if (f.is_zero()) return out;
    const auto g = try_exact_div(f, odd_product(f.nvars()));
    if (!g) throw Error("kernel_decompose: kernel element is not divisible by the odd product");
    // Greedy Schur reduction: g is symmetric, so its lex-leading exponent is
    // weakly decreasing and subtracting the matching s peels it off.
    LaurentPoly rem = *g;
    while (!rem.is_zero()) {
        const ExponentVector e = leading_exponent(rem);
        GeneralWeight mu(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k].is_integer()) throw Error("kernel_decompose: fractional exponent in quotient");
            mu[k] = e[k].num();
        }
        if (!is_weakly_decreasing(mu))
            throw Error("kernel_decompose: quotient is not symmetric (leading exponent " + weight_text(mu) + ")");
        const Rational c = rem.coeff(e);
        rem -= c * schur_s(mu);
        out.s_coefficients[mu] += c;
    }
    std::erase_if(out.s_coefficients, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool is_polynomial_character(const LaurentPoly& f) {
    try {
        if (!is_in_Jn(f)) return false;
    } catch (const DomainError&) {
        return false;  // fractional exponents are never polynomial characters
    }
    for (const auto& [e, c] : f.terms())
        for (const Frac& x : e)
            if (x < Frac(0)) return false;
    return true;
}

LaurentPoly reconstruct(const PBasisExpansion& x) {
    LaurentPoly r(x.nvars);
    for (const auto& [w, c] : x.coefficients) r += c * schur_p(w);
    return r;
}

LaurentPoly reconstruct(const KernelFactorization& x) {
    LaurentPoly r(x.nvars);
    for (const auto& [w, c] : x.s_coefficients) r += c * schur_s(w);
    return odd_product(x.nvars) * r;
}

}  // namespace qchar
