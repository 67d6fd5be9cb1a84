#pragma once

#include <map>
#include <optional>
#include <string>

#include "qchar/laurent.hpp"
#include "qchar/schur.hpp"
#include "qchar/weights.hpp"

namespace qchar {

struct MembershipResult {
    bool member = false;
    std::string reason;  // set on failure
    explicit operator bool() const { return member; }
};

/// Membership in J_n: symmetric, and the substitution x_1 = -x_2 = t leaves
/// no t-dependence. Throws DomainError on fractional exponents (those belong
/// to the variant rings of super_rings).
MembershipResult is_in_Jn(const LaurentPoly& f);

/// The evaluation map J_n -> J_{n-2}: substitute x_{n-1} = -x_n, check that
/// nothing depends on t, drop t and reindex.
LaurentPoly ev(const LaurentPoly& f);

/// Insert two zeros into mu (between the positive and negative parts), the
/// lift realizing surjectivity of ev on the P-basis.
Weight lift_weight(const Weight& mu);

struct PBasisExpansion {
    std::map<Weight, Rational> coefficients;  // keys in Lambda_n, no zeros
    int nvars = 0;
};

struct KernelFactorization {
    std::map<GeneralWeight, Rational> s_coefficients;
    int nvars = 0;
};

/// The unique coefficients with f = sum a_lambda p_lambda. Greedy lex-leading
/// reduction, with an exact linear solve over the bounded candidate set as
/// fallback; throws NotInSpanError if even that is inconsistent.
PBasisExpansion decompose_p(const LaurentPoly& f);

/// ev(f) == 0 (precondition: f in J_n).
bool is_in_kernel(const LaurentPoly& f);

/// Factor a kernel element as odd_product(n) * sum a_mu s_mu.
KernelFactorization kernel_decompose(const LaurentPoly& f);

/// In J_n with all exponents nonnegative.
bool is_polynomial_character(const LaurentPoly& f);

LaurentPoly reconstruct(const PBasisExpansion& x);
LaurentPoly reconstruct(const KernelFactorization& x);

namespace detail {
/// Exact coefficients of target in span{schur_p(c) : c in candidates}, or
/// nullopt when the system is inconsistent.
std::optional<std::map<Weight, Rational>> solve_p_combination(const LaurentPoly& target,
                                                              const std::vector<Weight>& candidates);
}  // namespace detail

}  // namespace qchar
