#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qchar/laurent.hpp"
#include "qchar/weights.hpp"

namespace qchar {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<CheckResult>& checks);

/// ev(p_{lift(mu),n}) == p_{mu,n-2} for every mu in Lambda_{n-2} with entries
/// in [lo, hi].
std::vector<CheckResult> verify_lift(int n, std::int64_t lo, std::int64_t hi);

/// odd_product(n) * s_mu == p_{mu+rho0} with scalar exactly 1, and each such
/// element evaluates to zero, for every weakly decreasing mu in [lo, hi]^n.
std::vector<CheckResult> verify_kernel(int n, std::int64_t lo, std::int64_t hi);

/// E(lambda) == 2^{floor(l/2)} p_lambda over Lambda_n with entries in [lo, hi].
std::vector<CheckResult> verify_euler(int n, std::int64_t lo, std::int64_t hi);

/// ch L(lambda) == 2^{ceil(l/2)} p_lambda with nonnegative integer
/// coefficients, over the typical part of the same weight range.
std::vector<CheckResult> verify_typical(int n, std::int64_t lo, std::int64_t hi);

/// Groupoid invariance agrees with J_n membership on the standard battery,
/// and the defining relations hold on sampled words of length <= 4.
std::vector<CheckResult> verify_groupoid(int n, int sampled_words);

/// Orbit sum of x^nu (the monomial symmetric Laurent polynomial).
LaurentPoly monomial_symmetric(const GeneralWeight& nu);

/// Deterministic J_n member / non-member batteries used by the groupoid and
/// degree-filter checks.
std::vector<LaurentPoly> jn_member_battery(int n);
std::vector<LaurentPoly> jn_nonmember_battery(int n);

}  // namespace qchar
