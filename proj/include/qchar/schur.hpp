#pragma once

#include <vector>

#include "qchar/laurent.hpp"
#include "qchar/permutation.hpp"
#include "qchar/weights.hpp"

namespace qchar {

/// (n-1, n-2, ..., 1, 0).
Weight rho0(int n);

/// prod_{i<j} (x_i + x_j); the multiplicative form of the odd denominator.
LaurentPoly odd_product(int n);

/// prod_{i<j} (x_i - x_j).
LaurentPoly vandermonde(int n);

struct WeylDenominators {
    LaurentPoly R0;  // prod_{i<j} (1 - x_j/x_i)
    LaurentPoly R1;  // prod_{i<j} (1 + x_j/x_i)
};

WeylDenominators weyl_denominators(int n);

/// The monomial x^lambda as a Laurent polynomial in |lambda| variables.
LaurentPoly weight_monomial(const RationalWeight& lambda);
LaurentPoly weight_monomial(const Weight& lambda);

/// Minimal-length representatives of the left cosets of the stabilizer of
/// lambda: exactly the permutations increasing on each block of equal parts.
std::vector<Permutation> coset_reps(const GeneralWeight& lambda);

/// Schur Laurent polynomial: the bialternant sum_w (-1)^w w(x^{lambda+rho0})
/// divided exactly by prod_{i<j}(x_i - x_j).
LaurentPoly schur_s(const GeneralWeight& lambda);

/// Schur P-function p_{lambda,n}: the coset sum of
///   w( x^lambda  prod_{lambda_i > lambda_j} (x_i + x_j)/(x_i - x_j) )
/// evaluated over the common denominator prod_{i<j}(x_i - x_j) with
/// sign-carrying exact division. Requires lambda in Lambda_n.
LaurentPoly schur_p(const Weight& lambda);

/// Euler characteristic E(lambda) = 2^{floor(l/2)} p_lambda, evaluated from
/// its alternating-sum formula and checked against schur_p before returning.
LaurentPoly euler_char(const Weight& lambda);

/// Closed character of a typical simple module,
/// 2^{ceil(l/2)} * (odd denominator quotient of the alternating orbit sum).
/// Accepts rational (e.g. half-integer) strictly decreasing typical weights.
LaurentPoly typical_char(const RationalWeight& lambda);
LaurentPoly typical_char(const Weight& lambda);

}  // namespace qchar
