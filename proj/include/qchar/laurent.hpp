#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qchar/frac.hpp"
#include "qchar/permutation.hpp"
#include "qchar/rational.hpp"

namespace qchar {

/// Exponent vector of one monomial; entry k is the exponent of x_{k+1}.
using ExponentVector = std::vector<Frac>;

Frac total_degree(const ExponentVector& e);

/// Sparse multivariate Laurent polynomial over the rationals with exponents
/// in the rational lattice. Terms are kept in lexicographic order on
/// exponent vectors (entry 1 first); no zero coefficient is ever stored.
/// Values are immutable after construction: every operation returns a new
/// polynomial.
class LaurentPoly {
  public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly one(int nvars) { return constant(nvars, 1); }
    static LaurentPoly variable(int nvars, int i);  // x_{i+1}, 0-based i
    static LaurentPoly monomial(int nvars, const ExponentVector& e, const Rational& c);
    static LaurentPoly make(const std::vector<std::pair<ExponentVector, Rational>>& terms, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const ExponentVector& e) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& f);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  private:
    void add_term(const ExponentVector& e, const Rational& c);
    friend LaurentPoly act_permutation(const Permutation& w, const LaurentPoly& f);
    friend LaurentPoly wall_substitute(const LaurentPoly& f, int i, int j);
    friend std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g);
    friend std::map<Frac, LaurentPoly> homogeneous_components(const LaurentPoly& f);
    friend std::map<Frac, LaurentPoly> coset_components(const LaurentPoly& f);
    friend void accumulate_permuted(LaurentPoly& acc, const Rational& c, const Permutation& w,
                                    const LaurentPoly& f);

    int nvars_;
    TermMap terms_;
};

LaurentPoly scale(const Rational& c, const LaurentPoly& f);
LaurentPoly pow(const LaurentPoly& f, unsigned k);

/// Exact quotient f/g in the Laurent ring, or nullopt when none exists.
/// Reduction cancels the lex-leading term of the remainder against the
/// lex-leading term of g; a quotient term falling outside the coordinate
/// hull forced by f = q*g certifies failure and bounds the work.
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g);

/// As try_exact_div, but throws DivisionFailure instead of returning nullopt.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

/// Replace x_{i+1} by x_{w(i)+1}: exponent vectors are permuted.
LaurentPoly act_permutation(const Permutation& w, const LaurentPoly& f);

/// acc += c * act_permutation(w, f), in one pass and without intermediate
/// polynomials; the workhorse of the bulk symmetrizations.
void accumulate_permuted(LaurentPoly& acc, const Rational& c, const Permutation& w, const LaurentPoly& f);

/// Invariance under all adjacent transpositions (sufficient by generation).
bool is_symmetric(const LaurentPoly& f);

/// Substitute x_{i+1} = t, x_{j+1} = -t (0-based i != j). The result has
/// nvars-1 variables: t first, then the remaining variables in original
/// order. Requires integer exponents at positions i and j.
LaurentPoly wall_substitute(const LaurentPoly& f, int i, int j);

/// Split f by total exponent degree; the parts sum back to f.
std::map<Frac, LaurentPoly> homogeneous_components(const LaurentPoly& f);

/// Split f by the common fractional part of each monomial's exponents.
/// Throws MixedCosetError when a monomial's exponents do not share one.
std::map<Frac, LaurentPoly> coset_components(const LaurentPoly& f);

/// Lexicographically greatest exponent vector of the support (f != 0).
ExponentVector leading_exponent(const LaurentPoly& f);

}  // namespace qchar
