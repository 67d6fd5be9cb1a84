#pragma once

#include <cstdint>
#include <vector>

#include "qchar/frac.hpp"
#include "qchar/rational.hpp"

namespace qchar {

/// Weakly decreasing integer vector; indexes the Schur Laurent basis s.
using GeneralWeight = std::vector<std::int64_t>;

/// A GeneralWeight where repeated values must be zero (queer dominance);
/// validated by is_in_Lambda_n. Indexes p, E and L.
using Weight = std::vector<std::int64_t>;

/// Weight with rational entries; the half-integer category and the rational
/// coset classes of the full algebra ring use these.
using RationalWeight = std::vector<Frac>;

bool is_weakly_decreasing(const GeneralWeight& v);
bool is_weakly_decreasing(const RationalWeight& v);

/// Integer entries, weakly decreasing, and equal neighbours only at zero.
bool is_in_Lambda_n(const GeneralWeight& v);

/// No two entries (at distinct positions) sum to zero.
bool is_typical(const Weight& v);
bool is_typical(const RationalWeight& v);

struct WeightStats {
    int length;                 // l: number of nonzero parts
    int parity;                 // delta: l mod 2
    Integer stabilizer_order;   // |S_lambda|: product of multiplicity factorials
};

WeightStats weight_stats(const GeneralWeight& v);

RationalWeight to_rational_weight(const Weight& v);

/// All elements of Lambda_n with entries in [lo, hi], in descending lex order.
std::vector<Weight> lambda_n_weights(int n, std::int64_t lo, std::int64_t hi);

/// All weakly decreasing integer vectors with entries in [lo, hi].
std::vector<GeneralWeight> decreasing_weights(int n, std::int64_t lo, std::int64_t hi);

}  // namespace qchar
