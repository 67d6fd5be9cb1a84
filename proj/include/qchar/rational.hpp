#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qchar {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational coefficient: always in lowest terms with positive
/// denominator, zero stored uniquely as 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer pow2(unsigned k) { return Integer(1) << k; }

}  // namespace qchar
