#pragma once

#include <map>
#include <string>
#include <string_view>

#include "qchar/laurent.hpp"
#include "qchar/weights.hpp"

namespace qchar {

enum class RenderFormat { Text, Json, Latex };

/// Parse the surface syntax: variables x1..x<nvars>, integer and rational
/// literals, + - * ^ and parentheses; exponents may be negative integers or
/// fractions such as (-1), (1/2). Exponent denominators are capped by
/// denominator_bound().
LaurentPoly parse_poly(std::string_view text, int nvars);

/// Deterministic rendering with terms in descending lex order;
/// parse_poly(render(f, Text)) == f.
std::string render(const LaurentPoly& f, RenderFormat format);

/// "3,1,0,0" -> integer weight vector (negatives allowed).
GeneralWeight parse_weight(std::string_view text);

std::string weight_str(const GeneralWeight& w);

/// {"(3,1)": "1", ...} with keys in descending lex order of the weights.
std::string expansion_json(const std::map<Weight, Rational>& coeffs);

/// Largest allowed exponent denominator: QCHAR_DENOM_BOUND or 12.
int denominator_bound();

}  // namespace qchar
