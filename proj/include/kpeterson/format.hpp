#pragma once

// Text and JSON forms of elements, ring values and structure-constant tables.
//
// Element grammar:
//   element     := finite [ ('*' | ' ') translation ] | translation
//   finite      := "id" | letter ('*' letter)*        letter := 's' index, 0 <= index <= rank
//   translation := 't[' int (',' int)* ']'            (simple-coroot coordinates)
// "s1*s2 t[-1,-1]" is s_1 s_2 t_{-alpha_1^vee - alpha_2^vee}.  Letters may include s0 and
// need not form a reduced word.
//
// Ring-value grammar (fixtures and CLI input): sums and products of integers,
// parenthesised expressions and monomials e^{...}, where the exponent is a
// linear combination of a1..ar (simple roots) or w1..wr (fundamental weights).

#include <string>
#include <string_view>

#include "kpeterson/constants.hpp"
#include "json.hpp"

namespace kpeterson {

inline constexpr int kSchemaVersion = 1;

AffineWeylElement parse_element(std::string_view text, const AffineWeylGroup& g);
std::string format_element(const AffineWeylGroup& g, const AffineWeylElement& x);
std::string format_finite(const FiniteWeylGroup& g, FiniteWeylElement w);
std::string format_coroot(const Coroot& mu);

Laurent parse_laurent(std::string_view text, const CartanDatum& d);

enum class ExponentMode { Weights, Roots };
/// Terms in descending weight order, e.g. "1 - e^{-α1}".  Falls back to
/// weight exponents when a monomial is not in the root lattice.
std::string format_laurent(const Laurent& f, const CartanDatum& d, ExponentMode mode = ExponentMode::Weights);
std::string format_rational(const RationalFunction& f, const CartanDatum& d, ExponentMode mode = ExponentMode::Weights);

nlohmann::json laurent_to_json(const Laurent& f);
Laurent laurent_from_json(const nlohmann::json& j, int rank);
nlohmann::json rational_to_json(const RationalFunction& f);

nlohmann::json table_to_json(const AffineWeylGroup& g, const StructureConstantTable& t);
nlohmann::json report_to_json(const AffineWeylGroup& g, const ConjectureReport& r);

}  // namespace kpeterson
