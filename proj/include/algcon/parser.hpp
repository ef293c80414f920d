#pragma once

#include <string>
#include <vector>

#include "algcon/polynomial.hpp"

namespace algcon {

/// Parses a polynomial with rational coefficients.
///
/// Grammar (whitespace is insignificant):
///   expr   := term { ('+' | '-') term }
///   term   := factor { ('*' | '/') factor }      divisor must be a nonzero constant
///   factor := ('+' | '-') factor | base [ '^' uint ]
///   base   := uint | ident | '(' expr ')'
///   ident  := [A-Za-z_][A-Za-z0-9_]*
/// Implicit multiplication ("2x", "x y", "(x)(y)") and chained powers
/// ("x^2^3") are rejected. Rationals are written p/q.
///
/// Throws ParseError (with the character offset) or Error(kUnknownVariable).
QPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

/// Splits "x,y,z" into names, validating each as an identifier and rejecting
/// duplicates.
std::vector<std::string> parse_variable_list(const std::string& text);

/// Canonical text form: terms in ascending local order, e.g. "x^2 - y^2",
/// "3/2*x*y^2", "0". parse_polynomial(to_string(p, v), v) == p.
std::string to_string(const QPolynomial& p, const std::vector<std::string>& variables);

}  // namespace algcon
