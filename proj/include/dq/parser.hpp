#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dq/hseries.hpp"

namespace dq {

/// Parses a polynomial over the named variables. Grammar (see
/// docs/polynomial_grammar.md):
///
///   expr    = term { ("+" | "-") term }
///   term    = unary { "*" unary | "/" integer }
///   unary   = ("+" | "-") unary | power
///   power   = primary [ "^" integer ]
///   primary = integer | identifier | "(" expr ")"
///
/// Throws ParseError (with a 0-based character offset) on anything else.
Poly parse_poly(std::string_view text, const std::vector<std::string>& variables);

/// Same grammar with the extra indeterminate `h`; terms of order >= N are
/// dropped. `h` must not clash with a variable name.
HSeries parse_hseries(std::string_view text, const std::vector<std::string>& variables,
                      std::size_t N);

/// Canonical text: terms in descending `order`, e.g. "3*x^2*y - 1/2".
std::string format_poly(const Poly& f, const std::vector<std::string>& variables,
                        const MonomialOrder& order = {});
/// Terms grouped by ascending h power, e.g. "x1*x2 + 1/2*h*x3".
std::string format_hseries(const HSeries& F, const std::vector<std::string>& variables,
                           const MonomialOrder& order = {});
/// e.g. "1 - 1/2*h".
std::string format_hscalar(const HScalar& s);
/// "p/q", or "p" when q = 1.
std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view text);

/// Appends one signed term "c*f1*f2" to `out` (leading terms without " + ").
void append_term(std::string& out, const Rational& c, const std::vector<std::string>& factors);
/// "x", "x^3"; empty list for the unit monomial.
std::vector<std::string> monomial_factors(const Monomial& m,
                                          const std::vector<std::string>& variables);

}  // namespace dq
