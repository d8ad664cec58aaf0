/*
 * text.hpp
 * --------
 * Text form of polynomials and matrices.
 *
 * Polynomial grammar (whitespace insignificant):
 *
 *   expr     := sign? term (('+' | '-') term)*
 *   term     := factor ('*' factor)*
 *   factor   := atom ('^' nat)?
 *   atom     := rational | variable | '(' expr ')'
 *   variable := ('x' | 'Y') '[' nat ',' nat ']'
 *   rational := nat ('/' nat)?
 *
 * Multiplication is always explicit. Y[i,j] is normalized to i <= j.
 *
 * Output lists terms in descending graded-lex order with explicit " + " and
 * " - ", a coefficient only when it is not +-1 (then joined with '*'), and
 * exponents as '^e'. The zero polynomial prints as "0".
 */
#pragma once

#include <string>
#include <string_view>

#include "oinv/matrix.hpp"
#include "oinv/polynomial.hpp"

namespace oinv {

/// Throws SyntaxError (1-based line/column plus the expected tokens) or
/// IndexError for a variable index of 0 or above Variable::kMaxIndex.
Polynomial parse_polynomial(std::string_view text);

std::string format_polynomial(const Polynomial& p);
std::string format_variable(Variable v);
std::string format_monomial(const Monomial& m);

/// One row per line, entries separated by single spaces.
std::string format_matrix(const Matrix& m);

/// Whitespace-separated rationals, one row per line; blank lines ignored.
/// Throws Error on malformed entries or ragged rows.
Matrix parse_matrix(std::string_view text);

}  // namespace oinv
