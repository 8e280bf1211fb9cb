#pragma once

#include "hpoisson/polynomial.hpp"

#include <string>
#include <vector>

namespace hpoisson {

/// Syntax or lookup failure with 0-based input position.
struct ParseError : std::runtime_error {
	ParseError(const std::string &msg, size_t pos)
	    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
	size_t position;
};

struct ParseResult {
	Polynomial value;
	std::vector<std::string> warnings; // e.g. odd-variable powers > 1 normalized to 0
};

/// Grammar:
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | var | var '^' nat | '(' expr ')'
///   rational := nat ['/' nat]
/// Whitespace is insignificant; identifiers must be declared in the table.
ParseResult parsePolynomial(const std::string &text, ConstTablePtr tab);

/// Convenience wrapper discarding warnings.
Polynomial parse(const std::string &text, ConstTablePtr tab);

/// Deterministic form: terms by (internal degree asc, exponent-lex asc),
/// reduced fraction coefficients; round-trips through parse.
std::string serialize(const Polynomial &p);

std::string serializeMonomial(const Monomial &m, const VariableTable &tab);

} // namespace hpoisson
