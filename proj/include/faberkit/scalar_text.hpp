#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "faberkit/complex.hpp"
#include "faberkit/qsqrt5.hpp"
#include "faberkit/rational.hpp"

namespace faberkit {

// Exact scalar grammar shared by the CLI and JSON inputs.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary := ('+' | '-') unary | atom
//   atom  := integer | decimal | 'sqrt5' | 'sqrt(5)' | 'i' | '(' expr ')'
//
// Every string produced by the str() members of Rational, QSqrt5 and
// Complex<> parses back to the same value, as do the forms "3/4",
// "1/2 + -1/2*sqrt5" and "2+i".
ComplexQ5 parse_scalar(std::string_view text);

Rational parse_rational(std::string_view text);
QSqrt5 parse_qsqrt5(std::string_view text);
ComplexRational parse_complex_rational(std::string_view text);

// Narrowing conversions; throw DomainError if the value leaves the subfield.
Rational narrow_to_rational(const ComplexQ5& x);
QSqrt5 narrow_to_qsqrt5(const ComplexQ5& x);
ComplexRational narrow_to_complex_rational(const ComplexQ5& x);

// Comma-separated coefficient list c_0, c_1, ...
std::vector<ComplexQ5> parse_coefficient_list(std::string_view text);

}  // namespace faberkit
