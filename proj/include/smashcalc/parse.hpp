#pragma once

#include <string>

#include "smashcalc/algebra.hpp"

namespace smashcalc {

// Grammar (whitespace ignored):
//   sum     := ['-'] pair (('+' | '-') pair)*
//   pair    := product ['#' product]          '#' only in a smash product: base # fiber
//   product := power (('*' | '/') power)*     division only by scalars
//   power   := atom ['^' ['-'] integer]       negative exponents only on scalars
//   atom    := integer | 'q' | identifier | 'd' '(' sum ')' | '(' sum ')'
// Identifiers are resolved by Algebra::lookup. The result is in normal form.
// Throws SyntaxError (with the offset) and UnknownGenerator.
Element parse_expression(const std::string& text, const Algebra& a);

// Scalar literal over Q(q): the same grammar without identifiers.
Scalar parse_scalar(const std::string& text);

}  // namespace smashcalc
