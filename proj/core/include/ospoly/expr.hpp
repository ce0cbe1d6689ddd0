#pragma once

#include "ospoly/graded.hpp"

#include <string>

namespace ospoly {

// Recursive-descent parser for linear expressions over the tokens
// F G H P Q U V tau t l, rationals "p/q", + - * ^ and parentheses.
// Juxtaposition is not multiplication; tokens are case-sensitive.
// Tokens of the wrong presentation raise CaseMismatchError, anything
// unreadable raises ParseError with its position.
GradedElement parse_expression(const std::string& text, AlgebraCase cas);

} // namespace ospoly
