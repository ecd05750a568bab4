#pragma once

#include <string>

#include "mcell/group.hpp"

namespace mcell {

// Grammar (whitespace-insensitive; "+" binds tighter than "*"):
//   group := "0" | "Z" | "Z/" NAT | "Z(" PRIME "^inf)"
//          | "Z[1/" PRIME ("," PRIME)* "]" | "Q"
//          | "type(" tail ("; " PRIME ":" exp)* ")"
//          | group "+" group | group "*" group | "(" group ")"
//   exp := NAT | "inf" ; tail := NAT | "inf"
// Composite orders Z/n are stored primary-decomposed.  Free products are
// accepted only at the outermost level.  Returns the parsed expression
// without normalizing; print-then-parse is the identity on canonical text.
GroupExpr parse_group(const std::string& text);

}  // namespace mcell
