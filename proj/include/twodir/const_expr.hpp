#pragma once

#include <string_view>

namespace twodir {

/// Evaluates a constant arithmetic expression:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | primary
///   primary := number | '(' expr ')' | 'sqrt' '(' expr ')'
///
/// Whitespace is ignored. Throws ExprError on syntax errors, division by
/// zero and sqrt of a negative value.
double parse_const_expr(std::string_view text);

}  // namespace twodir
