#pragma once

#include <map>
#include <string>
#include <variant>

#include "skewps/series.hpp"

namespace skewps {

/// Result of an expression: a series, or a level from val(...).
using ExprValue = std::variant<SkewSeries, Level>;

/// Evaluates an expression over named series in one context.
///
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '·') unary)*
///   unary := '-' unary | power
///   power := atom ('^' integer)?
///   atom  := integer | 'x' | name | '(' expr ')' | 'val' '(' expr ')'
///          | 'inv' '(' expr ')' | '[' coefficient literals ']'
///
/// Integers are constants n·1; '[...]' is a series literal in the coefficient
/// grammar of the context's ring; inv is the two-sided inverse of a unit
/// series. Malformed input raises ParseError with the byte position and a
/// caret line; kernel errors (NotAUnit, ...) propagate unchanged.
ExprValue evaluate(const std::string& text, const Context& ctx, const std::map<std::string, SkewSeries>& names = {});

/// Canonical JSON of a result: a series, or {"level": ...} for val(...).
json expr_value_to_json(const ExprValue& v);

}  // namespace skewps
