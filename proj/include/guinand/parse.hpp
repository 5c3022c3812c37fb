#pragma once

// Text syntax for test functions:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-') factor | number | 'i' | 'pi' | 'sqrt2'
//           | 't' ('^' integer)? | 'exp' '(' gauss ')' | '(' expr ')'
//   gauss  := '-'? g (('*'|'/') g)*      with g := number | 'pi' | 't^2'
//
// The exponent must contain t^2 exactly once; exp(-pi*q*t^2) stores scale q.
// Division is only allowed by constants. Whitespace is ignored.

#include <string>
#include <string_view>

#include "guinand/schwartz.hpp"

namespace guinand {

struct ParsedExpr {
  std::string source;
  GaussPoly value;
};

/// Throws ParseError (with byte offset) on syntax errors, a nonpositive
/// Gaussian scale, or a nonzero polynomial part without a Gaussian factor.
ParsedExpr parse(std::string_view expr);

/// Inverse of parse: coefficients and scales printed with 17 significant
/// digits, so parse(print(f)) reproduces f bit for bit.
std::string print(const GaussPoly& f);

}  // namespace guinand
