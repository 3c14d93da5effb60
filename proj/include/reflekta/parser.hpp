#ifndef REFLEKTA_PARSER_HPP
#define REFLEKTA_PARSER_HPP

#include <string_view>

#include "reflekta/polynomial.hpp"

namespace reflekta {

// Grammar:
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')'
//   rational := uint ('/' uint)?
//   var      := ('x'|'u') uint
// Whitespace is insignificant; implicit multiplication ("2x1") is a syntax
// error.  The variable letter must match the space's domain and the index
// must be 1-based and at most the dimension.
Polynomial parse_polynomial(std::string_view text, Space space);

}  // namespace reflekta

#endif
