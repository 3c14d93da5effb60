#include "reflekta/parser.hpp"

#include <cctype>
#include <string>

#include "reflekta/errors.hpp"

namespace reflekta {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  Space space;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw SyntaxError(std::string("expected ") + what, pos);
  }

  Integer read_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw SyntaxError("expected a number", pos);
    return Integer(std::string(text.substr(start, pos - start)), 10);
  }

  unsigned read_small_uint() {
    std::size_t where = pos;
    Integer v = read_uint();
    if (!v.fits_uint_p()) throw SyntaxError("exponent too large", where);
    return static_cast<unsigned>(v.get_ui());
  }

  Polynomial parse_var() {
    std::size_t start = pos;
    char letter = text[pos++];
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw SyntaxError("variable letter must be followed by an index", pos);
    Integer idx = read_uint();
    if (letter != space.letter())
      throw UnknownVariable(std::string("variable '") + letter + idx.get_str() +
                                "' does not belong to this space",
                            start);
    if (idx < 1 || idx > space.dim)
      throw DimensionMismatch("variable index " + idx.get_str() + " outside 1.." +
                                  std::to_string(space.dim),
                              start);
    return Polynomial::variable(space, static_cast<int>(idx.get_ui()) - 1);
  }

  Polynomial parse_base() {
    skip_ws();
    if (pos >= text.size()) throw SyntaxError("unexpected end of input", pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial inner = parse_expr();
      expect(')', "')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = read_uint();
      if (accept('/')) {
        std::size_t where = pos;
        Integer den = read_uint();
        if (den == 0) throw SyntaxError("zero denominator", where);
        return Polynomial::constant(space, rational_from_parts(num, den));
      }
      return Polynomial::constant(space, Rational(num));
    }
    if (c == 'x' || c == 'u') return parse_var();
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (accept('^')) return pow(base, read_small_uint());
    return base;
  }

  Polynomial parse_term() {
    Polynomial p = parse_factor();
    while (accept('*')) p = p * parse_factor();
    return p;
  }

  Polynomial parse_expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial p = parse_term();
    if (negate) p = -p;
    while (true) {
      if (accept('+')) {
        p += parse_term();
      } else if (accept('-')) {
        p -= parse_term();
      } else {
        break;
      }
    }
    return p;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, Space space) {
  Parser parser{text, 0, space};
  Polynomial p = parser.parse_expr();
  if (!parser.at_end()) throw SyntaxError("trailing input", parser.pos);
  return p;
}

}  // namespace reflekta
