#include "reflekta/rational.hpp"

#include <cctype>

#include "reflekta/errors.hpp"

namespace reflekta {

Rational rational_from_string(std::string_view text) {
  if (text.empty()) throw ConfigError("empty rational literal");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool digits = false;
  bool slash = false;
  for (std::size_t k = i; k < text.size(); ++k) {
    char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else if (c == '/' && !slash && digits && k + 1 < text.size()) {
      slash = true;
      digits = false;
    } else {
      throw ConfigError("malformed rational literal '" + std::string(text) + "'");
    }
  }
  if (!digits) throw ConfigError("malformed rational literal '" + std::string(text) + "'");
  Rational q(std::string(text), 10);
  if (q.get_den() == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Rational rational_from_parts(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace reflekta
