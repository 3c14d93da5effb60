#ifndef REFLEKTA_RATIONAL_HPP
#define REFLEKTA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace reflekta {

// Exact rationals, always reduced, denominator > 0.  mpq_class arithmetic
// keeps results canonical; the only entry points that need explicit
// canonicalization are the string/fraction constructors, which go through
// the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "int" or "int/uint", e.g. "-3", "3/2".  Throws ConfigError on
// malformed input or a zero denominator.
Rational rational_from_string(std::string_view text);

Rational rational_from_parts(const Integer& num, const Integer& den);

// "num" when the denominator is 1, "num/den" otherwise.
std::string to_string(const Rational& q);

}  // namespace reflekta

#endif
