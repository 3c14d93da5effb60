#ifndef REFLEKTA_ERRORS_HPP
#define REFLEKTA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reflekta {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two polynomials (or a polynomial and a form/group) live in incompatible
// spaces: different dimension or different domain tag.
struct SpaceMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// Degree of the zero polynomial is undefined.
struct ZeroPolynomial : Error {
  using Error::Error;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;  // byte offset into the input
};

struct UnknownVariable : SyntaxError {
  using SyntaxError::SyntaxError;
};

struct DimensionMismatch : SyntaxError {
  using SyntaxError::SyntaxError;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct SingularGenerator : Error {
  using Error::Error;
};

// Group closure did not terminate below the element cap.
struct CapExceeded : Error {
  using Error::Error;
};

struct ZeroDiscriminant : Error {
  using Error::Error;
};

struct UnknownSystem : Error {
  using Error::Error;
};

struct ParamOutOfRange : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace reflekta

#endif
