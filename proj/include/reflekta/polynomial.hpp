#ifndef REFLEKTA_POLYNOMIAL_HPP
#define REFLEKTA_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reflekta/errors.hpp"
#include "reflekta/rational.hpp"

namespace reflekta {

// Polynomials live either in the domain (variables x1..xn) or in the
// codomain of the invariant map (variables u1..un).  The tag prevents
// accidental mixing of the two rings.
enum class Domain : std::uint8_t { X, U };

struct Space {
  Domain domain;
  int dim;

  bool operator==(const Space& other) const = default;
  char letter() const { return domain == Domain::X ? 'x' : 'u'; }
};

inline Space xspace(int n) { return Space{Domain::X, n}; }
inline Space uspace(int n) { return Space{Domain::U, n}; }

// Exponent vector; length always equals the dimension of its space.
struct Monomial {
  std::vector<std::uint32_t> exp;

  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> e) : exp(std::move(e)) {}
  static Monomial unit(int n) { return Monomial(std::vector<std::uint32_t>(n, 0)); }
  static Monomial variable(int n, int i);

  int degree() const;
  bool operator==(const Monomial& other) const = default;
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // other / this; caller must check divides() first
  Monomial quotient_into(const Monomial& other) const;
};

// Graded reverse lexicographic: first by total degree, ties broken by the
// rightmost differing exponent (larger exponent there sorts lower).
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexLess>;

  explicit Polynomial(Space space) : space_(space) {}

  static Polynomial zero(Space space) { return Polynomial(space); }
  static Polynomial constant(Space space, const Rational& c);
  static Polynomial variable(Space space, int i);  // 0-based index
  static Polynomial term(Space space, Monomial m, const Rational& c);

  Space space() const { return space_; }
  int dim() const { return space_.dim; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const;
  // grevlex-largest term; polynomial must be nonzero
  const std::pair<const Monomial, Rational>& leading_term() const;

  // max total degree; throws ZeroPolynomial on the zero polynomial
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator*(const Rational& c) const;

  bool operator==(const Polynomial& other) const;

  // In-place accumulation of c * m; keeps the zero-coefficient invariant.
  void add_term(const Monomial& m, const Rational& c);

  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

 private:
  void check_same_space(const Polynomial& other) const;

  Space space_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

// Formal partial derivative with respect to variable i (0-based).
Polynomial partial_derivative(const Polynomial& p, int i);

// (max total degree, all terms share it); throws ZeroPolynomial on zero.
std::pair<int, bool> degree_and_homogeneity(const Polynomial& p);

struct DivisionResult {
  std::optional<Polynomial> quotient;  // set iff the division is exact
  Polynomial remainder;                // nonzero witness when not divisible
};

// Exact division in the polynomial ring.  Remainder-based: a = q*b exactly
// or quotient is absent and remainder witnesses the failure.
DivisionResult exact_divide(const Polynomial& a, const Polynomial& b);

// Ring homomorphism sending variable i of p's space to images[i].  All
// images must share one space, which becomes the space of the result.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> images);

// The pullback: p must live in u-space, images in x-space.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

// Split into homogeneous components, keyed by degree; zero parts absent.
std::map<int, Polynomial> homogeneous_parts(const Polynomial& p);

// Canonical rendering in the external grammar, terms in ascending grevlex
// order ("3/2*u1*u2 - 1/2*u1^3").  parse(render(p)) == p.
std::string render(const Polynomial& p);

// Exact determinant of a square polynomial matrix by cofactor expansion.
Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m, Space space);

}  // namespace reflekta

#endif
