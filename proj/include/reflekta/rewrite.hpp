#ifndef REFLEKTA_REWRITE_HPP
#define REFLEKTA_REWRITE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "reflekta/catalog.hpp"
#include "reflekta/matrix.hpp"
#include "reflekta/polynomial.hpp"

namespace reflekta {

// All exponent vectors a with sum_i a_i * degrees_i = d, in descending
// lexicographic order.  Complete and duplicate-free.
std::vector<std::vector<std::uint32_t>> weighted_compositions(int d, std::span<const int> degrees);

struct LinearSolve {
  enum class Status { Unique, NoSolution, NonUnique };
  Status status;
  std::vector<Rational> solution;  // valid when Unique
};

// Fraction-free (Bareiss) elimination after clearing row denominators;
// a Unique result is verified against the residual A*x - b = 0 exactly.
// NonUnique means b is in the column space but the kernel is nontrivial.
LinearSolve linear_solve_exact(const QMatrix& a, std::span<const Rational> b);

struct Rewrite {
  enum class Status { Success, NotInSubring, BasisDependent };
  Status status;
  Polynomial expression;               // u-space; valid when Success
  std::optional<Polynomial> witness;   // failing homogeneous part otherwise
};

// Expresses p as a polynomial in the basis invariants: finds rho in u-space
// with substitute(rho, basis) == p, deciding each homogeneous part by exact
// linear algebra over the graded ansatz.  Every success is certified by a
// substitution round-trip before returning.  NonUnique solves surface as
// BasisDependent: the basis fails algebraic independence.
Rewrite express_in_basis(const Polynomial& p, const InvariantSystem& system);

}  // namespace reflekta

#endif
