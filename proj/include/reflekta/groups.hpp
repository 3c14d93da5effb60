#ifndef REFLEKTA_GROUPS_HPP
#define REFLEKTA_GROUPS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "reflekta/forms.hpp"
#include "reflekta/matrix.hpp"
#include "reflekta/polynomial.hpp"

namespace reflekta {

// Invertible rational matrix acting on x-space.
class LinearMap {
 public:
  explicit LinearMap(QMatrix matrix);

  int dimension() const { return matrix_.rows(); }
  const QMatrix& matrix() const { return matrix_; }

 private:
  QMatrix matrix_;
};

// Explicit finite group of rational matrices.  Constructed by
// generate_group; elements are deduplicated, contain the identity and are
// verified closed under product and inverse.
class FiniteMatrixGroup {
 public:
  int dimension() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const QMatrix> elements() const { return elements_; }
  std::span<const QMatrix> generators() const { return generators_; }
  bool contains(const QMatrix& m) const;

  friend FiniteMatrixGroup generate_group(std::span<const LinearMap> generators, std::size_t cap);

 private:
  int dim_ = 0;
  std::vector<QMatrix> elements_;    // sorted, for membership tests
  std::vector<QMatrix> generators_;
};

inline constexpr std::size_t kDefaultGroupCap = 10000;

// Breadth-first closure under multiplication.  Throws CapExceeded when the
// closure grows past cap (infinite groups from bad input must terminate
// with a diagnostic) and SingularGenerator for non-invertible input.
FiniteMatrixGroup generate_group(std::span<const LinearMap> generators,
                                 std::size_t cap = kDefaultGroupCap);

// True iff g is an involution fixing a hyperplane pointwise:
// g^2 = id and rank(g - id) = 1.
bool is_reflection(const QMatrix& g);

std::size_t count_reflections(const FiniteMatrixGroup& group);

// (g.p)(x) = p(g^{-1} x); a left action.
Polynomial act(const QMatrix& g, const Polynomial& p);

// Invariance under all generators suffices.
bool is_invariant(const Polynomial& p, const FiniteMatrixGroup& group);

// (1/|G|) sum_g g.p — the averaging projection onto invariants.
Polynomial reynolds(const Polynomial& p, const FiniteMatrixGroup& group);

// (1/|G|) sum_g g^T B g; G-invariant, positive definite when B is.
BilinearForm average_form(const BilinearForm& form, const FiniteMatrixGroup& group);

}  // namespace reflekta

#endif
