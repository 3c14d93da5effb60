#ifndef REFLEKTA_FORMS_HPP
#define REFLEKTA_FORMS_HPP

#include <vector>

#include "reflekta/matrix.hpp"
#include "reflekta/polynomial.hpp"

namespace reflekta {

// Symmetric nonsingular rational bilinear form on x-space.  The Euclidean
// dot product is the identity matrix; indefinite signatures are allowed so
// that non-Euclidean systems are first-class.
class BilinearForm {
 public:
  explicit BilinearForm(QMatrix matrix);

  static BilinearForm euclidean(int n) { return BilinearForm(QMatrix::identity(n)); }

  int dimension() const { return matrix_.rows(); }
  const QMatrix& matrix() const { return matrix_; }
  const Rational& entry(int i, int j) const { return matrix_.at(i, j); }
  const Rational& determinant() const { return det_; }

 private:
  QMatrix matrix_;
  Rational det_;
};

// grad(p) . grad(q) with respect to B: sum_ij  dp/dx_i B_ij dq/dx_j.
Polynomial gradient_product(const Polynomial& p, const Polynomial& q, const BilinearForm& form);

// sum_ij B_ij d2p/dx_i dx_j.
Polynomial laplacian(const Polynomial& p, const BilinearForm& form);

// Symmetric matrix of u-space polynomials: the lifted contravariant metric
// g^{ij}(u) with pullback grad(I^i).grad(I^j).
class CodomainMetric {
 public:
  CodomainMetric(Space space, std::vector<std::vector<Polynomial>> entries);

  int dimension() const { return space_.dim; }
  Space space() const { return space_; }
  const Polynomial& entry(int i, int j) const { return entries_[i][j]; }

 private:
  Space space_;
  std::vector<std::vector<Polynomial>> entries_;
};

// sum_ij da/du_i db/du_j g^{ij}.
Polynomial codomain_gradient_product(const Polynomial& a, const Polynomial& b,
                                     const CodomainMetric& metric);

struct CovariantLaplacian {
  bool is_polynomial;
  Polynomial value;  // the Laplacian when is_polynomial, else the failed dividend
};

// sum_i d/du_i (grad u^i (r))  -  1/2 (grad log delta)(r), where the log
// term is realized as the exact division (grad delta . grad r) / delta.
// The identity holds in the fraction field; a failed division is reported,
// not thrown.
CovariantLaplacian covariant_laplacian(const Polynomial& r, const CodomainMetric& metric,
                                       const Polynomial& delta);

struct LogDerivation {
  bool is_derivation;
  Polynomial value;  // sigma with grad(lambda)(rho) = sigma*lambda, else the witness
};

// grad log lambda applied to rho: succeeds iff lambda divides
// grad(lambda).grad(rho) exactly.
LogDerivation log_derivation_apply(const Polynomial& lambda, const Polynomial& rho,
                                   const CodomainMetric& metric);

}  // namespace reflekta

#endif
