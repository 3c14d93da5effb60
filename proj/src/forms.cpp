#include "reflekta/forms.hpp"

namespace reflekta {

BilinearForm::BilinearForm(QMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw Error("bilinear form must be square");
  if (!matrix_.is_symmetric()) throw Error("bilinear form must be symmetric");
  det_ = matrix_.determinant();
  if (det_ == 0) throw SingularMatrix("bilinear form is singular");
}

Polynomial gradient_product(const Polynomial& p, const Polynomial& q, const BilinearForm& form) {
  if (p.space().domain != Domain::X || q.space().domain != Domain::X)
    throw SpaceMismatch("gradient product is defined on x-space polynomials");
  if (!(p.space() == q.space()) || p.dim() != form.dimension())
    throw SpaceMismatch("gradient product operands disagree in dimension");
  int n = p.dim();
  std::vector<Polynomial> dp, dq;
  dp.reserve(n);
  dq.reserve(n);
  for (int i = 0; i < n; ++i) {
    dp.push_back(partial_derivative(p, i));
    dq.push_back(partial_derivative(q, i));
  }
  Polynomial result(p.space());
  for (int i = 0; i < n; ++i) {
    if (dp[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      const Rational& b = form.entry(i, j);
      if (b == 0 || dq[j].is_zero()) continue;
      result += dp[i] * dq[j] * b;
    }
  }
  return result;
}

Polynomial laplacian(const Polynomial& p, const BilinearForm& form) {
  if (p.space().domain != Domain::X)
    throw SpaceMismatch("laplacian is defined on x-space polynomials");
  if (p.dim() != form.dimension()) throw SpaceMismatch("laplacian dimension mismatch");
  int n = p.dim();
  Polynomial result(p.space());
  for (int i = 0; i < n; ++i) {
    Polynomial di = partial_derivative(p, i);
    if (di.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      const Rational& b = form.entry(i, j);
      if (b == 0) continue;
      result += partial_derivative(di, j) * b;
    }
  }
  return result;
}

CodomainMetric::CodomainMetric(Space space, std::vector<std::vector<Polynomial>> entries)
    : space_(space), entries_(std::move(entries)) {
  if (space_.domain != Domain::U) throw SpaceMismatch("codomain metric lives in u-space");
  int n = space_.dim;
  if (static_cast<int>(entries_.size()) != n) throw SpaceMismatch("metric row count mismatch");
  for (const auto& row : entries_) {
    if (static_cast<int>(row.size()) != n) throw SpaceMismatch("metric column count mismatch");
    for (const auto& e : row)
      if (!(e.space() == space_)) throw SpaceMismatch("metric entry in wrong space");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(entries_[i][j] == entries_[j][i])) throw Error("codomain metric must be symmetric");
}

Polynomial codomain_gradient_product(const Polynomial& a, const Polynomial& b,
                                     const CodomainMetric& metric) {
  if (!(a.space() == metric.space()) || !(b.space() == metric.space()))
    throw SpaceMismatch("codomain gradient product operands disagree with the metric");
  int n = metric.dimension();
  std::vector<Polynomial> da, db;
  da.reserve(n);
  db.reserve(n);
  for (int i = 0; i < n; ++i) {
    da.push_back(partial_derivative(a, i));
    db.push_back(partial_derivative(b, i));
  }
  Polynomial result(a.space());
  for (int i = 0; i < n; ++i) {
    if (da[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (db[j].is_zero()) continue;
      const Polynomial& g = metric.entry(i, j);
      if (g.is_zero()) continue;
      result += da[i] * db[j] * g;
    }
  }
  return result;
}

CovariantLaplacian covariant_laplacian(const Polynomial& r, const CodomainMetric& metric,
                                       const Polynomial& delta) {
  if (!(r.space() == metric.space()) || !(delta.space() == metric.space()))
    throw SpaceMismatch("covariant laplacian operands disagree with the metric");
  if (delta.is_zero()) throw ZeroDiscriminant("covariant laplacian needs a nonzero discriminant");
  int n = metric.dimension();

  Polynomial divergence(r.space());
  for (int i = 0; i < n; ++i) {
    // grad u^i (r) = sum_j g^{ij} dr/du_j
    Polynomial flux(r.space());
    for (int j = 0; j < n; ++j) {
      Polynomial dj = partial_derivative(r, j);
      if (dj.is_zero() || metric.entry(i, j).is_zero()) continue;
      flux += metric.entry(i, j) * dj;
    }
    divergence += partial_derivative(flux, i);
  }

  Polynomial grad_delta_r = codomain_gradient_product(delta, r, metric);
  DivisionResult div = exact_divide(grad_delta_r, delta);
  if (!div.quotient) return {false, grad_delta_r};
  return {true, divergence - *div.quotient * Rational(1, 2)};
}

LogDerivation log_derivation_apply(const Polynomial& lambda, const Polynomial& rho,
                                   const CodomainMetric& metric) {
  Polynomial num = codomain_gradient_product(lambda, rho, metric);
  DivisionResult div = exact_divide(num, lambda);
  if (!div.quotient) return {false, num};
  return {true, *div.quotient};
}

}  // namespace reflekta
