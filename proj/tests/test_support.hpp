#ifndef REFLEKTA_TEST_SUPPORT_HPP
#define REFLEKTA_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "reflekta/matrix.hpp"
#include "reflekta/polynomial.hpp"

namespace reflekta::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return rational_from_parts(num(rng), den(rng));
}

inline Monomial random_monomial(int dim, int max_degree, Rng& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  Monomial m = Monomial::unit(dim);
  int budget = deg(rng);
  std::uniform_int_distribution<int> var(0, dim - 1);
  for (int i = 0; i < budget; ++i) m.exp[var(rng)] += 1;
  return m;
}

inline Polynomial random_polynomial(Space space, int max_degree, Rng& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> count(0, max_terms);
  Polynomial p(space);
  int terms = count(rng);
  for (int i = 0; i < terms; ++i)
    p.add_term(random_monomial(space.dim, max_degree, rng), random_rational(rng));
  return p;
}

// Brute-force product oracle: plain term-pair convolution into a flat list,
// combined by linear search.  Deliberately avoids the production term map.
inline std::vector<std::pair<Monomial, Rational>> convolution_oracle(const Polynomial& a,
                                                                     const Polynomial& b) {
  std::vector<std::pair<Monomial, Rational>> acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma * mb;
      bool found = false;
      for (auto& [mm, cc] : acc)
        if (mm == m) {
          cc += ca * cb;
          found = true;
          break;
        }
      if (!found) acc.emplace_back(m, ca * cb);
    }
  std::erase_if(acc, [](const auto& t) { return t.second == 0; });
  return acc;
}

inline bool matches_oracle(const Polynomial& p,
                           const std::vector<std::pair<Monomial, Rational>>& oracle) {
  if (p.term_count() != oracle.size()) return false;
  for (const auto& [m, c] : oracle)
    if (p.coefficient(m) != c) return false;
  return true;
}

// Cofactor-expansion determinant, the oracle for the elimination-based
// solver (Cramer's rule / adjugate formula).
inline Rational cofactor_determinant(const QMatrix& m) {
  int n = m.rows();
  if (n == 1) return m.at(0, 0);
  Rational sum(0);
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    QMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Rational term = m.at(0, j) * cofactor_determinant(minor);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

inline std::vector<Rational> cramer_solve(const QMatrix& a, const std::vector<Rational>& b) {
  Rational det = cofactor_determinant(a);
  std::vector<Rational> x;
  for (int j = 0; j < a.cols(); ++j) {
    QMatrix replaced = a;
    for (int i = 0; i < a.rows(); ++i) replaced.at(i, j) = b[i];
    x.push_back(cofactor_determinant(replaced) / det);
  }
  return x;
}

}  // namespace reflekta::testing

#endif
