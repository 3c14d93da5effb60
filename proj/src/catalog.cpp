#include "reflekta/catalog.hpp"

#include <utility>

#include "reflekta/parser.hpp"

namespace reflekta {

void validate_system(const InvariantSystem& system) {
  int n = system.dimension;
  if (static_cast<int>(system.basis.size()) != n)
    throw Error(system.display_name() + ": basis length differs from dimension");
  if (system.form.dimension() != n)
    throw Error(system.display_name() + ": form dimension differs from system dimension");
  if (static_cast<int>(system.degrees.size()) != n)
    throw Error(system.display_name() + ": degree list length differs from dimension");
  for (int i = 0; i < n; ++i) {
    const Polynomial& p = system.basis[i];
    if (!(p.space() == system.x_space()))
      throw SpaceMismatch(system.display_name() + ": basis element in wrong space");
    auto [deg, homogeneous] = degree_and_homogeneity(p);
    if (!homogeneous || deg != system.degrees[i])
      throw Error(system.display_name() + ": basis element " + std::to_string(i + 1) +
                  " is not homogeneous of degree " + std::to_string(system.degrees[i]));
  }
  if (system.group) {
    if (system.group->dimension() != n)
      throw SpaceMismatch(system.display_name() + ": group dimension mismatch");
    for (const auto& p : system.basis)
      if (!is_invariant(p, *system.group))
        throw Error(system.display_name() + ": basis element not group-invariant");
  }
  if (system.known_metric && system.known_discriminant_factors) {
    // Stored factorizations are verified multiplicatively, never trusted.
    std::vector<std::vector<Polynomial>> rows;
    for (int i = 0; i < n; ++i) {
      rows.emplace_back();
      for (int j = 0; j < n; ++j) rows.back().push_back(system.known_metric->entry(i, j));
    }
    Polynomial det = polynomial_determinant(rows, system.u_space());
    Polynomial product = Polynomial::constant(system.u_space(), 1);
    for (const auto& [factor, mult] : *system.known_discriminant_factors)
      product = product * pow(factor, static_cast<unsigned>(mult));
    DivisionResult q = exact_divide(det, product);
    if (!q.quotient || q.quotient->is_zero() || !q.quotient->is_constant())
      throw Error(system.display_name() +
                  ": stored discriminant factorization does not match the metric determinant");
  }
}

namespace {

Polynomial px(const std::string& text, int n) { return parse_polynomial(text, xspace(n)); }
Polynomial pu(const std::string& text, int n) { return parse_polynomial(text, uspace(n)); }

QMatrix permutation_swap(int n, int a, int b) {
  QMatrix m = QMatrix::identity(n);
  m.at(a, a) = 0;
  m.at(b, b) = 0;
  m.at(a, b) = 1;
  m.at(b, a) = 1;
  return m;
}

std::vector<LinearMap> symmetric_group_generators(int n) {
  std::vector<LinearMap> gens;
  for (int i = 0; i + 1 < n; ++i) gens.emplace_back(permutation_swap(n, i, i + 1));
  return gens;
}

FiniteMatrixGroup symmetric_group(int n) {
  auto gens = symmetric_group_generators(n);
  return generate_group(gens);
}

FiniteMatrixGroup hyperoctahedral_group(int n) {
  auto gens = symmetric_group_generators(n);
  QMatrix flip = QMatrix::identity(n);
  flip.at(0, 0) = -1;
  gens.emplace_back(flip);
  return generate_group(gens);
}

FiniteMatrixGroup demihyperoctahedral_group(int n) {
  auto gens = symmetric_group_generators(n);
  QMatrix swap_negate = QMatrix::identity(n);
  swap_negate.at(0, 0) = 0;
  swap_negate.at(1, 1) = 0;
  swap_negate.at(0, 1) = -1;
  swap_negate.at(1, 0) = -1;
  gens.emplace_back(swap_negate);
  return generate_group(gens);
}

// Elementary symmetric polynomials e_1..e_n evaluated at the squares of
// the variables.
std::vector<Polynomial> elementary_symmetric_of_squares(int n) {
  Space space = xspace(n);
  std::vector<Polynomial> e(n + 1, Polynomial::zero(space));
  e[0] = Polynomial::constant(space, 1);
  for (int v = 0; v < n; ++v) {
    Polynomial sq = Polynomial::variable(space, v) * Polynomial::variable(space, v);
    for (int k = std::min(v + 1, n); k >= 1; --k) e[k] += e[k - 1] * sq;
  }
  return {e.begin() + 1, e.end()};
}

std::vector<Polynomial> power_sums(int n) {
  Space space = xspace(n);
  std::vector<Polynomial> p;
  for (int k = 1; k <= n; ++k) {
    Polynomial sum(space);
    for (int v = 0; v < n; ++v) sum += pow(Polynomial::variable(space, v), k);
    p.push_back(std::move(sum));
  }
  return p;
}

// Re((x + i y)^m): alternating even-j binomial expansion.
Polynomial real_part_of_power(int m) {
  Space space = xspace(2);
  Polynomial result(space);
  Integer binom = 1;  // C(m, j), updated incrementally
  for (int j = 0; j <= m; ++j) {
    if (j % 2 == 0) {
      Rational coeff(binom);
      if (j % 4 == 2) coeff = -coeff;
      result.add_term(Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(m - j),
                                                          static_cast<std::uint32_t>(j)}),
                      coeff);
    }
    binom = binom * (m - j) / (j + 1);
  }
  return result;
}

CodomainMetric dihedral_metric(int m) {
  Space u2d = uspace(2);
  Polynomial g11 = pu("4*u1", 2);
  Polynomial g12 = Polynomial::variable(u2d, 1) * Rational(2 * m);
  Polynomial g22 = pow(Polynomial::variable(u2d, 0), static_cast<unsigned>(m - 1)) *
                   Rational(static_cast<long>(m) * m);
  return CodomainMetric(u2d, {{g11, g12}, {g12, g22}});
}

InvariantSystem powersum_system(int n, std::string name, int param) {
  InvariantSystem sys{std::move(name), param,           n, BilinearForm::euclidean(n),
                      power_sums(n),   std::vector<int>{}};
  for (int k = 1; k <= n; ++k) sys.degrees.push_back(k);
  sys.group = symmetric_group(n);
  return sys;
}

InvariantSystem dihedral_system(int m) {
  InvariantSystem sys{"I2", m, 2, BilinearForm::euclidean(2), {}, {2, m}};
  sys.basis.push_back(px("x1^2 + x2^2", 2));
  sys.basis.push_back(real_part_of_power(m));
  // The full dihedral symmetry of this basis has rational matrices only
  // for m = 2 and m = 4; other m admit no faithful rational realization in
  // these coordinates, so no group is attached and group-side checks are
  // reported SKIPPED.
  if (m == 2) {
    std::vector<LinearMap> gens;
    QMatrix fx = QMatrix::identity(2);
    fx.at(0, 0) = -1;
    QMatrix fy = QMatrix::identity(2);
    fy.at(1, 1) = -1;
    gens.emplace_back(fx);
    gens.emplace_back(fy);
    sys.group = generate_group(gens);
  } else if (m == 4) {
    // Two mirrors at 45 degrees generate the full dihedral group of order 8.
    std::vector<LinearMap> gens;
    QMatrix swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    QMatrix fy = QMatrix::identity(2);
    fy.at(1, 1) = -1;
    gens.emplace_back(swap);
    gens.emplace_back(fy);
    sys.group = generate_group(gens);
  }
  sys.known_metric = dihedral_metric(m);
  if (m % 2 == 1) {
    Polynomial factor = pow(Polynomial::variable(uspace(2), 0), static_cast<unsigned>(m)) -
                        pow(Polynomial::variable(uspace(2), 1), 2);
    sys.known_discriminant_factors = {{{factor, 1}}};
  }
  return sys;
}

InvariantSystem hyperoctahedral_system(int n) {
  InvariantSystem sys{"B", n, n, BilinearForm::euclidean(n), elementary_symmetric_of_squares(n), {}};
  for (int k = 1; k <= n; ++k) sys.degrees.push_back(2 * k);
  sys.group = hyperoctahedral_group(n);
  if (n == 2) {
    Space u2d = uspace(2);
    Polynomial g11 = pu("4*u1", 2);
    Polynomial g12 = pu("8*u2", 2);
    Polynomial g22 = pu("4*u1*u2", 2);
    sys.known_metric = CodomainMetric(u2d, {{g11, g12}, {g12, g22}});
    sys.known_discriminant_factors = {{{pu("u2", 2), 1}, {pu("u1^2 - 4*u2", 2), 1}}};
  }
  return sys;
}

InvariantSystem demihyperoctahedral_system(int n) {
  InvariantSystem sys{"D", n, n, BilinearForm::euclidean(n), {}, {}};
  auto e = elementary_symmetric_of_squares(n);
  sys.basis.assign(e.begin(), e.end() - 1);
  Polynomial prod = Polynomial::constant(xspace(n), 1);
  for (int v = 0; v < n; ++v) prod = prod * Polynomial::variable(xspace(n), v);
  sys.basis.push_back(prod);
  for (int k = 1; k < n; ++k) sys.degrees.push_back(2 * k);
  sys.degrees.push_back(n);
  sys.group = demihyperoctahedral_group(n);
  return sys;
}

InvariantSystem minkowski_counterexample() {
  std::vector<Rational> diag{1, -1};
  InvariantSystem sys{"counterexample-minkowski",
                      std::nullopt,
                      2,
                      BilinearForm(QMatrix::diagonal(diag)),
                      {px("x1 + x2", 2), px("x1^2 - x2^2", 2)},
                      {1, 2}};
  Space u2d = uspace(2);
  sys.known_metric = CodomainMetric(
      u2d, {{Polynomial::zero(u2d), pu("2*u1", 2)}, {pu("2*u1", 2), pu("4*u2", 2)}});
  sys.known_discriminant_factors = {{{pu("u1", 2), 2}}};
  return sys;
}

void require_param(const std::string& name, std::optional<int> param, int lo, int hi) {
  if (!param)
    throw ParamOutOfRange(name + " requires a parameter in " + std::to_string(lo) + ".." +
                          std::to_string(hi));
  if (*param < lo || *param > hi)
    throw ParamOutOfRange(name + " parameter " + std::to_string(*param) + " outside " +
                          std::to_string(lo) + ".." + std::to_string(hi));
}

}  // namespace

std::vector<CatalogEntry> list_systems() {
  return {
      {"A", std::pair{2, 4}, "S_(n) power sums (type-A fixture, non-essential action)"},
      {"B", std::pair{2, 4}, "elementary symmetric polynomials of squares, signed permutations"},
      {"D", std::pair{3, 4}, "even-signed permutations: e_1..e_(n-1) of squares and x1*...*xn"},
      {"I2", std::pair{2, 12}, "dihedral pair x^2+y^2, Re((x+iy)^m); group attached for m in {2,4}"},
      {"Sn-powersums", std::pair{2, 4}, "power sums p_1..p_n under the symmetric group"},
      {"counterexample-minkowski", std::nullopt,
       "x1+x2, x1^2-x2^2 against the indefinite form diag(1,-1)"},
  };
}

InvariantSystem build_system(const std::string& name, std::optional<int> param) {
  InvariantSystem sys = [&] {
    if (name == "Sn-powersums") {
      require_param(name, param, 2, 4);
      return powersum_system(*param, "Sn-powersums", *param);
    }
    if (name == "A") {
      // Same fixture as Sn-powersums: S_n on R^n with the power-sum basis.
      require_param(name, param, 2, 4);
      return powersum_system(*param, "A", *param);
    }
    if (name == "B") {
      require_param(name, param, 2, 4);
      return hyperoctahedral_system(*param);
    }
    if (name == "D") {
      require_param(name, param, 3, 4);
      return demihyperoctahedral_system(*param);
    }
    if (name == "I2") {
      require_param(name, param, 2, 12);
      return dihedral_system(*param);
    }
    if (name == "counterexample-minkowski") {
      if (param) throw ParamOutOfRange("counterexample-minkowski takes no parameter");
      return minkowski_counterexample();
    }
    throw UnknownSystem("unknown system '" + name + "'");
  }();
  validate_system(sys);
  return sys;
}

}  // namespace reflekta
