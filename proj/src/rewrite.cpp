#include "reflekta/rewrite.hpp"

#include <map>
#include <utility>

namespace reflekta {

namespace {

void compositions_rec(int d, std::span<const int> degrees, std::size_t i,
                      std::vector<std::uint32_t>& current,
                      std::vector<std::vector<std::uint32_t>>& out) {
  if (i + 1 == degrees.size()) {
    if (d % degrees[i] == 0) {
      current[i] = static_cast<std::uint32_t>(d / degrees[i]);
      out.push_back(current);
      current[i] = 0;
    }
    return;
  }
  // Highest exponent first: descending lexicographic output order.
  for (int e = d / degrees[i]; e >= 0; --e) {
    current[i] = static_cast<std::uint32_t>(e);
    compositions_rec(d - e * degrees[i], degrees, i + 1, current, out);
  }
  current[i] = 0;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> weighted_compositions(int d, std::span<const int> degrees) {
  if (d < 0) throw Error("weighted_compositions: negative degree");
  for (int deg : degrees)
    if (deg < 1) throw Error("weighted_compositions: degrees must be positive");
  std::vector<std::vector<std::uint32_t>> out;
  if (degrees.empty()) return out;
  std::vector<std::uint32_t> current(degrees.size(), 0);
  compositions_rec(d, degrees, 0, current, out);
  return out;
}

namespace {

struct BareissResult {
  std::vector<std::vector<Integer>> m;  // echelon form of [A|b]
  std::vector<int> pivot_row_of_col;    // -1 when the column has no pivot
  int pivot_count = 0;
};

BareissResult bareiss_eliminate(const QMatrix& a, std::span<const Rational> b) {
  const int rows = a.rows();
  const int cols = a.cols();
  BareissResult res;
  res.m.assign(rows, std::vector<Integer>(cols + 1, 0));
  res.pivot_row_of_col.assign(cols, -1);

  // Clear denominators row by row; row scaling preserves the solution set.
  for (int i = 0; i < rows; ++i) {
    Integer lcm = 1;
    for (int j = 0; j < cols; ++j) lcm = ::lcm(lcm, a.at(i, j).get_den());
    lcm = ::lcm(lcm, b[i].get_den());
    for (int j = 0; j < cols; ++j) {
      Rational scaled = a.at(i, j) * lcm;
      res.m[i][j] = scaled.get_num();
    }
    Rational scaled = b[i] * lcm;
    res.m[i][cols] = scaled.get_num();
  }

  Integer prev = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (res.m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) std::swap(res.m[pivot], res.m[row]);
    for (int r = row + 1; r < rows; ++r) {
      for (int j = col + 1; j <= cols; ++j) {
        Integer t = res.m[row][col] * res.m[r][j] - res.m[r][col] * res.m[row][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        res.m[r][j] = std::move(t);
      }
      res.m[r][col] = 0;
    }
    prev = res.m[row][col];
    res.pivot_row_of_col[col] = row;
    ++row;
  }
  res.pivot_count = row;
  return res;
}

}  // namespace

LinearSolve linear_solve_exact(const QMatrix& a, std::span<const Rational> b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw Error("linear_solve_exact: right-hand side length mismatch");
  const int rows = a.rows();
  const int cols = a.cols();
  BareissResult e = bareiss_eliminate(a, b);

  // A zero A-row with a nonzero augmented entry is inconsistent.
  for (int i = e.pivot_count; i < rows; ++i)
    if (e.m[i][cols] != 0) return {LinearSolve::Status::NoSolution, {}};
  if (e.pivot_count < cols) return {LinearSolve::Status::NonUnique, {}};

  std::vector<Rational> x(cols, Rational(0));
  for (int col = cols - 1; col >= 0; --col) {
    int r = e.pivot_row_of_col[col];
    Rational acc(e.m[r][cols]);
    for (int j = col + 1; j < cols; ++j) acc -= Rational(e.m[r][j]) * x[j];
    x[col] = acc / Rational(e.m[r][col]);
  }

  // Exact residual check against the original system.
  for (int i = 0; i < rows; ++i) {
    Rational acc(0);
    for (int j = 0; j < cols; ++j) acc += a.at(i, j) * x[j];
    if (acc != b[i]) throw Error("linear_solve_exact: residual check failed");
  }
  return {LinearSolve::Status::Unique, std::move(x)};
}

namespace {

// Solve one homogeneous graded piece.
Rewrite express_homogeneous(const Polynomial& p, const InvariantSystem& system) {
  const int d = p.degree();
  auto exponents = weighted_compositions(d, system.degrees);
  if (exponents.empty())
    return {Rewrite::Status::NotInSubring, Polynomial::zero(system.u_space()), p};

  // Expand each candidate basis power-product and index the monomials that
  // appear anywhere.
  std::vector<Polynomial> products;
  products.reserve(exponents.size());
  {
    std::vector<std::vector<Polynomial>> powers(system.basis.size());
    auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
      auto& table = powers[i];
      if (table.empty()) table.push_back(Polynomial::constant(system.x_space(), 1));
      while (table.size() <= k) table.push_back(table.back() * system.basis[i]);
      return table[k];
    };
    for (const auto& a : exponents) {
      Polynomial prod = Polynomial::constant(system.x_space(), 1);
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) prod = prod * power_of(i, a[i]);
      products.push_back(std::move(prod));
    }
  }

  std::map<Monomial, int, GrevlexLess> row_of;
  auto index_monomials = [&](const Polynomial& q) {
    for (const auto& [m, c] : q.terms()) row_of.try_emplace(m, 0);
  };
  for (const auto& q : products) index_monomials(q);
  index_monomials(p);
  int next = 0;
  for (auto& [m, idx] : row_of) idx = next++;

  QMatrix a(next, static_cast<int>(products.size()));
  for (std::size_t col = 0; col < products.size(); ++col)
    for (const auto& [m, c] : products[col].terms()) a.at(row_of[m], static_cast<int>(col)) = c;
  std::vector<Rational> b(next, Rational(0));
  for (const auto& [m, c] : p.terms()) b[row_of[m]] = c;

  LinearSolve solve = linear_solve_exact(a, b);
  if (solve.status == LinearSolve::Status::NoSolution)
    return {Rewrite::Status::NotInSubring, Polynomial::zero(system.u_space()), p};
  if (solve.status == LinearSolve::Status::NonUnique)
    return {Rewrite::Status::BasisDependent, Polynomial::zero(system.u_space()), p};

  Polynomial rho(system.u_space());
  for (std::size_t i = 0; i < exponents.size(); ++i)
    rho.add_term(Monomial(std::vector<std::uint32_t>(exponents[i].begin(), exponents[i].end())),
                 solve.solution[i]);
  return {Rewrite::Status::Success, std::move(rho), std::nullopt};
}

}  // namespace

Rewrite express_in_basis(const Polynomial& p, const InvariantSystem& system) {
  if (!(p.space() == system.x_space()))
    throw SpaceMismatch("express_in_basis expects an x-space polynomial of the system dimension");
  Polynomial rho(system.u_space());
  for (const auto& [deg, part] : homogeneous_parts(p)) {
    Rewrite piece = express_homogeneous(part, system);
    if (piece.status != Rewrite::Status::Success) return piece;
    rho += piece.expression;
  }
  // A success that fails the substitution round-trip is a bug, not a result.
  if (!(substitute(rho, system.basis) == p))
    throw Error("express_in_basis: certification round-trip failed");
  return {Rewrite::Status::Success, std::move(rho), std::nullopt};
}

}  // namespace reflekta
