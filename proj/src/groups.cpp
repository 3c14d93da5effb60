#include "reflekta/groups.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace reflekta {

LinearMap::LinearMap(QMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw SingularGenerator("linear map must be square");
  if (matrix_.determinant() == 0) throw SingularGenerator("linear map is singular");
}

bool FiniteMatrixGroup::contains(const QMatrix& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m, QMatrixLess{});
}

namespace {

// Full product-closure and inverse check up to order 200, sampled beyond.
void verify_group(const std::vector<QMatrix>& elements,
                  const std::set<QMatrix, QMatrixLess>& index) {
  const std::size_t n = elements.size();
  auto check_pair = [&](std::size_t i, std::size_t j) {
    if (!index.count(elements[i] * elements[j]))
      throw Error("group closure verification failed");
  };
  auto check_inverse = [&](std::size_t i) {
    if (!index.count(elements[i].inverse()))
      throw Error("group inverse verification failed");
  };
  if (n <= 200) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) check_pair(i, j);
      check_inverse(i);
    }
  } else {
    std::mt19937_64 rng(0x5a170);  // fixed seed: deterministic verification
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < 2000; ++k) check_pair(pick(rng), pick(rng));
    for (int k = 0; k < 500; ++k) check_inverse(pick(rng));
  }
}

}  // namespace

FiniteMatrixGroup generate_group(std::span<const LinearMap> generators, std::size_t cap) {
  if (generators.empty()) throw SingularGenerator("need at least one generator");
  if (cap < 1) throw Error("group cap must be at least 1");
  int dim = generators[0].dimension();
  for (const auto& g : generators)
    if (g.dimension() != dim) throw SpaceMismatch("generators disagree in dimension");

  std::set<QMatrix, QMatrixLess> seen;
  std::deque<QMatrix> work;
  seen.insert(QMatrix::identity(dim));
  work.push_back(QMatrix::identity(dim));
  while (!work.empty()) {
    QMatrix e = std::move(work.front());
    work.pop_front();
    for (const auto& g : generators) {
      QMatrix product = e * g.matrix();
      if (seen.insert(product).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure exceeds cap of " + std::to_string(cap));
        work.push_back(std::move(product));
      }
    }
  }

  FiniteMatrixGroup group;
  group.dim_ = dim;
  group.elements_.assign(seen.begin(), seen.end());
  group.generators_.reserve(generators.size());
  for (const auto& g : generators) group.generators_.push_back(g.matrix());
  verify_group(group.elements_, seen);
  return group;
}

bool is_reflection(const QMatrix& g) {
  if (!g.is_square()) return false;
  int n = g.rows();
  QMatrix id = QMatrix::identity(n);
  if (!(g * g == id)) return false;
  QMatrix diff = g + id * Rational(-1);
  return diff.rank() == 1;
}

std::size_t count_reflections(const FiniteMatrixGroup& group) {
  std::size_t count = 0;
  for (const auto& g : group.elements())
    if (is_reflection(g)) ++count;
  return count;
}

namespace {

// p(m x): substitute each variable by the corresponding row of m.
Polynomial apply_matrix(const QMatrix& m, const Polynomial& p) {
  int n = p.dim();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    Polynomial row(p.space());
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) != 0) row += Polynomial::variable(p.space(), j) * m.at(i, j);
    images.push_back(std::move(row));
  }
  return compose(p, images);
}

}  // namespace

Polynomial act(const QMatrix& g, const Polynomial& p) {
  if (p.space().domain != Domain::X) throw SpaceMismatch("group action is defined on x-space");
  if (g.rows() != p.dim()) throw SpaceMismatch("group element dimension mismatch");
  return apply_matrix(g.inverse(), p);
}

bool is_invariant(const Polynomial& p, const FiniteMatrixGroup& group) {
  if (p.dim() != group.dimension()) throw SpaceMismatch("invariance check dimension mismatch");
  for (const auto& g : group.generators())
    if (!(act(g, p) == p)) return false;
  return true;
}

Polynomial reynolds(const Polynomial& p, const FiniteMatrixGroup& group) {
  if (p.dim() != group.dimension()) throw SpaceMismatch("reynolds dimension mismatch");
  // sum over g of p(g^{-1}x) equals sum over h of p(h x): no inversions needed.
  Polynomial sum(p.space());
  for (const auto& h : group.elements()) sum += apply_matrix(h, p);
  return sum * Rational(1, static_cast<unsigned long>(group.order()));
}

BilinearForm average_form(const BilinearForm& form, const FiniteMatrixGroup& group) {
  if (form.dimension() != group.dimension())
    throw SpaceMismatch("form averaging dimension mismatch");
  QMatrix sum(form.dimension(), form.dimension());
  for (const auto& g : group.elements()) sum = sum + g.transpose() * form.matrix() * g;
  return BilinearForm(sum * Rational(1, static_cast<unsigned long>(group.order())));
}

}  // namespace reflekta
