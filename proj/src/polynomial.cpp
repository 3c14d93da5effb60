#include "reflekta/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace reflekta {

Monomial Monomial::variable(int n, int i) {
  Monomial m = unit(n);
  m.exp[i] = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += static_cast<int>(e);
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += other.exp[i];
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::quotient_into(const Monomial& other) const {
  Monomial r = other;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= exp[i];
  return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = a.exp.size(); i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  }
  return false;
}

Polynomial Polynomial::constant(Space space, const Rational& c) {
  Polynomial p(space);
  p.add_term(Monomial::unit(space.dim), c);
  return p;
}

Polynomial Polynomial::variable(Space space, int i) {
  if (i < 0 || i >= space.dim)
    throw IndexOutOfRange("variable index " + std::to_string(i) + " outside dimension " +
                          std::to_string(space.dim));
  Polynomial p(space);
  p.add_term(Monomial::variable(space.dim, i), 1);
  return p;
}

Polynomial Polynomial::term(Space space, Monomial m, const Rational& c) {
  if (static_cast<int>(m.exp.size()) != space.dim)
    throw SpaceMismatch("monomial length does not match space dimension");
  Polynomial p(space);
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
  return *terms_.rbegin();
}

int Polynomial::degree() const {
  if (terms_.empty()) throw ZeroPolynomial("degree of the zero polynomial is undefined");
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

void Polynomial::check_same_space(const Polynomial& other) const {
  if (!(space_ == other.space_))
    throw SpaceMismatch("operands live in different spaces (" +
                        std::string(1, space_.letter()) + std::to_string(space_.dim) + " vs " +
                        std::string(1, other.space_.letter()) + std::to_string(other.space_.dim) + ")");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(space_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r = *this;
  r -= other;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_space(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_space(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_space(other);
  Polynomial r(space_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(space_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return space_ == other.space_ && terms_ == other.terms_;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(base.space(), 1);
  Polynomial sq = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result = result * sq;
    e >>= 1u;
    if (e > 0) sq = sq * sq;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, int i) {
  if (i < 0 || i >= p.dim())
    throw IndexOutOfRange("derivative index " + std::to_string(i) + " outside dimension " +
                          std::to_string(p.dim()));
  Polynomial r(p.space());
  for (const auto& [m, c] : p.terms()) {
    if (m.exp[i] == 0) continue;
    Monomial d = m;
    d.exp[i] -= 1;
    r.add_term(d, c * static_cast<long>(m.exp[i]));
  }
  return r;
}

std::pair<int, bool> degree_and_homogeneity(const Polynomial& p) {
  return {p.degree(), p.is_homogeneous()};
}

DivisionResult exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (!(a.space() == b.space())) throw SpaceMismatch("dividend and divisor in different spaces");

  // Single-divisor multivariate division.  If at any point the grevlex
  // leading term of the running remainder is not divisible by LT(b), the
  // remainder cannot be a multiple of b, so a is not divisible by b.
  Polynomial q(a.space());
  Polynomial r = a;
  const auto& [lm, lc] = b.leading_term();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading_term();
    if (!lm.divides(rm)) return {std::nullopt, r};
    Monomial qm = lm.quotient_into(rm);
    Rational qc = rc / lc;
    q.add_term(qm, qc);
    r -= Polynomial::term(b.space(), qm, qc) * b;
  }
  return {q, Polynomial::zero(a.space())};
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> images) {
  if (static_cast<int>(images.size()) != p.dim())
    throw SpaceMismatch("expected " + std::to_string(p.dim()) + " images, got " +
                        std::to_string(images.size()));
  if (images.empty()) throw SpaceMismatch("cannot compose in dimension zero");
  Space target = images[0].space();
  for (const auto& im : images)
    if (!(im.space() == target)) throw SpaceMismatch("images live in different spaces");

  // Lazily built power tables, one per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](int i, std::uint32_t e) -> const Polynomial& {
    auto& table = powers[i];
    if (table.empty()) table.push_back(Polynomial::constant(target, 1));
    while (table.size() <= e) table.push_back(table.back() * images[i]);
    return table[e];
  };

  Polynomial result(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial prod = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.exp.size(); ++i)
      if (m.exp[i] > 0) prod = prod * power_of(static_cast<int>(i), m.exp[i]);
    result += prod;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (p.space().domain != Domain::U)
    throw SpaceMismatch("substitute expects a codomain (u-space) polynomial");
  for (const auto& im : images)
    if (im.space().domain != Domain::X)
      throw SpaceMismatch("substitution images must live in x-space");
  return compose(p, images);
}

std::map<int, Polynomial> homogeneous_parts(const Polynomial& p) {
  std::map<int, Polynomial> parts;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = parts.try_emplace(m.degree(), p.space());
    it->second.add_term(m, c);
  }
  return parts;
}

namespace {

void render_monomial(std::ostringstream& out, const Monomial& m, char letter) {
  bool first = true;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << letter << (i + 1);
    if (m.exp[i] > 1) out << '^' << m.exp[i];
  }
}

}  // namespace

Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m, Space space) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("determinant of a non-square polynomial matrix");
  if (n == 0) return Polynomial::constant(space, 1);
  if (n == 1) return m[0][0];
  Polynomial sum(space);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      minor.emplace_back();
      minor.back().reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor.back().push_back(m[r][c]);
    }
    Polynomial cof = m[0][j] * polynomial_determinant(minor, space);
    if (j % 2 == 0)
      sum += cof;
    else
      sum -= cof;
  }
  return sum;
}

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  char letter = p.space().letter();
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (m.degree() == 0) {
      out << to_string(abs_c);
    } else {
      if (abs_c != 1) out << to_string(abs_c) << '*';
      render_monomial(out, m, letter);
    }
  }
  return out.str();
}

}  // namespace reflekta
