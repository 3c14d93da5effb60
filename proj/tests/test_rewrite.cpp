#include <doctest.h>

#include "reflekta/catalog.hpp"
#include "reflekta/parser.hpp"
#include "reflekta/rewrite.hpp"
#include "test_support.hpp"

using namespace reflekta;
using testing::Rng;

namespace {

Polynomial px(const std::string& s, int n = 2) { return parse_polynomial(s, xspace(n)); }
Polynomial pu(const std::string& s, int n = 2) { return parse_polynomial(s, uspace(n)); }

}  // namespace

TEST_CASE("newton rewrite of p3 over two power sums") {
  InvariantSystem s2 = build_system("Sn-powersums", 2);
  Rewrite r = express_in_basis(px("x1^3 + x2^3"), s2);
  REQUIRE(r.status == Rewrite::Status::Success);
  CHECK(r.expression == pu("3/2*u1*u2 - 1/2*u1^3"));
  CHECK(render(r.expression) == "3/2*u1*u2 - 1/2*u1^3");
}

TEST_CASE("minkowski counterexample membership") {
  InvariantSystem ce = build_system("counterexample-minkowski", std::nullopt);
  SUBCASE("x1 - x2 is not in the subring") {
    Rewrite r = express_in_basis(px("x1 - x2"), ce);
    CHECK(r.status == Rewrite::Status::NotInSubring);
    REQUIRE(r.witness);
    CHECK(*r.witness == px("x1 - x2"));
  }
  SUBCASE("its product with x1 + x2 is u2") {
    Rewrite r = express_in_basis(px("(x1 - x2)*(x1 + x2)"), ce);
    REQUIRE(r.status == Rewrite::Status::Success);
    CHECK(r.expression == pu("u2"));
  }
}

TEST_CASE("round-trip recovery on random members") {
  InvariantSystem b2 = build_system("B", 2);
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    Polynomial rho = testing::random_polynomial(uspace(2), 3, rng);
    Rewrite r = express_in_basis(substitute(rho, b2.basis), b2);
    REQUIRE(r.status == Rewrite::Status::Success);
    CHECK(r.expression == rho);
  }
}

TEST_CASE("power sums beyond the basis still rewrite") {
  for (int n = 2; n <= 4; ++n) {
    InvariantSystem sys = build_system("Sn-powersums", n);
    for (int k = n + 1; k <= 2 * n - 2; ++k) {
      Polynomial pk(xspace(n));
      for (int v = 0; v < n; ++v) pk += pow(Polynomial::variable(xspace(n), v), k);
      Rewrite r = express_in_basis(pk, sys);
      REQUIRE(r.status == Rewrite::Status::Success);
      CHECK(substitute(r.expression, sys.basis) == pk);
    }
  }
}

TEST_CASE("degrees that no ansatz reaches are not in the subring") {
  InvariantSystem b2 = build_system("B", 2);
  // both degrees even: any odd degree is unreachable
  Rewrite r = express_in_basis(px("x1^3"), b2);
  CHECK(r.status == Rewrite::Status::NotInSubring);
}

TEST_CASE("dependent basis surfaces as BasisDependent") {
  InvariantSystem sys{"dependent", std::nullopt, 2, BilinearForm::euclidean(2),
                      {px("x1*x2"), px("x1*x2")},  {2, 2}};
  Rewrite r = express_in_basis(px("x1^2*x2^2"), sys);
  CHECK(r.status == Rewrite::Status::BasisDependent);
}

TEST_CASE("zero and non-homogeneous inputs") {
  InvariantSystem b2 = build_system("B", 2);
  SUBCASE("zero rewrites to zero") {
    Rewrite r = express_in_basis(Polynomial::zero(xspace(2)), b2);
    REQUIRE(r.status == Rewrite::Status::Success);
    CHECK(r.expression.is_zero());
  }
  SUBCASE("mixed-degree members recombine") {
    Polynomial p = substitute(pu("u1 + u2^2 + 3"), b2.basis);
    Rewrite r = express_in_basis(p, b2);
    REQUIRE(r.status == Rewrite::Status::Success);
    CHECK(r.expression == pu("u1 + u2^2 + 3"));
  }
  SUBCASE("one bad part spoils a mixed polynomial") {
    Rewrite r = express_in_basis(px("x1^2 + x2^2 + x1"), b2);
    CHECK(r.status == Rewrite::Status::NotInSubring);
    REQUIRE(r.witness);
    CHECK(*r.witness == px("x1"));
  }
}
