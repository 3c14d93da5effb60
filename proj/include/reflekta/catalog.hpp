#ifndef REFLEKTA_CATALOG_HPP
#define REFLEKTA_CATALOG_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reflekta/forms.hpp"
#include "reflekta/groups.hpp"
#include "reflekta/polynomial.hpp"

namespace reflekta {

// A candidate free basis I^1..I^n together with the bilinear form it is
// measured against, and whatever known-good data the catalog carries.
struct InvariantSystem {
  std::string name;
  std::optional<int> param;
  int dimension = 0;
  BilinearForm form;
  std::vector<Polynomial> basis;  // x-space, homogeneous
  std::vector<int> degrees;
  std::optional<FiniteMatrixGroup> group;
  std::optional<CodomainMetric> known_metric;
  std::optional<std::vector<std::pair<Polynomial, int>>> known_discriminant_factors;

  Space x_space() const { return xspace(dimension); }
  Space u_space() const { return uspace(dimension); }
  std::string display_name() const {
    return param ? name + "(" + std::to_string(*param) + ")" : name;
  }
};

// Checks the declared invariants: homogeneity with the stated degrees,
// group-invariance of every basis element when a group is present, and the
// factorization product against the known metric's determinant when both
// are present.  Throws on violation; fixtures are never trusted.
void validate_system(const InvariantSystem& system);

struct CatalogEntry {
  std::string name;
  std::optional<std::pair<int, int>> param_range;
  std::string note;
};

std::vector<CatalogEntry> list_systems();

// Builds a catalog fixture.  Throws UnknownSystem / ParamOutOfRange.
InvariantSystem build_system(const std::string& name, std::optional<int> param);

}  // namespace reflekta

#endif
