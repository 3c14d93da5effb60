#ifndef REFLEKTA_CONFIG_HPP
#define REFLEKTA_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reflekta/catalog.hpp"
#include "reflekta/matrix.hpp"

namespace reflekta {

// One config file = one system = one report.  Flat TOML-style keys:
//   dimension = 2
//   form = [["1", "0"], ["0", "1"]]          # rows of rationals
//   basis = ["x1^2 + x2^2", "x1^2*x2^2"]
//   degrees = [2, 4]                          # optional, derived if absent
//   generators = [[["0","1"],["1","0"]]]      # optional, row-major matrices
//   factors = [{expr = "u2", mult = 1}]       # optional
//   seed = 42                                 # optional
//   cap = 6                                   # optional conclusion degree cap
// Bare integers are accepted wherever a rational entry is expected.
struct RunConfig {
  int dimension = 0;
  QMatrix form;
  std::vector<std::string> basis;
  std::optional<std::vector<int>> degrees;
  std::vector<QMatrix> generators;
  std::vector<std::pair<std::string, int>> factors;
  std::optional<std::uint64_t> seed;
  std::optional<int> cap;
};

// Throws ConfigError with a line locator on malformed input.
RunConfig parse_config(std::string_view text);

RunConfig load_config_file(const std::string& path);

// Builds and validates the invariant system a config describes.
InvariantSystem config_to_system(const RunConfig& config, const std::string& name);

}  // namespace reflekta

#endif
