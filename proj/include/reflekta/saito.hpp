#ifndef REFLEKTA_SAITO_HPP
#define REFLEKTA_SAITO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "reflekta/catalog.hpp"
#include "reflekta/forms.hpp"
#include "reflekta/rewrite.hpp"

namespace reflekta {

enum class Verdict { PASS, FAIL, SKIPPED };

std::string to_string(Verdict v);

struct CheckRecord {
  std::string id;
  Verdict verdict = Verdict::PASS;
  std::optional<std::string> witness;
  std::optional<std::string> reason;
  long long millis = 0;
};

struct VerificationReport {
  std::string system;
  std::optional<int> param;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  Verdict overall = Verdict::PASS;  // PASS iff no FAIL

  bool passed() const { return overall == Verdict::PASS; }
};

struct RunOptions {
  std::uint64_t seed = 0;
  int conclusion_cap = 6;
};

// Matrix of gradient cross products on the x side: entry (i,j) is
// grad(I^i).grad(I^j) with respect to the system's form.
std::vector<std::vector<Polynomial>> gradient_matrix_x(const InvariantSystem& system);

struct Lift {
  enum class Status { Success, ClosureFails, BasisDependent };
  Status status;
  std::optional<CodomainMetric> metric;
  // Failing entries (i, j, witness), all of them, when closure fails.
  std::vector<std::tuple<int, int, Polynomial>> failures;
};

// Pushes every gradient-matrix entry through express_in_basis.  A failure
// here is the executable negation of the closure hypothesis.
Lift lift_gradient_matrix(const InvariantSystem& system);

// det g^{ij}, exact, over the polynomial ring.
Polynomial discriminant(const CodomainMetric& metric);

// det(dI^j/dx^i), exact.
Polynomial jacobian(const InvariantSystem& system);

// Homogeneity of every basis element, algebraic independence via the
// Jacobian criterion, group-invariance (SKIPPED when no group).
std::vector<CheckRecord> check_hypotheses(const InvariantSystem& system, const Polynomial& jac);

CheckRecord verify_pullback_identity(const InvariantSystem& system, const Polynomial& delta,
                                     const Polynomial& jac);

CheckRecord verify_jacobian_harmonic(const InvariantSystem& system, const Polynomial& jac);

std::vector<CheckRecord> verify_log_derivations(const InvariantSystem& system,
                                                const CodomainMetric& metric,
                                                const Polynomial& delta);

std::vector<CheckRecord> verify_factor_orthogonality(const InvariantSystem& system,
                                                     const CodomainMetric& metric);

CheckRecord verify_laplacian_compat(const InvariantSystem& system, const CodomainMetric& metric,
                                    const Polynomial& delta, std::uint64_t seed);

CheckRecord verify_conclusion_sample(const InvariantSystem& system, int degree_cap);

// Runs the whole pipeline in fixed order; failures are verdicts, never
// exceptions.  Deterministic for a fixed seed.
VerificationReport run_report(const InvariantSystem& system, const RunOptions& options = {});

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace reflekta

#endif
