#include "reflekta/saito.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace reflekta {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PASS:
      return "PASS";
    case Verdict::FAIL:
      return "FAIL";
    default:
      return "SKIPPED";
  }
}

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string entry_locator(int i, int j) {
  return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string poly_stats(const Polynomial& p) {
  if (p.is_zero()) return "zero";
  return "degree " + std::to_string(p.degree()) + ", " + std::to_string(p.term_count()) +
         (p.term_count() == 1 ? " term" : " terms");
}

}  // namespace

std::vector<std::vector<Polynomial>> gradient_matrix_x(const InvariantSystem& system) {
  int n = system.dimension;
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial::zero(system.x_space())));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m[i][j] = gradient_product(system.basis[i], system.basis[j], system.form);
      if (j != i) m[j][i] = m[i][j];
    }
  return m;
}

Lift lift_gradient_matrix(const InvariantSystem& system) {
  int n = system.dimension;
  auto gx = gradient_matrix_x(system);
  std::vector<std::vector<Polynomial>> entries(n, std::vector<Polynomial>(n, Polynomial::zero(system.u_space())));
  Lift lift{Lift::Status::Success, std::nullopt, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rewrite rw = express_in_basis(gx[i][j], system);
      if (rw.status == Rewrite::Status::BasisDependent) {
        lift.status = Lift::Status::BasisDependent;
        lift.failures.emplace_back(i, j, rw.witness ? *rw.witness : gx[i][j]);
        return lift;
      }
      if (rw.status == Rewrite::Status::NotInSubring) {
        lift.status = Lift::Status::ClosureFails;
        lift.failures.emplace_back(i, j, rw.witness ? *rw.witness : gx[i][j]);
        continue;
      }
      entries[i][j] = rw.expression;
      if (j != i) entries[j][i] = rw.expression;
    }
  if (lift.status == Lift::Status::Success)
    lift.metric = CodomainMetric(system.u_space(), std::move(entries));
  return lift;
}

Polynomial discriminant(const CodomainMetric& metric) {
  int n = metric.dimension();
  std::vector<std::vector<Polynomial>> rows(n, std::vector<Polynomial>(n, Polynomial::zero(metric.space())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = metric.entry(i, j);
  return polynomial_determinant(rows, metric.space());
}

Polynomial jacobian(const InvariantSystem& system) {
  int n = system.dimension;
  std::vector<std::vector<Polynomial>> rows(n, std::vector<Polynomial>(n, Polynomial::zero(system.x_space())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = partial_derivative(system.basis[j], i);
  return polynomial_determinant(rows, system.x_space());
}

std::vector<CheckRecord> check_hypotheses(const InvariantSystem& system, const Polynomial& jac) {
  std::vector<CheckRecord> records;

  {
    auto start = Clock::now();
    CheckRecord rec{"hypotheses.homogeneity"};
    for (int i = 0; i < system.dimension; ++i) {
      const Polynomial& p = system.basis[i];
      if (p.is_zero() || !p.is_homogeneous()) {
        rec.verdict = Verdict::FAIL;
        rec.witness = "basis element " + std::to_string(i + 1) + ": " + render(p);
        break;
      }
    }
    rec.millis = ms_since(start);
    records.push_back(std::move(rec));
  }

  {
    // Jacobian criterion: in characteristic zero, J != 0 iff the basis is
    // algebraically independent.
    auto start = Clock::now();
    CheckRecord rec{"hypotheses.independence"};
    if (jac.is_zero()) {
      rec.verdict = Verdict::FAIL;
      rec.witness = "jacobian = 0";
    }
    rec.millis = ms_since(start);
    records.push_back(std::move(rec));
  }

  {
    auto start = Clock::now();
    CheckRecord rec{"hypotheses.invariance"};
    if (!system.group) {
      rec.verdict = Verdict::SKIPPED;
      rec.reason = "no group attached";
    } else {
      for (int i = 0; i < system.dimension; ++i) {
        if (!is_invariant(system.basis[i], *system.group)) {
          rec.verdict = Verdict::FAIL;
          rec.witness = "basis element " + std::to_string(i + 1) + " is not invariant";
          break;
        }
      }
    }
    rec.millis = ms_since(start);
    records.push_back(std::move(rec));
  }

  return records;
}

CheckRecord verify_pullback_identity(const InvariantSystem& system, const Polynomial& delta,
                                     const Polynomial& jac) {
  auto start = Clock::now();
  CheckRecord rec{"pullback.identity"};
  // Pi* delta = det(B) * J^2; the det factor generalizes the Euclidean
  // statement (where it is 1) to arbitrary nonsingular forms.
  Polynomial lhs = substitute(delta, system.basis);
  Polynomial rhs = jac * jac * system.form.determinant();
  if (!(lhs == rhs)) {
    rec.verdict = Verdict::FAIL;
    rec.witness = "difference: " + render(lhs - rhs);
  } else {
    rec.reason = "det(B) = " + to_string(system.form.determinant());
  }
  rec.millis = ms_since(start);
  return rec;
}

CheckRecord verify_jacobian_harmonic(const InvariantSystem& system, const Polynomial& jac) {
  auto start = Clock::now();
  CheckRecord rec{"jacobian.harmonic"};
  Polynomial lap = laplacian(jac, system.form);
  if (!lap.is_zero()) {
    rec.verdict = Verdict::FAIL;
    rec.witness = render(lap);
  }
  rec.millis = ms_since(start);
  return rec;
}

namespace {

CheckRecord derivation_check(const std::string& id, const Polynomial& lambda,
                             const CodomainMetric& metric, int dim) {
  auto start = Clock::now();
  CheckRecord rec{id};
  std::vector<std::string> sigmas;
  for (int i = 0; i < dim; ++i) {
    Polynomial coord = Polynomial::variable(metric.space(), i);
    LogDerivation ld = log_derivation_apply(lambda, coord, metric);
    if (!ld.is_derivation) {
      rec.verdict = Verdict::FAIL;
      rec.witness = "u" + std::to_string(i + 1) + ": " + render(ld.value) + " not divisible by " +
                    render(lambda);
      break;
    }
    sigmas.push_back(render(ld.value));
  }
  if (rec.verdict == Verdict::PASS) {
    std::string all;
    for (std::size_t i = 0; i < sigmas.size(); ++i) all += (i ? ", " : "") + sigmas[i];
    rec.reason = "sigma = (" + all + ")";
  }
  rec.millis = ms_since(start);
  return rec;
}

}  // namespace

std::vector<CheckRecord> verify_log_derivations(const InvariantSystem& system,
                                                const CodomainMetric& metric,
                                                const Polynomial& delta) {
  std::vector<CheckRecord> records;
  records.push_back(derivation_check("derivations.delta", delta, metric, system.dimension));
  if (!system.known_discriminant_factors) {
    CheckRecord rec{"derivations.factors"};
    rec.verdict = Verdict::SKIPPED;
    rec.reason = "no factorization supplied; delta-level check only";
    records.push_back(std::move(rec));
    return records;
  }
  const auto& factors = *system.known_discriminant_factors;
  for (std::size_t k = 0; k < factors.size(); ++k)
    records.push_back(derivation_check("derivations.factor." + std::to_string(k + 1),
                                       factors[k].first, metric, system.dimension));
  return records;
}

std::vector<CheckRecord> verify_factor_orthogonality(const InvariantSystem& system,
                                                     const CodomainMetric& metric) {
  std::vector<CheckRecord> records;
  if (!system.known_discriminant_factors || system.known_discriminant_factors->size() < 2) {
    CheckRecord rec{"orthogonality.pairs"};
    rec.verdict = Verdict::SKIPPED;
    rec.reason = system.known_discriminant_factors ? "fewer than two distinct factors"
                                                   : "no factorization supplied";
    records.push_back(std::move(rec));
    return records;
  }
  const auto& factors = *system.known_discriminant_factors;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      auto start = Clock::now();
      CheckRecord rec{"orthogonality.pair." + std::to_string(i + 1) + "." + std::to_string(j + 1)};
      Polynomial product = codomain_gradient_product(factors[i].first, factors[j].first, metric);
      if (!product.is_zero()) {
        rec.verdict = Verdict::FAIL;
        rec.witness = render(product);
      }
      rec.millis = ms_since(start);
      records.push_back(std::move(rec));
    }
  return records;
}

namespace {

Polynomial random_codomain_polynomial(Space space, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Polynomial p(space);
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<int> unit_degrees(space.dim, 1);
    for (const auto& e : weighted_compositions(d, unit_degrees))
      p.add_term(Monomial(std::vector<std::uint32_t>(e.begin(), e.end())), coeff(rng));
  }
  return p;
}

}  // namespace

CheckRecord verify_laplacian_compat(const InvariantSystem& system, const CodomainMetric& metric,
                                    const Polynomial& delta, std::uint64_t seed) {
  auto start = Clock::now();
  CheckRecord rec{"laplacian.compat"};
  std::vector<Polynomial> samples;
  for (int i = 0; i < system.dimension; ++i)
    samples.push_back(Polynomial::variable(system.u_space(), i));
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 20; ++k)
    samples.push_back(random_codomain_polynomial(system.u_space(), 2, rng));

  for (const auto& rho : samples) {
    CovariantLaplacian cov = covariant_laplacian(rho, metric, delta);
    if (!cov.is_polynomial) {
      rec.verdict = Verdict::FAIL;
      rec.witness = "rho = " + render(rho) + ": (grad log delta)(rho) is not polynomial";
      break;
    }
    Polynomial lhs = substitute(cov.value, system.basis);
    Polynomial rhs = laplacian(substitute(rho, system.basis), system.form);
    if (!(lhs == rhs)) {
      rec.verdict = Verdict::FAIL;
      rec.witness = "rho = " + render(rho) + ", difference: " + render(lhs - rhs);
      break;
    }
  }
  if (rec.verdict == Verdict::PASS)
    rec.reason = std::to_string(samples.size()) + " samples (coordinates + seeded degree<=2)";
  rec.millis = ms_since(start);
  return rec;
}

namespace {

void enumerate_monomials(int n, int max_degree, std::vector<Monomial>& out) {
  std::vector<int> unit_degrees(n, 1);
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& e : weighted_compositions(d, unit_degrees))
      out.push_back(Monomial(std::vector<std::uint32_t>(e.begin(), e.end())));
}

}  // namespace

CheckRecord verify_conclusion_sample(const InvariantSystem& system, int degree_cap) {
  auto start = Clock::now();
  CheckRecord rec{"conclusion.sample"};
  if (!system.group) {
    rec.verdict = Verdict::SKIPPED;
    rec.reason = "no group attached";
    return rec;
  }
  std::vector<Monomial> monomials;
  enumerate_monomials(system.dimension, degree_cap, monomials);
  for (const auto& m : monomials) {
    Polynomial averaged = reynolds(Polynomial::term(system.x_space(), m, 1), *system.group);
    Rewrite rw = express_in_basis(averaged, system);
    if (rw.status != Rewrite::Status::Success) {
      rec.verdict = Verdict::FAIL;
      Polynomial mono = Polynomial::term(system.x_space(), m, 1);
      rec.witness = "reynolds(" + render(mono) + ") = " + render(averaged) +
                    (rw.status == Rewrite::Status::BasisDependent ? " (basis dependent)"
                                                                  : " not in subring");
      break;
    }
  }
  if (rec.verdict == Verdict::PASS)
    rec.reason = "cap=" + std::to_string(degree_cap) + ", " + std::to_string(monomials.size()) +
                 " monomials averaged and rewritten";
  rec.millis = ms_since(start);
  return rec;
}

VerificationReport run_report(const InvariantSystem& system, const RunOptions& options) {
  VerificationReport report;
  report.system = system.name;
  report.param = system.param;
  report.seed = options.seed;

  Polynomial jac = jacobian(system);
  for (auto& rec : check_hypotheses(system, jac)) report.checks.push_back(std::move(rec));

  // Closure lift.
  auto lift_start = Clock::now();
  Lift lift = lift_gradient_matrix(system);
  {
    CheckRecord rec{"closure.lift"};
    if (lift.status == Lift::Status::Success) {
      std::string rendered = "[";
      for (int i = 0; i < system.dimension; ++i) {
        if (i) rendered += "; ";
        for (int j = 0; j < system.dimension; ++j) {
          if (j) rendered += ", ";
          rendered += render(lift.metric->entry(i, j));
        }
      }
      rendered += "]";
      if (rendered.size() <= 240)
        rec.reason = "lifted metric: " + rendered;
      else
        rec.reason = "lifted metric has large entries; see discriminant stats";
    }
    if (lift.status == Lift::Status::ClosureFails) {
      rec.verdict = Verdict::FAIL;
      std::string w;
      for (const auto& [i, j, witness] : lift.failures)
        w += (w.empty() ? "" : "; ") + entry_locator(i, j) + ": " + render(witness);
      rec.witness = w;
    } else if (lift.status == Lift::Status::BasisDependent) {
      rec.verdict = Verdict::FAIL;
      const auto& [i, j, witness] = lift.failures.front();
      rec.witness = entry_locator(i, j) + ": ansatz solve is non-unique (basis dependent)";
    }
    rec.millis = ms_since(lift_start);
    report.checks.push_back(std::move(rec));
  }

  std::optional<Polynomial> delta;
  bool delta_usable = false;
  {
    auto start = Clock::now();
    CheckRecord rec{"discriminant"};
    if (lift.metric) {
      delta = discriminant(*lift.metric);
      delta_usable = !delta->is_zero();
      rec.reason = poly_stats(*delta);
      if (!delta_usable) {
        rec.verdict = Verdict::FAIL;
        rec.witness = "discriminant is identically zero";
      }
    } else {
      rec.verdict = Verdict::SKIPPED;
      rec.reason = "lift failed";
    }
    rec.millis = ms_since(start);
    report.checks.push_back(std::move(rec));
  }

  {
    auto start = Clock::now();
    CheckRecord rec{"jacobian"};
    rec.reason = poly_stats(jac);
    rec.millis = ms_since(start);
    report.checks.push_back(std::move(rec));
  }

  if (delta)
    report.checks.push_back(verify_pullback_identity(system, *delta, jac));
  else
    report.checks.push_back({"pullback.identity", Verdict::SKIPPED, std::nullopt, "lift failed"});

  report.checks.push_back(verify_jacobian_harmonic(system, jac));

  // Factor product verification gates the factor-level checks.
  bool factors_ok = false;
  {
    auto start = Clock::now();
    CheckRecord rec{"factors.product"};
    if (!system.known_discriminant_factors) {
      rec.verdict = Verdict::SKIPPED;
      rec.reason = "no factorization supplied";
    } else if (!delta_usable) {
      rec.verdict = Verdict::SKIPPED;
      rec.reason = delta ? "discriminant is zero" : "lift failed";
    } else {
      Polynomial product = Polynomial::constant(system.u_space(), 1);
      for (const auto& [factor, mult] : *system.known_discriminant_factors)
        product = product * pow(factor, static_cast<unsigned>(mult));
      DivisionResult q = exact_divide(*delta, product);
      if (q.quotient && !q.quotient->is_zero() && q.quotient->is_constant()) {
        factors_ok = true;
        rec.reason = "delta = " + render(*q.quotient) + " * product(factors)";
      } else {
        rec.verdict = Verdict::FAIL;
        rec.witness = "factor product does not divide the discriminant to a constant";
      }
    }
    rec.millis = ms_since(start);
    report.checks.push_back(std::move(rec));
  }

  if (delta_usable) {
    InvariantSystem gated = system;
    if (!factors_ok) gated.known_discriminant_factors.reset();
    for (auto& rec : verify_log_derivations(gated, *lift.metric, *delta))
      report.checks.push_back(std::move(rec));
    for (auto& rec : verify_factor_orthogonality(gated, *lift.metric))
      report.checks.push_back(std::move(rec));
    report.checks.push_back(verify_laplacian_compat(system, *lift.metric, *delta, options.seed));
  } else {
    std::string why = delta ? "discriminant is zero" : "lift failed";
    report.checks.push_back({"derivations.delta", Verdict::SKIPPED, std::nullopt, why});
    report.checks.push_back({"orthogonality.pairs", Verdict::SKIPPED, std::nullopt, why});
    report.checks.push_back({"laplacian.compat", Verdict::SKIPPED, std::nullopt, why});
  }

  report.checks.push_back(verify_conclusion_sample(system, options.conclusion_cap));

  report.overall = Verdict::PASS;
  for (const auto& rec : report.checks)
    if (rec.verdict == Verdict::FAIL) report.overall = Verdict::FAIL;
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["system"] = report.system;
  if (report.param)
    j["params"] = *report.param;
  else
    j["params"] = nullptr;
  j["seed"] = report.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& rec : report.checks) {
    nlohmann::ordered_json c;
    c["id"] = rec.id;
    c["verdict"] = to_string(rec.verdict);
    if (rec.witness) c["witness"] = *rec.witness;
    if (rec.reason) c["reason"] = *rec.reason;
    c["millis"] = rec.millis;
    j["checks"].push_back(std::move(c));
  }
  j["overall"] = to_string(report.overall);
  return j.dump(2);
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "system " << report.system;
  if (report.param) out << "(" << *report.param << ")";
  out << "  seed " << report.seed << "\n";
  for (const auto& rec : report.checks) {
    out << "  " << (rec.verdict == Verdict::PASS     ? "PASS   "
                    : rec.verdict == Verdict::FAIL   ? "FAIL   "
                                                     : "SKIPPED")
        << " " << rec.id;
    if (rec.reason) out << "  [" << *rec.reason << "]";
    if (rec.witness) out << "  witness: " << *rec.witness;
    out << "  (" << rec.millis << " ms)\n";
  }
  out << "overall: " << to_string(report.overall) << "\n";
  return out.str();
}

}  // namespace reflekta
