// Acceptance suite: one criterion per run_criterion call, one pass/fail
// line each, nonzero exit when anything fails.  argv[1] must point at the
// reflekta CLI binary; CLI-facing criteria shell out to it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reflekta/catalog.hpp"
#include "reflekta/config.hpp"
#include "reflekta/parser.hpp"
#include "reflekta/rewrite.hpp"
#include "reflekta/saito.hpp"

using namespace reflekta;

namespace {

std::string g_cli_path;

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string command = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot spawn: " + command);
  std::string output;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
  if (!condition) throw Failure(what);
}

Polynomial px(const std::string& s, int n = 2) { return parse_polynomial(s, xspace(n)); }
Polynomial pu(const std::string& s, int n = 2) { return parse_polynomial(s, uspace(n)); }

// ---- criterion 1: dihedral family -----------------------------------------

void criterion_dihedral_family() {
  for (int m = 2; m <= 8; ++m) {
    CliResult cli = run_cli("verify --system I2 --param " + std::to_string(m) + " --json");
    require(cli.exit_code == 0, "I2(" + std::to_string(m) + ") verify exited nonzero");
    auto json = nlohmann::json::parse(cli.output);
    require(json["overall"] == "PASS", "I2(" + std::to_string(m) + ") report not PASS");

    InvariantSystem sys = build_system("I2", m);
    Lift lift = lift_gradient_matrix(sys);
    require(lift.status == Lift::Status::Success, "I2 lift failed");
    Polynomial u1 = pu("u1"), u2 = pu("u2");
    require(lift.metric->entry(0, 0) == u1 * Rational(4), "metric (1,1) mismatch");
    require(lift.metric->entry(0, 1) == u2 * Rational(2 * m), "metric (1,2) mismatch");
    require(lift.metric->entry(1, 1) == pow(u1, m - 1) * Rational(m * m),
            "metric (2,2) mismatch");
    Polynomial delta = discriminant(*lift.metric);
    require(delta == (pow(u1, m) - u2 * u2) * Rational(4 * m * m), "discriminant mismatch");
    Polynomial jac = jacobian(sys);
    require(substitute(delta, sys.basis) == jac * jac, "pullback of delta is not J^2");
    require(laplacian(jac, sys.form).is_zero(), "jacobian not harmonic");
  }
}

// ---- criterion 2: B2 full report -------------------------------------------

void criterion_b2_report() {
  CliResult cli = run_cli("verify --system B --param 2 --json");
  require(cli.exit_code == 0, "B(2) verify exited nonzero");
  auto json = nlohmann::json::parse(cli.output);
  require(json["overall"] == "PASS", "B(2) report not PASS");
  bool orthogonality_pass = false;
  bool sigma_witnesses = false;
  for (const auto& check : json["checks"]) {
    if (check["id"] == "orthogonality.pair.1.2")
      orthogonality_pass = check["verdict"] == "PASS";
    if (check["id"] == "derivations.factor.1")
      sigma_witnesses =
          check["verdict"] == "PASS" && check["reason"] == "sigma = (8, 4*u1)";
  }
  require(orthogonality_pass, "B(2) factor orthogonality missing or failed");
  require(sigma_witnesses, "B(2) log-derivation witnesses are not (8, 4*u1)");

  InvariantSystem b2 = build_system("B", 2);
  Lift lift = lift_gradient_matrix(b2);
  require(codomain_gradient_product(pu("u2"), pu("u1^2 - 4*u2"), *lift.metric).is_zero(),
          "grad(u2).grad(u1^2-4u2) != 0");
}

// ---- criterion 3: power sums ----------------------------------------------

void criterion_power_sums() {
  for (int n = 2; n <= 4; ++n) {
    InvariantSystem sys = build_system("Sn-powersums", n);
    Lift lift = lift_gradient_matrix(sys);
    require(lift.status == Lift::Status::Success,
            "power-sum lift failed at n=" + std::to_string(n));

    // g^{ij} = i*j*(rewrite of p_{i+j-2}), with p_0 = n.
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        int k = i + j - 2;
        Polynomial pk(xspace(n));
        if (k == 0) {
          pk = Polynomial::constant(xspace(n), n);
        } else {
          for (int v = 0; v < n; ++v) pk += pow(Polynomial::variable(xspace(n), v), k);
        }
        Rewrite rw = express_in_basis(pk, sys);
        require(rw.status == Rewrite::Status::Success, "p_k rewrite failed");
        require(lift.metric->entry(i - 1, j - 1) == rw.expression * Rational(i * j),
                "metric entry is not i*j*rewrite(p_{i+j-2})");
      }

    // p_{2n-2} rewrites and the round trip is exact.
    int k = 2 * n - 2;
    Polynomial pk(xspace(n));
    for (int v = 0; v < n; ++v) pk += pow(Polynomial::variable(xspace(n), v), k);
    Rewrite rw = express_in_basis(pk, sys);
    require(rw.status == Rewrite::Status::Success, "p_{2n-2} rewrite failed");
    require(substitute(rw.expression, sys.basis) == pk, "p_{2n-2} round trip failed");
  }

  CliResult cli = run_cli("rewrite --system Sn-powersums --param 2 --expr \"x1^3+x2^3\"");
  require(cli.exit_code == 0, "rewrite CLI exited nonzero");
  require(cli.output == "3/2*u1*u2 - 1/2*u1^3\n",
          "rewrite CLI printed '" + cli.output + "'");
}

// ---- criterion 4: the paper's counterexample -------------------------------

void criterion_counterexample() {
  CliResult cli = run_cli("verify --system counterexample-minkowski --json");
  require(cli.exit_code == 0, "counterexample verify exited nonzero");
  auto json = nlohmann::json::parse(cli.output);
  require(json["overall"] == "PASS", "counterexample report not PASS");

  InvariantSystem ce = build_system("counterexample-minkowski", std::nullopt);
  Lift lift = lift_gradient_matrix(ce);
  require(lift.status == Lift::Status::Success, "counterexample lift failed");
  require(lift.metric->entry(0, 0).is_zero(), "metric (1,1) is not 0");
  require(lift.metric->entry(0, 1) == pu("2*u1"), "metric (1,2) is not 2*u1");
  require(lift.metric->entry(1, 1) == pu("4*u2"), "metric (2,2) is not 4*u2");

  Polynomial delta = discriminant(*lift.metric);
  Polynomial jac = jacobian(ce);
  require(ce.form.determinant() == -1, "det(B) is not -1");
  require(substitute(delta, ce.basis) == jac * jac * ce.form.determinant(),
          "pullback identity with det(B) = -1 failed");

  Rewrite bad = express_in_basis(px("x1 - x2"), ce);
  require(bad.status == Rewrite::Status::NotInSubring, "x1 - x2 unexpectedly in subring");
  Rewrite good = express_in_basis(px("(x1 - x2)*(x1 + x2)"), ce);
  require(good.status == Rewrite::Status::Success && good.expression == pu("u2"),
          "(x1-x2)(x1+x2) did not rewrite to u2");
}

// ---- criterion 5: reflection-count law --------------------------------------

void criterion_reflection_count() {
  auto check = [](const InvariantSystem& sys, const FiniteMatrixGroup& group) {
    require(static_cast<int>(count_reflections(group)) == jacobian(sys).degree(),
            sys.display_name() + ": reflection count != deg J");
  };
  for (auto [name, param] : std::vector<std::pair<std::string, int>>{
           {"B", 2}, {"B", 3}, {"Sn-powersums", 3}, {"Sn-powersums", 4}, {"I2", 2}, {"I2", 4}}) {
    InvariantSystem sys = build_system(name, param);
    require(sys.group.has_value(), sys.display_name() + " has no group");
    check(sys, *sys.group);
  }
  // I2(3) and I2(6): the full dihedral symmetry has no rational matrices in
  // the fixture's orthonormal coordinates, so the group side runs on the
  // integer (crystallographic) realization of the same abstract group;
  // deg J is realization-independent.
  QMatrix swap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  {
    QMatrix rot3{{Rational(0), Rational(-1)}, {Rational(1), Rational(-1)}};
    std::vector<LinearMap> gens{LinearMap(rot3), LinearMap(swap)};
    FiniteMatrixGroup d3 = generate_group(gens);
    require(d3.order() == 6, "crystallographic D3 has wrong order");
    check(build_system("I2", 3), d3);
  }
  {
    QMatrix rot6{{Rational(1), Rational(-1)}, {Rational(1), Rational(0)}};
    std::vector<LinearMap> gens{LinearMap(rot6), LinearMap(swap)};
    FiniteMatrixGroup d6 = generate_group(gens);
    require(d6.order() == 12, "crystallographic D6 has wrong order");
    check(build_system("I2", 6), d6);
  }
}

// ---- criterion 6: property suites -------------------------------------------

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return rational_from_parts(num(rng), den(rng));
}

Polynomial random_poly(Space space, int max_degree, std::mt19937_64& rng, int terms = 5) {
  Polynomial p(space);
  std::uniform_int_distribution<int> count(0, terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> var(0, space.dim - 1);
  int t = count(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m = Monomial::unit(space.dim);
    int d = deg(rng);
    for (int k = 0; k < d; ++k) m.exp[var(rng)] += 1;
    p.add_term(m, random_rational(rng));
  }
  return p;
}

void criterion_property_suites() {
  std::mt19937_64 rng(20260810);
  Space x3 = xspace(3);

  for (int i = 0; i < 200; ++i) {  // ring axioms
    Polynomial a = random_poly(x3, 4, rng), b = random_poly(x3, 4, rng),
               c = random_poly(x3, 4, rng);
    require(a + b == b + a && a * b == b * a, "commutativity failed");
    require((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c),
            "associativity failed");
    require(a * (b + c) == a * b + a * c, "distributivity failed");
  }

  for (int i = 0; i < 200; ++i) {  // Leibniz and Euler
    Polynomial p = random_poly(x3, 5, rng), q = random_poly(x3, 5, rng);
    int v = static_cast<int>(rng() % 3);
    require(partial_derivative(p * q, v) ==
                p * partial_derivative(q, v) + q * partial_derivative(p, v),
            "Leibniz failed");
    int d = 1 + static_cast<int>(rng() % 5);
    Polynomial h(x3);
    for (int t = 0; t < 4; ++t) {
      Monomial m = Monomial::unit(3);
      for (int k = 0; k < d; ++k) m.exp[rng() % 3] += 1;
      h.add_term(m, random_rational(rng));
    }
    Polynomial euler(x3);
    for (int w = 0; w < 3; ++w)
      euler += Polynomial::variable(x3, w) * partial_derivative(h, w);
    require(euler == h * Rational(d), "Euler failed");
  }

  InvariantSystem b2 = build_system("B", 2);
  for (int i = 0; i < 200; ++i) {  // Reynolds idempotence and invariance
    Polynomial p = random_poly(xspace(2), 5, rng);
    Polynomial avg = reynolds(p, *b2.group);
    require(is_invariant(avg, *b2.group), "reynolds image not invariant");
    require(reynolds(avg, *b2.group) == avg, "reynolds not idempotent");
  }

  Lift lift = lift_gradient_matrix(b2);
  for (int i = 0; i < 200; ++i) {  // gradient compatibility on B2
    Polynomial alpha = random_poly(uspace(2), 3, rng);
    Polynomial beta = random_poly(uspace(2), 3, rng);
    Polynomial lhs = substitute(codomain_gradient_product(alpha, beta, *lift.metric), b2.basis);
    Polynomial rhs =
        gradient_product(substitute(alpha, b2.basis), substitute(beta, b2.basis), b2.form);
    require(lhs == rhs, "gradient compatibility failed");
  }

  for (int i = 0; i < 200; ++i) {  // express round trip
    Polynomial rho = random_poly(uspace(2), 3, rng);
    Rewrite rw = express_in_basis(substitute(rho, b2.basis), b2);
    require(rw.status == Rewrite::Status::Success && rw.expression == rho,
            "express round trip failed");
  }

  int solved = 0;
  while (solved < 200) {  // fraction-free solver vs Cramer
    QMatrix a(5, 5);
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) a.at(r, c) = random_rational(rng);
    if (a.determinant() == 0) continue;
    std::vector<Rational> b;
    for (int r = 0; r < 5; ++r) b.push_back(random_rational(rng));
    LinearSolve got = linear_solve_exact(a, b);
    require(got.status == LinearSolve::Status::Unique, "random solve not unique");
    // Cramer oracle
    for (int j = 0; j < 5; ++j) {
      QMatrix replaced = a;
      for (int r = 0; r < 5; ++r) replaced.at(r, j) = b[r];
      require(got.solution[j] == replaced.determinant() / a.determinant(),
              "solver disagrees with Cramer");
    }
    ++solved;
  }
}

// ---- criterion 7: negative controls -----------------------------------------

std::string write_temp_config(const std::string& name, const std::string& body) {
  std::string path = "/tmp/reflekta_" + name + ".toml";
  FILE* f = fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot write " + path);
  fwrite(body.data(), 1, body.size(), f);
  fclose(f);
  return path;
}

void criterion_negative_controls() {
  std::string open_path = write_temp_config("open", R"(
dimension = 2
form = [[1, 0], [0, 1]]
basis = ["x1", "x1*x2"]
)");
  CliResult open_run = run_cli("verify --config " + open_path + " --json");
  require(open_run.exit_code == 1, "open basis did not exit 1");
  auto open_json = nlohmann::json::parse(open_run.output);
  require(open_json["overall"] == "FAIL", "open basis not FAIL");
  bool closure_at_22 = false;
  for (const auto& check : open_json["checks"])
    if (check["id"] == "closure.lift" && check["verdict"] == "FAIL")
      closure_at_22 = check["witness"].get<std::string>().find("entry (2,2)") !=
                      std::string::npos;
  require(closure_at_22, "closure failure does not report entry (2,2)");

  std::string dep_path = write_temp_config("dependent", R"(
dimension = 2
form = [[1, 0], [0, 1]]
basis = ["x1 + x2", "2*x1 + 2*x2"]
)");
  CliResult dep_run = run_cli("verify --config " + dep_path + " --json");
  require(dep_run.exit_code == 1, "dependent basis did not exit 1");
  auto dep_json = nlohmann::json::parse(dep_run.output);
  bool independence_fail = false;
  for (const auto& check : dep_json["checks"])
    if (check["id"] == "hypotheses.independence")
      independence_fail = check["verdict"] == "FAIL";
  require(independence_fail, "independence check did not fail");
  require(jacobian(config_to_system(load_config_file(dep_path), "dep")).is_zero(),
          "dependent basis jacobian is not 0");
}

// ---- criterion 8: stretch systems --------------------------------------------

void criterion_stretch() {
  auto start = std::chrono::steady_clock::now();
  for (auto [name, param] : std::vector<std::pair<std::string, int>>{{"B", 4}, {"D", 4}}) {
    VerificationReport report = run_report(build_system(name, param));
    require(report.passed(), std::string(name) + "(4) report not PASS");
  }
  auto elapsed =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  require(elapsed.count() < 300, "stretch systems exceeded the five-minute bound");
}

// ---- driver ------------------------------------------------------------------

struct Criterion {
  int number;
  std::string label;
  std::function<void()> body;
  double budget_seconds;  // 0 = no bound asserted here
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-reflekta-cli>\n";
    return 2;
  }
  g_cli_path = argv[1];

  std::vector<Criterion> criteria = {
      {1, "dihedral family I2(2..8): exact metric, discriminant, pullback, harmonic",
       criterion_dihedral_family, 5.0},
      {2, "B(2) full report with orthogonality and log-derivation witnesses",
       criterion_b2_report, 5.0},
      {3, "power sums n=2..4: closure entries, deep rewrites, CLI output",
       criterion_power_sums, 30.0},
      {4, "minkowski counterexample: paper metric, det(B) pullback, non-membership",
       criterion_counterexample, 0.0},
      {5, "reflection count equals jacobian degree", criterion_reflection_count, 0.0},
      {6, "seeded property suites, 200 cases each", criterion_property_suites, 0.0},
      {7, "negative controls exit 1 with the documented witnesses",
       criterion_negative_controls, 0.0},
      {8, "stretch: B(4) and D(4) full reports within five minutes", criterion_stretch, 300.0},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = criterion.budget_seconds == 0.0 || seconds < criterion.budget_seconds;
    bool ok = error.empty() && in_budget;
    if (!ok) ++failures;
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number << ": "
         << criterion.label;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << seconds << "s)";
    if (!error.empty()) line << " -- " << error;
    if (error.empty() && !in_budget) line << " -- exceeded time budget";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
