// filtsym — verification CLI for the global symmetry-group actions of
// the nonlinear filtration equation v_t = k(v_x) v_xx.
//
// Subcommands run a verification suite and print a deterministic report
// to stdout (wall time goes to stderr). Exit codes: 0 all checks pass,
// 1 at least one check failed, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "filtsym/expression.hpp"
#include "filtsym/verify.hpp"

namespace {

using namespace filtsym;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GroupSpec parse_spec(const std::string& case_name, const std::optional<double>& n) {
  if (case_name == "g1") return GroupSpec::g1();
  if (case_name == "g2") return GroupSpec::g2();
  if (case_name == "g3") {
    if (!n) throw UsageError("--case g3 requires --n (the power-law exponent)");
    return GroupSpec::g3(*n);
  }
  throw UsageError("unknown case '" + case_name + "' (expected g1, g2, or g3)");
}

KSpec parse_k(const std::string& text) {
  if (text == "exp") return KSpec::exp();
  if (text.rfind("power:", 0) == 0) {
    try {
      return KSpec::power(std::stod(text.substr(6)));
    } catch (const std::logic_error&) {
      throw UsageError("bad power diffusivity '" + text + "' (expected power:<n>)");
    }
  }
  if (text.rfind("generic:", 0) == 0) {
    return KSpec::generic_expression(text.substr(8));
  }
  throw UsageError("unknown diffusivity '" + text +
                   "' (expected exp, power:<n>, or generic:<expr in p>)");
}

std::vector<double> parse_number_list(const std::string& text, std::size_t count,
                                      const std::string& what) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad number '" + item + "' in " + what);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != count) {
    throw UsageError(what + " expects " + std::to_string(count) + " numbers");
  }
  return values;
}

ExactSolution parse_solution(const std::string& text) {
  if (text.rfind("linear:", 0) == 0) {
    const auto v = parse_number_list(text.substr(7), 2, "linear:a,b");
    return ExactSolution::linear(v[0], v[1]);
  }
  if (text.rfind("sepexp:", 0) == 0) {
    const auto v = parse_number_list(text.substr(7), 2, "sepexp:a,c");
    return ExactSolution::separable_exp(v[0], v[1]);
  }
  if (text.rfind("seppower:", 0) == 0) {
    const auto v = parse_number_list(text.substr(9), 3, "seppower:a,c,n");
    return ExactSolution::separable_power(v[0], v[1], v[2]);
  }
  throw UsageError("unknown solution '" + text +
                   "' (expected linear:a,b, sepexp:a,c, or seppower:a,c,n)");
}

int emit(const Report& report, std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - start);
  report.write(std::cout);
  std::cerr << "elapsed_seconds=" << elapsed.count() << "\n";
  return report.passed() ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global symmetry-group actions of the nonlinear filtration equation"};
  app.require_subcommand(1);

  std::string case_name;
  std::optional<double> n_param;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string field_src;
  double eps = 1e-3;

  auto* group_cmd = app.add_subcommand(
      "verify-group", "Group axioms, chart round-trips, and exponentials");
  group_cmd->add_option("--case", case_name, "g1, g2, or g3")->required();
  group_cmd->add_option("--n", n_param, "power-law exponent (g3 only)");
  group_cmd->add_option("--trials", trials, "random triples per check")
      ->default_val(1000)
      ->check(CLI::PositiveNumber);
  group_cmd->add_option("--seed", seed, "RNG seed")->default_val(0);

  auto* action_cmd = app.add_subcommand(
      "verify-action", "Homomorphism, identity, and inverse laws of the action");
  action_cmd->add_option("--case", case_name, "g1, g2, or g3")->required();
  action_cmd->add_option("--n", n_param, "power-law exponent (g3 only)");
  action_cmd->add_option("--field", field_src, "field expression in t and x");
  action_cmd->add_option("--trials", trials, "random pairs per fixture")
      ->default_val(500)
      ->check(CLI::PositiveNumber);
  action_cmd->add_option("--seed", seed, "RNG seed")->default_val(0);

  auto* gen_cmd = app.add_subcommand(
      "verify-generators", "Flow derivative at eps = 0 vs the analytic table");
  gen_cmd->add_option("--case", case_name, "g1, g2, or g3")->required();
  gen_cmd->add_option("--n", n_param, "power-law exponent (g3 only)");
  gen_cmd->add_option("--eps", eps, "finite-difference step")->default_val(1e-3);

  std::string k_text;
  std::string solution_text;
  double gq = 1.0;
  std::optional<double> gr;
  double gt1 = 0.0, gx1 = 0.0, gs1 = 0.0;
  int grid_n = 20;
  double h = ScalarField::kDefaultStep;

  auto* inv_cmd = app.add_subcommand(
      "invariance", "Residuals of a solution and its transform under the action");
  inv_cmd->add_option("--case", case_name, "g1, g2, or g3")->required();
  inv_cmd->add_option("--n", n_param, "power-law exponent (g3 only)");
  inv_cmd->add_option("--k", k_text, "exp | power:<n> | generic:<expr in p>")->required();
  inv_cmd->add_option("--solution", solution_text,
                      "linear:a,b | sepexp:a,c | seppower:a,c,n")->required();
  inv_cmd->add_option("--q", gq, "group parameter q > 0")->default_val(2.0);
  inv_cmd->add_option("--r", gr, "group parameter r (g2/g3)");
  inv_cmd->add_option("--t1", gt1, "group parameter t")->default_val(1.0);
  inv_cmd->add_option("--x1", gx1, "group parameter x")->default_val(0.0);
  inv_cmd->add_option("--s1", gs1, "group parameter s")->default_val(3.0);
  inv_cmd->add_option("--grid", grid_n, "grid points per axis")
      ->default_val(20)
      ->check(CLI::PositiveNumber);
  inv_cmd->add_option("--step", h, "stencil step h")
      ->default_val(ScalarField::kDefaultStep);

  std::optional<double> lin_a;
  std::optional<double> lin_b;
  Case4Options sweep;
  std::string csv_path = "case4.csv";

  auto* case4_cmd = app.add_subcommand(
      "case4", "Rotation-case obstruction sweep (arctan diffusivity class)");
  case4_cmd->add_option("--a", lin_a, "linear profile slope");
  case4_cmd->add_option("--b", lin_b, "linear profile intercept");
  case4_cmd->add_option("--field", field_src, "field expression in t and x");
  case4_cmd->add_option("--n", sweep.n, "t-dilation exponent")->default_val(0.0);
  case4_cmd->add_option("--eps-min", sweep.eps_min, "sweep start")->default_val(0.0);
  case4_cmd->add_option("--eps-max", sweep.eps_max, "sweep end")->default_val(1.0);
  case4_cmd->add_option("--steps", sweep.steps, "sweep length")
      ->default_val(21)
      ->check(CLI::PositiveNumber);
  case4_cmd->add_option("--x-min", sweep.x_min, "sampling range start")->default_val(-2.0);
  case4_cmd->add_option("--x-max", sweep.x_max, "sampling range end")->default_val(2.0);
  case4_cmd->add_option("--x-samples", sweep.x_samples, "points per slice")
      ->default_val(201)
      ->check(CLI::Range(2, 1 << 20));
  case4_cmd->add_option("--axis-tol", sweep.axis_tolerance,
                        "witness tolerance on the rotated x axis")
      ->default_val(1e-3);
  case4_cmd->add_option("--csv", csv_path, "CSV output path")->default_val("case4.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (group_cmd->parsed()) {
      return emit(verify_group_suite(parse_spec(case_name, n_param), trials, seed),
                  start);
    }
    if (action_cmd->parsed()) {
      const GroupSpec spec = parse_spec(case_name, n_param);
      std::optional<NamedField> user_field;
      if (!field_src.empty()) {
        user_field = NamedField{field_src, FieldExpression::parse(field_src).field()};
      }
      return emit(verify_action_suite(spec, user_field, trials, seed), start);
    }
    if (gen_cmd->parsed()) {
      const GroupSpec spec = parse_spec(case_name, n_param);
      if (!(eps > 0.0)) throw UsageError("--eps must be positive");
      return emit(verify_generators_suite(spec, eps), start);
    }
    if (inv_cmd->parsed()) {
      const GroupSpec spec = parse_spec(case_name, n_param);
      const KSpec k = parse_k(k_text);
      const ExactSolution solution = parse_solution(solution_text);
      const double r = gr.value_or(spec.group_case == GroupCase::G3 ? 1.0 : 0.0);
      const GroupElement g(spec, gq, r, gt1, gx1, gs1);
      return emit(invariance_suite(spec, k, solution, g, grid_n, h), start);
    }
    if (case4_cmd->parsed()) {
      if (lin_a.has_value() != lin_b.has_value()) {
        throw UsageError("--a and --b must be given together");
      }
      if (lin_a.has_value() == !field_src.empty()) {
        throw UsageError("give either --a/--b or --field, not both");
      }
      if (lin_a) sweep.linear = LinearLocalState{*lin_a, *lin_b};
      if (!field_src.empty()) sweep.field_expr = FieldExpression::parse(field_src);
      std::ofstream csv(csv_path);
      if (!csv) throw UsageError("cannot open CSV output '" + csv_path + "'");
      return emit(case4_suite(sweep, csv), start);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
