#include "filtsym/verify.hpp"

#include <cmath>
#include <cstdio>

#include "filtsym/flow.hpp"

namespace filtsym {

namespace {

std::string format_general(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::vector<Generator> generators_for(const GroupSpec& spec) {
  std::vector<Generator> gens = {GeneratorId::Xi1, GeneratorId::Xi2,
                                 GeneratorId::Xi3, GeneratorId::Xi4};
  if (spec.group_case == GroupCase::G2) gens.emplace_back(GeneratorId::Xi5);
  if (spec.group_case == GroupCase::G3) {
    gens.push_back(Generator(GeneratorId::Xi6, spec.n));
  }
  return gens;
}

double matrix_rel_distance(const Matrix4& a, const Matrix4& b) {
  const double scale =
      std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

void describe_spec(Report& report, const GroupSpec& spec) {
  report.param("case", to_string(spec.group_case));
  if (spec.group_case == GroupCase::G3) report.param("n", format_general(spec.n));
}

}  // namespace

GroupElement random_element(SplitMix64& rng, const GroupSpec& spec,
                            const GroupDrawRanges& ranges) {
  const double q = rng.uniform(ranges.q_lo, ranges.q_hi);
  double r = 0.0;
  if (spec.group_case == GroupCase::G2) r = rng.uniform(ranges.p_lo, ranges.p_hi);
  if (spec.group_case == GroupCase::G3) r = rng.uniform(ranges.q_lo, ranges.q_hi);
  const double t = rng.uniform(ranges.p_lo, ranges.p_hi);
  const double x = rng.uniform(ranges.p_lo, ranges.p_hi);
  const double s = rng.uniform(ranges.p_lo, ranges.p_hi);
  return GroupElement(spec, q, r, t, x, s);
}

Report verify_group_suite(const GroupSpec& spec, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  Report report("verify-group");
  describe_spec(report, spec);
  report.param("trials", static_cast<long long>(trials));
  report.param("seed", static_cast<unsigned long long>(seed));

  SplitMix64 rng(seed);
  const GroupDrawRanges ranges;
  const std::string draw_note = "q in [0.1,10], other parameters in [-5,5]";

  double assoc = 0.0;
  double inv = 0.0;
  double round_trip = 0.0;
  double matrix_product = 0.0;
  const GroupElement id = GroupElement::identity(spec);
  for (int i = 0; i < trials; ++i) {
    const GroupElement a = random_element(rng, spec, ranges);
    const GroupElement b = random_element(rng, spec, ranges);
    const GroupElement c = random_element(rng, spec, ranges);
    assoc = std::max(assoc, parameter_distance(mul(mul(a, b), c), mul(a, mul(b, c))));
    inv = std::max(inv, parameter_distance(mul(a, inverse(a)), id));
    round_trip = std::max(round_trip,
                          parameter_distance(from_matrix(spec, to_matrix(a)), a));
    matrix_product = std::max(
        matrix_product,
        matrix_rel_distance(to_matrix(mul(a, b)), to_matrix(a) * to_matrix(b)));
  }
  report.check("associativity", assoc, 1e-10, draw_note);
  report.check("inverse", inv, 1e-10, draw_note);
  report.check("chart_round_trip", round_trip, 1e-12, draw_note);
  report.check("matrix_vs_parametrized_product", matrix_product, 1e-10, draw_note);

  double one_param = 0.0;
  double series = 0.0;
  for (const Generator& gen : generators_for(spec)) {
    for (int i = 0; i < 100; ++i) {
      const double e1 = rng.uniform(-3.0, 3.0);
      const double e2 = rng.uniform(-3.0, 3.0);
      one_param = std::max(
          one_param,
          parameter_distance(mul(exp_generator(spec, gen, e1), exp_generator(spec, gen, e2)),
                             exp_generator(spec, gen, e1 + e2)));
    }
    for (int i = 0; i < 10; ++i) {
      const double e = rng.uniform(-3.0, 3.0);
      series = std::max(series,
                        matrix_rel_distance(to_matrix(exp_generator(spec, gen, e)),
                                            expm_series(e * generator_matrix(gen))));
    }
  }
  report.check("one_parameter_subgroup", one_param, 1e-10, "eps in [-3,3]");
  report.check("exp_vs_series", series, 1e-10, "20-term series, eps in [-3,3]");
  return report;
}

std::vector<NamedField> builtin_action_fixtures() {
  std::vector<NamedField> fixtures;
  fixtures.push_back(
      {"t + x", ScalarField([](double t, double x) { return t + x; })});
  fixtures.push_back(
      {"x^2", ScalarField([](double, double x) { return x * x; })});
  fixtures.push_back({"sin(x) + t", ScalarField([](double t, double x) {
                        return std::sin(x) + t;
                      })});
  return fixtures;
}

Report verify_action_suite(const GroupSpec& spec,
                           const std::optional<NamedField>& user_field,
                           int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  Report report("verify-action");
  describe_spec(report, spec);
  report.param("trials", static_cast<long long>(trials));
  report.param("seed", static_cast<unsigned long long>(seed));

  std::vector<NamedField> fixtures;
  if (user_field) fixtures.push_back(*user_field);
  for (auto& fixture : builtin_action_fixtures()) fixtures.push_back(std::move(fixture));

  SplitMix64 rng(seed);
  const GroupDrawRanges ranges = GroupDrawRanges::moderate();
  const std::string draw_note = "q in [0.5,2], other parameters in [-2,2]";
  const GroupElement id = GroupElement::identity(spec);

  for (const NamedField& fixture : fixtures) {
    const ScalarField& f = fixture.field;

    double identity_err = 0.0;
    {
      const ScalarField gf = gamma_action(id, f);
      const auto samples = sample_grid(f.domain(), gf.domain());
      for (const Point& p : samples) {
        identity_err = std::max(identity_err, std::abs(gf(p.t, p.x) - f(p.t, p.x)));
      }
    }
    report.check("identity_law[" + fixture.name + "]", identity_err, 0.0);

    double hom = 0.0;
    double inverse_law = 0.0;
    for (int i = 0; i < trials; ++i) {
      const GroupElement g1 = random_element(rng, spec, ranges);
      const GroupElement g2 = random_element(rng, spec, ranges);

      const ScalarField composed = gamma_action(mul(g1, g2), f);
      const ScalarField nested = gamma_action(g1, gamma_action(g2, f));
      const auto samples = sample_grid(composed.domain(), nested.domain());
      double err = 0.0;
      double magnitude = 1.0;
      for (const Point& p : samples) {
        const double lhs = composed(p.t, p.x);
        err = std::max(err, std::abs(lhs - nested(p.t, p.x)));
        magnitude = std::max(magnitude, std::abs(lhs));
      }
      hom = std::max(hom, err / magnitude);

      const ScalarField back = gamma_action(g1, gamma_action(inverse(g1), f));
      const auto inv_samples = sample_grid(f.domain(), back.domain());
      double inv_err = 0.0;
      double inv_mag = 1.0;
      for (const Point& p : inv_samples) {
        const double v = f(p.t, p.x);
        inv_err = std::max(inv_err, std::abs(back(p.t, p.x) - v));
        inv_mag = std::max(inv_mag, std::abs(v));
      }
      inverse_law = std::max(inverse_law, inv_err / inv_mag);
    }
    report.check("homomorphism[" + fixture.name + "]", hom, 1e-9, draw_note);
    report.check("inverse_law[" + fixture.name + "]", inverse_law, 1e-9, draw_note);
  }
  return report;
}

Report verify_generators_suite(const GroupSpec& spec, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  Report report("verify-generators");
  describe_spec(report, spec);
  report.param("eps", format_general(eps));

  // Fixture with analytic partials and nonvanishing higher derivatives,
  // so every flow's finite-difference error is visible and bounded.
  const ScalarField fixture(
      [](double t, double x) { return std::sin(x) + std::cos(t); },
      [](double t, double x) {
        return FieldPartials{-std::sin(t), std::cos(x), -std::sin(x)};
      });

  SplitMix64 rng(20240801ull);
  std::vector<Point> points;
  points.reserve(50);
  for (int i = 0; i < 50; ++i) {
    points.push_back({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
  }

  // Second-order stencil: scale the eps = 1e-3 budget quadratically.
  const double tol = 1e-5 * (eps / 1e-3) * (eps / 1e-3);
  for (const Generator& gen : generators_for(spec)) {
    const VectorField vf = matching_vector_field(gen);
    double err = 0.0;
    for (const Point& p : points) {
      const double fd = infinitesimal_fd(gen, fixture, p.t, p.x, eps);
      const double analytic = apply_vector_field(vf, fixture, p.t, p.x);
      err = std::max(err, std::abs(fd - analytic));
    }
    report.check(std::string("generator_recovery[") + to_string(gen.id) + "]", err,
                 tol, "fixture sin(x) + cos(t), 50 points in [-1,1]^2");
  }
  return report;
}

Report invariance_suite(const GroupSpec& spec, const KSpec& k,
                        const ExactSolution& solution, const GroupElement& g,
                        int grid_n, double h) {
  Report report("invariance");
  describe_spec(report, spec);
  report.param("k", k.label());
  report.param("grid", static_cast<long long>(grid_n));
  report.param("h", format_general(h));
  report.param("q", format_general(g.q));
  if (spec.group_case != GroupCase::G1) report.param("r", format_general(g.r));
  report.param("t1", format_general(g.t));
  report.param("x1", format_general(g.x));
  report.param("s1", format_general(g.s));

  const ScalarField f = solution.field();
  const auto grid = invariance_grid(f, g, grid_n, grid_n, h);

  const InvarianceResult analytic =
      invariance_check(f, k, g, grid, h, PartialsMode::Auto);
  report.check("residual_before_analytic", analytic.max_residual_before, 1e-10);
  report.check("residual_after_analytic", analytic.max_residual_after, 1e-10);

  const InvarianceResult stencil =
      invariance_check(f, k, g, grid, h, PartialsMode::Stencil);
  const double ratio = h / ScalarField::kDefaultStep;
  const double stencil_tol = 1e-6 * std::max(ratio * ratio, 1.0 / (ratio * ratio));
  report.check("residual_before_stencil", stencil.max_residual_before, stencil_tol);
  report.check("residual_after_stencil", stencil.max_residual_after,
               10.0 * std::max(stencil.max_residual_before, 1e-7));
  return report;
}

Report case4_suite(const Case4Options& options, std::ostream& csv) {
  if (options.linear.has_value() == options.field_expr.has_value()) {
    throw std::invalid_argument(
        "rotation-case sweep needs exactly one of a linear profile or a field "
        "expression");
  }
  if (options.steps < 1) throw std::invalid_argument("sweep needs steps >= 1");
  if (!(options.eps_min <= options.eps_max) || !std::isfinite(options.eps_min) ||
      !std::isfinite(options.eps_max)) {
    throw std::invalid_argument("sweep bounds must be finite and ordered");
  }

  Report report("case4");
  report.param("n", format_general(options.n));
  if (options.linear) {
    report.param("profile", "linear a=" + format_general(options.linear->a) +
                                " b=" + format_general(options.linear->b));
  } else {
    report.param("profile", options.field_expr->str());
  }
  report.param("eps_min", format_general(options.eps_min));
  report.param("eps_max", format_general(options.eps_max));
  report.param("steps", static_cast<long long>(options.steps));
  report.param("x_range", "[" + format_general(options.x_min) + "," +
                              format_general(options.x_max) + "]");

  const ScalarField field = options.linear
                                ? linear_solution(options.linear->a, options.linear->b)
                                : options.field_expr->field();
  const SampleBox box{options.t0, options.t1, options.x_min, options.x_max};
  const SampledGraph graph =
      SampledGraph::sample(field, box, options.t_slices, options.x_samples);

  const double threshold =
      fold_threshold(field, options.x_min, options.x_max, 1001, options.t0);
  report.info("fold_threshold", threshold);
  if (options.linear) {
    const ValidityInterval vi = validity_interval(options.linear->a);
    report.info("validity_interval",
                "(" + format_general(vi.eps_min) + "," + format_general(vi.eps_max) + ")");
  }

  csv << "eps,single_valued,a_prime,b_prime,notes\n";
  int eps_zero_failures = -1;  // -1: no eps = 0 row in the sweep
  int below_threshold_failures = 0;
  int singular_flag_mismatches = 0;
  for (int i = 0; i < options.steps; ++i) {
    const double eps =
        options.steps == 1
            ? options.eps_min
            : options.eps_min + (options.eps_max - options.eps_min) * i / (options.steps - 1);
    const SingleValuedResult sv =
        is_single_valued(x7_graph_action(graph, eps, options.n), options.axis_tolerance);

    std::string a_prime;
    std::string b_prime;
    std::string notes;
    if (options.linear) {
      const bool singular_expected =
          std::abs(options.linear->a * std::sin(eps) + std::cos(eps)) <= 1e-12;
      try {
        const LinearLocalState out = linear_local_action(*options.linear, eps);
        a_prime = format_general(out.a);
        b_prime = format_general(out.b);
        if (singular_expected) ++singular_flag_mismatches;
      } catch (const SingularityError&) {
        notes = "singular";
        if (!singular_expected) ++singular_flag_mismatches;
      }
    }

    if (std::abs(eps) <= 1e-15) {
      eps_zero_failures = sv.single_valued ? 0 : 1;
    }
    if (eps >= 0.0 && eps <= threshold - 1e-3 && !sv.single_valued) {
      ++below_threshold_failures;
    }

    csv << format_general(eps) << "," << (sv.single_valued ? "true" : "false")
        << "," << a_prime << "," << b_prime << "," << notes << "\n";
  }

  if (eps_zero_failures >= 0) {
    report.check("eps_zero_single_valued", eps_zero_failures, 0.0);
  }
  report.check("single_valued_below_fold_threshold", below_threshold_failures, 0.0,
               "rows with 0 <= eps <= threshold - 1e-3");
  if (options.linear) {
    report.check("singular_rows_flagged", singular_flag_mismatches, 0.0,
                 "|a sin(eps) + cos(eps)| <= 1e-12 iff flagged");
  }
  return report;
}

}  // namespace filtsym
