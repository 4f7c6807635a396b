#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "filtsym/action.hpp"
#include "filtsym/expression.hpp"
#include "filtsym/group.hpp"
#include "filtsym/pde.hpp"
#include "filtsym/report.hpp"
#include "filtsym/rng.hpp"
#include "filtsym/rotation_case.hpp"
#include "filtsym/scalar_field.hpp"

namespace filtsym {

/// Draw ranges for random group elements. q (and r for G3) is drawn
/// uniformly from [q_lo, q_hi]; t, x, s (and r for G2) from [p_lo, p_hi].
struct GroupDrawRanges {
  double q_lo = 0.1;
  double q_hi = 10.0;
  double p_lo = -5.0;
  double p_hi = 5.0;

  /// Narrow ranges that keep composed parameters well-conditioned.
  static GroupDrawRanges moderate() { return {0.5, 2.0, -2.0, 2.0}; }
};

GroupElement random_element(SplitMix64& rng, const GroupSpec& spec,
                            const GroupDrawRanges& ranges = {});

/// Group-law suite: associativity, inverse, chart round-trip,
/// matrix-vs-parametrized product, one-parameter subgroups, and the
/// closed-form exponential against a truncated power series.
Report verify_group_suite(const GroupSpec& spec, int trials, std::uint64_t seed);

/// Named field fixture for the action suite.
struct NamedField {
  std::string name;
  ScalarField field;
};

std::vector<NamedField> builtin_action_fixtures();

/// Action suite: homomorphism, identity, and inverse laws of the global
/// action on the given fixtures (built-ins plus an optional user field).
Report verify_action_suite(const GroupSpec& spec,
                           const std::optional<NamedField>& user_field,
                           int trials, std::uint64_t seed);

/// Generator suite: finite-difference derivative of each one-parameter
/// flow at eps = 0 against the analytic vector-field table.
Report verify_generators_suite(const GroupSpec& spec, double eps);

/// Invariance suite: residual of an exact solution and of its
/// gamma-transform, with analytic partials and with pure stencils.
Report invariance_suite(const GroupSpec& spec, const KSpec& k,
                        const ExactSolution& solution, const GroupElement& g,
                        int grid_n, double h);

/// Sweep options for the rotation-case obstruction demo.
struct Case4Options {
  std::optional<LinearLocalState> linear;       // linear profile v = a x + b ...
  std::optional<FieldExpression> field_expr;    // ... or an expression in t, x
  double n = 1.0;
  double eps_min = 0.0;
  double eps_max = 1.0;
  int steps = 21;
  double x_min = -2.0;
  double x_max = 2.0;
  int x_samples = 201;
  double t0 = 1.0;
  double t1 = 1.0;
  int t_slices = 1;
  double axis_tolerance = 1e-3;
};

/// Rotation-case sweep. Writes one CSV row per eps to `csv`
/// (header: eps,single_valued,a_prime,b_prime,notes) and returns the
/// report (fold threshold, consistency checks; singular rows are
/// flagged, not fatal).
Report case4_suite(const Case4Options& options, std::ostream& csv);

}  // namespace filtsym
