#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "filtsym/scalar_field.hpp"

namespace filtsym {

// Machinery for the diffusivity class k(p) = exp(n arctan p)/(1 + p^2),
// whose extra symmetry rotates the (x, v) plane and dilates t. The
// rotation can fold a solution graph over itself, so no global action
// on functions exists; these routines exhibit and detect that
// obstruction.

struct GraphPoint {
  double t = 0.0;
  double x = 0.0;
  double v = 0.0;
};

/// Graph of a field sampled on a rectangular grid, organized as
/// t-slices whose points are ordered by strictly increasing x.
class SampledGraph {
 public:
  static SampledGraph sample(const ScalarField& f, const SampleBox& box,
                             int nt, int nx);

  const std::vector<std::vector<GraphPoint>>& slices() const { return slices_; }

 private:
  std::vector<std::vector<GraphPoint>> slices_;
};

/// Raw transformed point set. Slice structure survives (the t-dilation
/// maps t-slices to t-slices) but the per-slice points may no longer be
/// the graph of a function of x.
struct TransformedGraph {
  std::vector<std::vector<GraphPoint>> slices;
};

/// (t, x, v) -> (e^{n eps} t, x cos eps + v sin eps, v cos eps - x sin eps).
GraphPoint x7_point_action(const GraphPoint& p, double eps, double n);

TransformedGraph x7_graph_action(const SampledGraph& graph, double eps, double n);

/// Slope/intercept of a linear profile v = a x + b.
struct LinearLocalState {
  double a = 0.0;
  double b = 0.0;
};

/// The local action on linear profiles:
///   a' = (a cos eps - sin eps) / (a sin eps + cos eps)
///   b' = b / (a sin eps + cos eps)
/// Throws SingularityError when |a sin eps + cos eps| <= 1e-12 (the
/// rotated line is vertical; the action leaves the space of functions).
LinearLocalState linear_local_action(const LinearLocalState& state, double eps);

struct ValidityInterval {
  double eps_min = 0.0;
  double eps_max = 0.0;
};

/// Maximal open interval around eps = 0 on which a sin eps + cos eps
/// stays positive: (-pi/2, pi/2) for a = 0, otherwise bounded by
/// consecutive roots -arctan(1/a) + k pi.
ValidityInterval validity_interval(double a);

struct SingleValuedResult {
  bool single_valued = true;
  /// On failure: two transformed points with nearly equal x-coordinate
  /// (within axis_tolerance) but v-coordinates further apart than that.
  std::optional<std::pair<GraphPoint, GraphPoint>> witness;
};

/// True iff within every slice the transformed x-coordinate is strictly
/// monotone (tolerance 1e-9) along the original x order. Throws
/// InsufficientDataError on a slice with fewer than two points.
SingleValuedResult is_single_valued(const TransformedGraph& graph,
                                    double axis_tolerance);

/// Smallest eps > 0 at which min over x-samples of
/// cos(eps) + f_x(t, x) sin(eps) reaches zero, found by bisection to
/// 1e-10. Equals arccot(-m) for m = min f_x. Beyond this angle the
/// rotated graph stops being single-valued.
double fold_threshold(const ScalarField& f, double x_min, double x_max,
                      int n_samples = 1001, double t = 0.0);

}  // namespace filtsym
