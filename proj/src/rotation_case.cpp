#include "filtsym/rotation_case.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace filtsym {

namespace {

constexpr double kMonotoneTol = 1e-9;
constexpr double kSingularTol = 1e-12;

}  // namespace

SampledGraph SampledGraph::sample(const ScalarField& f, const SampleBox& box,
                                  int nt, int nx) {
  if (nt < 1 || nx < 2) {
    throw std::invalid_argument("graph sampling needs nt >= 1 and nx >= 2");
  }
  if (!(box.t0 <= box.t1 && box.x0 < box.x1)) {
    throw std::invalid_argument("graph sampling box is degenerate");
  }
  SampledGraph g;
  g.slices_.resize(static_cast<std::size_t>(nt));
  for (int i = 0; i < nt; ++i) {
    const double t = nt == 1 ? box.t0 : box.t0 + (box.t1 - box.t0) * i / (nt - 1);
    auto& slice = g.slices_[static_cast<std::size_t>(i)];
    slice.reserve(static_cast<std::size_t>(nx));
    for (int j = 0; j < nx; ++j) {
      const double x = box.x0 + (box.x1 - box.x0) * j / (nx - 1);
      slice.push_back({t, x, f(t, x)});
    }
  }
  return g;
}

GraphPoint x7_point_action(const GraphPoint& p, double eps, double n) {
  const double c = std::cos(eps);
  const double s = std::sin(eps);
  return {std::exp(n * eps) * p.t, p.x * c + p.v * s, p.v * c - p.x * s};
}

TransformedGraph x7_graph_action(const SampledGraph& graph, double eps, double n) {
  TransformedGraph out;
  out.slices.reserve(graph.slices().size());
  for (const auto& slice : graph.slices()) {
    std::vector<GraphPoint> transformed;
    transformed.reserve(slice.size());
    for (const GraphPoint& p : slice) {
      transformed.push_back(x7_point_action(p, eps, n));
    }
    out.slices.push_back(std::move(transformed));
  }
  return out;
}

LinearLocalState linear_local_action(const LinearLocalState& state, double eps) {
  const double c = std::cos(eps);
  const double s = std::sin(eps);
  const double denom = state.a * s + c;
  if (std::abs(denom) <= kSingularTol) {
    throw SingularityError(
        eps, state.a,
        "local action on a linear profile is singular: a = -cot(eps) for a = " +
            std::to_string(state.a) + ", eps = " + std::to_string(eps));
  }
  return {(state.a * c - s) / denom, state.b / denom};
}

ValidityInterval validity_interval(double a) {
  constexpr double pi = std::numbers::pi;
  if (a == 0.0) return {-pi / 2.0, pi / 2.0};
  const double root = std::atan(-1.0 / a);  // in (-pi/2, pi/2), sign opposite to a
  if (a > 0.0) return {root, root + pi};
  return {root - pi, root};
}

namespace {

std::optional<std::pair<GraphPoint, GraphPoint>> find_witness(
    const std::vector<GraphPoint>& slice, double axis_tolerance) {
  std::vector<std::size_t> order(slice.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&slice](std::size_t a, std::size_t b) {
    return slice[a].x < slice[b].x;
  });
  std::optional<std::pair<GraphPoint, GraphPoint>> best;
  double best_dv = axis_tolerance;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const GraphPoint& p = slice[order[i]];
      const GraphPoint& q = slice[order[j]];
      if (q.x - p.x > axis_tolerance) break;
      const double dv = std::abs(q.v - p.v);
      if (dv > best_dv) {
        best_dv = dv;
        best = std::make_pair(p, q);
      }
    }
  }
  return best;
}

}  // namespace

SingleValuedResult is_single_valued(const TransformedGraph& graph,
                                    double axis_tolerance) {
  for (const auto& slice : graph.slices) {
    if (slice.size() < 2) {
      throw InsufficientDataError(
          "a slice needs at least two points to decide single-valuedness");
    }
    bool increasing = true;
    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < slice.size(); ++i) {
      const double dx = slice[i + 1].x - slice[i].x;
      if (!(dx > kMonotoneTol)) increasing = false;
      if (!(dx < -kMonotoneTol)) decreasing = false;
    }
    if (!increasing && !decreasing) {
      return {false, find_witness(slice, axis_tolerance)};
    }
  }
  return {true, std::nullopt};
}

double fold_threshold(const ScalarField& f, double x_min, double x_max,
                      int n_samples, double t) {
  constexpr double pi = std::numbers::pi;
  if (n_samples < 2) throw std::invalid_argument("fold_threshold needs n_samples >= 2");
  if (!(x_min < x_max)) throw std::invalid_argument("fold_threshold needs x_min < x_max");

  std::vector<double> slopes;
  slopes.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double x = x_min + (x_max - x_min) * i / (n_samples - 1);
    slopes.push_back(f.partials(t, x).f_x);
  }
  auto min_tilt = [&slopes](double eps) {
    const double c = std::cos(eps);
    const double s = std::sin(eps);
    double m = std::numeric_limits<double>::infinity();
    for (double p : slopes) m = std::min(m, c + p * s);
    return m;
  };

  // min tilt is 1 at eps = 0 and -1 at eps = pi; scan for the first
  // sign change, then bisect.
  const int kScanSteps = 512;
  double lo = 0.0;
  double hi = pi;
  for (int i = 1; i <= kScanSteps; ++i) {
    const double eps = pi * i / kScanSteps;
    if (min_tilt(eps) <= 0.0) {
      hi = eps;
      break;
    }
    lo = eps;
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (min_tilt(mid) <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace filtsym
