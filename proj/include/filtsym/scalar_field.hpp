#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "filtsym/errors.hpp"

namespace filtsym {

struct Point {
  double t = 0.0;
  double x = 0.0;
};

/// Open rectangle in the (t, x) plane; infinite sides mean unbounded.
/// All domain-restricted fields in this library live on open sets (they
/// blow up on the boundary), so containment is strict at finite edges.
struct Domain {
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  double t_min = -kInf;
  double t_max = kInf;
  double x_min = -kInf;
  double x_max = kInf;

  static Domain all() { return {}; }
  static Domain x_above(double lo) { return {-kInf, kInf, lo, kInf}; }
  static Domain x_below(double hi) { return {-kInf, kInf, -kInf, hi}; }

  bool contains(double t, double x) const {
    return t > t_min && t < t_max && x > x_min && x < x_max;
  }
  Domain intersect(const Domain& other) const;
  /// Pull every finite side inward by `margin`.
  Domain shrunk(double margin) const;
  bool empty() const { return !(t_min < t_max && x_min < x_max); }
};

/// First and second partial derivatives of a field at a point.
struct FieldPartials {
  double f_t = 0.0;
  double f_x = 0.0;
  double f_xx = 0.0;
};

/// A smooth function of (t, x), immutable after construction.
///
/// Carries an evaluation rule, an open rectangular domain, and optional
/// analytic partials. partials() prefers the analytic rule and falls
/// back to central differences with step h (default 1e-4).
class ScalarField {
 public:
  using Eval = std::function<double(double, double)>;
  using PartialEval = std::function<FieldPartials(double, double)>;

  static constexpr double kDefaultStep = 1e-4;

  explicit ScalarField(Eval eval, Domain domain = Domain::all());
  ScalarField(Eval eval, PartialEval partials, Domain domain = Domain::all());

  double operator()(double t, double x) const;

  const Domain& domain() const { return domain_; }
  bool has_analytic_partials() const { return static_cast<bool>(partials_); }

  /// Analytic partials when present, otherwise central differences.
  FieldPartials partials(double t, double x, double h = kDefaultStep) const;

  /// Central differences regardless of analytic availability. Throws
  /// DomainError if the five-point stencil leaves the domain.
  FieldPartials finite_difference_partials(double t, double x, double h) const;

  /// Same field with the analytic partials dropped (forces stencils).
  ScalarField without_analytic_partials() const;

 private:
  Eval eval_;
  PartialEval partials_;
  Domain domain_;
};

/// Richardson-extrapolated stencil partials: (4 P(h/2) - P(h)) / 3,
/// fourth-order accurate on smooth fields.
FieldPartials richardson_partials(const ScalarField& f, double t, double x,
                                  double h = 1e-3);

/// Closed-form solutions of v_t = k(v_x) v_xx used as test fixtures.
///
///   Linear(a, b):            v = a x + b           (any diffusivity)
///   SeparableExp(a, c):      v = a t + (a x + c)(ln(a x + c) - 1)/a
///                            solves v_t = exp(v_x) v_xx on {a x + c > 0}
///   SeparablePower(a, c, n): v = a t + ((n+1)(a x + c))^{(n+2)/(n+1)}
///                                      / (a (n+2))
///                            solves v_t = (v_x)^n v_xx on
///                            {(n+1)(a x + c) > 0}, n not in {-2,-1,0}
struct ExactSolution {
  enum class Kind { Linear, SeparableExp, SeparablePower };

  Kind kind = Kind::Linear;
  double a = 1.0;
  double b = 0.0;  // intercept (Linear) or offset c (separable families)
  double n = 1.0;  // SeparablePower exponent

  static ExactSolution linear(double a, double b) {
    return {Kind::Linear, a, b, 0.0};
  }
  static ExactSolution separable_exp(double a, double c);
  static ExactSolution separable_power(double a, double c, double n);

  ScalarField field() const;
};

inline ScalarField linear_solution(double a, double b) {
  return ExactSolution::linear(a, b).field();
}
inline ScalarField separable_exp_solution(double a, double c) {
  return ExactSolution::separable_exp(a, c).field();
}
inline ScalarField separable_power_solution(double a, double c, double n) {
  return ExactSolution::separable_power(a, c, n).field();
}

/// Finite box used to sample unbounded domains.
struct SampleBox {
  double t0 = -2.0, t1 = 2.0, x0 = -2.0, x1 = 2.0;
};

/// Clip a domain to a finite box and inset every side by `margin`.
/// Throws DomainError if nothing is left.
SampleBox bounded_box(const Domain& domain, const SampleBox& fallback,
                      double margin);

/// Uniform nt-by-nx grid over the box (endpoints included).
std::vector<Point> grid_points(const SampleBox& box, int nt, int nx);

/// Default 10x10 sample grid over the intersection of the given domains,
/// clipped to [-2,2]^2 and inset by `margin` (one stencil width by default).
std::vector<Point> sample_grid(const Domain& a, const Domain& b,
                               int nt = 10, int nx = 10,
                               double margin = ScalarField::kDefaultStep);

}  // namespace filtsym
