#include "filtsym/pde.hpp"

#include <cmath>
#include <stdexcept>

#include "filtsym/action.hpp"
#include "filtsym/expression.hpp"

namespace filtsym {

namespace {

bool is_nonnegative_integer(double n) {
  return n >= 0.0 && n == std::floor(n);
}

}  // namespace

KSpec KSpec::exp() {
  return KSpec(Kind::Exp, 0.0, [](double p) { return std::exp(p); }, "exp(p)");
}

KSpec KSpec::power(double n) {
  if (n == 0.0 || !std::isfinite(n)) {
    throw DomainError("Power diffusivity requires finite nonzero n");
  }
  return KSpec(Kind::Power, n, [n](double p) { return std::pow(p, n); },
               "p^" + std::to_string(n));
}

KSpec KSpec::arctan_exp(double n) {
  return KSpec(Kind::ArctanExp, n,
               [n](double p) { return std::exp(n * std::atan(p)) / (1.0 + p * p); },
               "exp(" + std::to_string(n) + " arctan(p)) / (1 + p^2)");
}

KSpec KSpec::generic(std::function<double(double)> k, std::string label) {
  return KSpec(Kind::Generic, 0.0, std::move(k), std::move(label));
}

KSpec KSpec::generic_expression(const std::string& src) {
  FieldExpression expr = FieldExpression::parse_univariate(src, "p");
  return generic([expr](double p) { return expr.eval(0.0, p); }, src);
}

double KSpec::operator()(double p) const {
  if (kind_ == Kind::Power && !is_nonnegative_integer(n_) && !(p > 0.0)) {
    throw DomainError("Power diffusivity with non-integer exponent needs v_x > 0");
  }
  if (kind_ == Kind::Generic) {
    const double dk = 1e-6;
    const double slope = (fn_(p + dk) - fn_(p - dk)) / (2.0 * dk);
    if (!std::isfinite(slope) || std::abs(slope) <= 1e-12) {
      throw DomainError("generic diffusivity has k'(p) ~ 0 at p = " +
                        std::to_string(p));
    }
  }
  const double value = fn_(p);
  if (!std::isfinite(value)) {
    throw DomainError("diffusivity evaluated outside its domain");
  }
  return value;
}

double residual(const ScalarField& f, const KSpec& k, double t, double x,
                double h, PartialsMode mode) {
  const FieldPartials p = mode == PartialsMode::Stencil
                              ? f.finite_difference_partials(t, x, h)
                              : f.partials(t, x, h);
  return p.f_t - k(p.f_x) * p.f_xx;
}

namespace {

bool compatible(const GroupSpec& spec, const KSpec& k) {
  switch (spec.group_case) {
    case GroupCase::G1: return k.kind() == KSpec::Kind::Generic;
    case GroupCase::G2: return k.kind() == KSpec::Kind::Exp;
    case GroupCase::G3: return k.kind() == KSpec::Kind::Power && k.n() == spec.n;
  }
  return false;
}

}  // namespace

InvarianceResult invariance_check(const ScalarField& f, const KSpec& k,
                                  const GroupElement& g,
                                  std::span<const Point> grid, double h,
                                  PartialsMode mode) {
  if (!compatible(g.spec, k)) {
    throw std::invalid_argument(
        "group case does not match the diffusivity's symmetry class");
  }
  const ScalarField transformed = gamma_action(g, f);
  InvarianceResult result;
  for (const Point& p : grid) {
    result.max_residual_before =
        std::max(result.max_residual_before, std::abs(residual(f, k, p.t, p.x, h, mode)));
    result.max_residual_after = std::max(
        result.max_residual_after, std::abs(residual(transformed, k, p.t, p.x, h, mode)));
  }
  return result;
}

std::vector<Point> invariance_grid(const ScalarField& f, const GroupElement& g,
                                   int nt, int nx, double h) {
  // Keep a margin to the solution's domain boundary in both frames: the
  // grid point itself and its preimage under g each stay `margin` away,
  // so the stencil residuals on either side avoid the derivative
  // blow-up at the boundary.
  const double margin = std::max(0.2, 4.0 * h);
  const Domain inset = f.domain().shrunk(margin);
  const Domain common = inset.intersect(action_image_domain(g, inset));
  return grid_points(bounded_box(common, SampleBox{-2.0, 2.0, -2.0, 2.0}, 2.0 * h),
                     nt, nx);
}

}  // namespace filtsym
