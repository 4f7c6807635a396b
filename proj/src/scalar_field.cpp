#include "filtsym/scalar_field.hpp"

#include <cmath>
#include <utility>

namespace filtsym {

Domain Domain::intersect(const Domain& other) const {
  return {std::max(t_min, other.t_min), std::min(t_max, other.t_max),
          std::max(x_min, other.x_min), std::min(x_max, other.x_max)};
}

Domain Domain::shrunk(double margin) const {
  auto in = [margin](double v, double sign) {
    return std::isfinite(v) ? v + sign * margin : v;
  };
  return {in(t_min, 1.0), in(t_max, -1.0), in(x_min, 1.0), in(x_max, -1.0)};
}

ScalarField::ScalarField(Eval eval, Domain domain)
    : eval_(std::move(eval)), domain_(domain) {}

ScalarField::ScalarField(Eval eval, PartialEval partials, Domain domain)
    : eval_(std::move(eval)), partials_(std::move(partials)), domain_(domain) {}

double ScalarField::operator()(double t, double x) const {
  if (!domain_.contains(t, x)) {
    throw DomainError("field evaluated outside its domain");
  }
  return eval_(t, x);
}

FieldPartials ScalarField::partials(double t, double x, double h) const {
  if (partials_) {
    if (!domain_.contains(t, x)) {
      throw DomainError("partials requested outside the field's domain");
    }
    return partials_(t, x);
  }
  return finite_difference_partials(t, x, h);
}

FieldPartials ScalarField::finite_difference_partials(double t, double x,
                                                      double h) const {
  if (!(h > 0.0)) throw DomainError("stencil step h must be positive");
  if (!domain_.contains(t, x) || !domain_.contains(t + h, x) ||
      !domain_.contains(t - h, x) || !domain_.contains(t, x + h) ||
      !domain_.contains(t, x - h)) {
    throw DomainError("finite-difference stencil leaves the field's domain");
  }
  FieldPartials p;
  p.f_t = (eval_(t + h, x) - eval_(t - h, x)) / (2.0 * h);
  p.f_x = (eval_(t, x + h) - eval_(t, x - h)) / (2.0 * h);
  p.f_xx = (eval_(t, x + h) - 2.0 * eval_(t, x) + eval_(t, x - h)) / (h * h);
  return p;
}

ScalarField ScalarField::without_analytic_partials() const {
  return ScalarField(eval_, domain_);
}

FieldPartials richardson_partials(const ScalarField& f, double t, double x,
                                  double h) {
  const FieldPartials coarse = f.finite_difference_partials(t, x, h);
  const FieldPartials fine = f.finite_difference_partials(t, x, h / 2.0);
  return {(4.0 * fine.f_t - coarse.f_t) / 3.0,
          (4.0 * fine.f_x - coarse.f_x) / 3.0,
          (4.0 * fine.f_xx - coarse.f_xx) / 3.0};
}

ExactSolution ExactSolution::separable_exp(double a, double c) {
  if (a == 0.0) throw DomainError("SeparableExp requires a != 0");
  return {Kind::SeparableExp, a, c, 0.0};
}

ExactSolution ExactSolution::separable_power(double a, double c, double n) {
  if (a == 0.0) throw DomainError("SeparablePower requires a != 0");
  if (n == 0.0 || n == -1.0 || n == -2.0) {
    throw DomainError("SeparablePower requires n outside {-2, -1, 0}");
  }
  return {Kind::SeparablePower, a, c, n};
}

namespace {

Domain half_plane(double a, double cutoff) {
  // {x : a x + cutoff-term > 0} for the separable families.
  if (a > 0.0) return Domain::x_above(-cutoff / a);
  return Domain::x_below(-cutoff / a);
}

}  // namespace

ScalarField ExactSolution::field() const {
  switch (kind) {
    case Kind::Linear: {
      const double a_ = a, b_ = b;
      return ScalarField(
          [a_, b_](double, double x) { return a_ * x + b_; },
          [a_](double, double) { return FieldPartials{0.0, a_, 0.0}; },
          Domain::all());
    }
    case Kind::SeparableExp: {
      const double a_ = a, c_ = b;
      return ScalarField(
          [a_, c_](double t, double x) {
            const double u = a_ * x + c_;
            return a_ * t + u * (std::log(u) - 1.0) / a_;
          },
          [a_, c_](double, double x) {
            const double u = a_ * x + c_;
            return FieldPartials{a_, std::log(u), a_ / u};
          },
          half_plane(a_, c_));
    }
    case Kind::SeparablePower: {
      const double a_ = a, c_ = b, n_ = n;
      return ScalarField(
          [a_, c_, n_](double t, double x) {
            const double u = (n_ + 1.0) * (a_ * x + c_);
            return a_ * t +
                   std::pow(u, (n_ + 2.0) / (n_ + 1.0)) / (a_ * (n_ + 2.0));
          },
          [a_, c_, n_](double, double x) {
            const double u = (n_ + 1.0) * (a_ * x + c_);
            return FieldPartials{a_, std::pow(u, 1.0 / (n_ + 1.0)),
                                 a_ * std::pow(u, -n_ / (n_ + 1.0))};
          },
          // (n+1)(a x + c) > 0
          half_plane((n + 1.0) * a, (n + 1.0) * b));
    }
  }
  throw DomainError("unreachable");
}

SampleBox bounded_box(const Domain& domain, const SampleBox& fallback,
                      double margin) {
  SampleBox box;
  box.t0 = std::max(domain.t_min, fallback.t0) + margin;
  box.t1 = std::min(domain.t_max, fallback.t1) - margin;
  box.x0 = std::max(domain.x_min, fallback.x0) + margin;
  box.x1 = std::min(domain.x_max, fallback.x1) - margin;
  if (!(box.t0 < box.t1 && box.x0 < box.x1)) {
    throw DomainError("sample box is empty after clipping and margin");
  }
  return box;
}

std::vector<Point> grid_points(const SampleBox& box, int nt, int nx) {
  if (nt < 1 || nx < 1) throw DomainError("grid needs at least one point per axis");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(nt) * static_cast<std::size_t>(nx));
  for (int i = 0; i < nt; ++i) {
    const double t = nt == 1 ? 0.5 * (box.t0 + box.t1)
                             : box.t0 + (box.t1 - box.t0) * i / (nt - 1);
    for (int j = 0; j < nx; ++j) {
      const double x = nx == 1 ? 0.5 * (box.x0 + box.x1)
                               : box.x0 + (box.x1 - box.x0) * j / (nx - 1);
      pts.push_back({t, x});
    }
  }
  return pts;
}

std::vector<Point> sample_grid(const Domain& a, const Domain& b, int nt, int nx,
                               double margin) {
  return grid_points(bounded_box(a.intersect(b), SampleBox{}, margin), nt, nx);
}

}  // namespace filtsym
