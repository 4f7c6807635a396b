#include "filtsym/action.hpp"

#include <cmath>

namespace filtsym {

ActionGeometry action_geometry(const GroupElement& g) {
  ActionGeometry geo;
  geo.x_scale = g.q;
  geo.t_shift = g.t;
  geo.x_shift = g.x;
  switch (g.spec.group_case) {
    case GroupCase::G1:
      geo.prefactor = g.q;
      geo.t_scale = g.q * g.q;
      break;
    case GroupCase::G2:
      geo.prefactor = g.q;
      geo.t_scale = std::exp(g.r) * g.q * g.q;
      break;
    case GroupCase::G3:
      geo.prefactor = g.q / g.r;
      geo.t_scale = std::pow(g.r, g.spec.n) * g.q * g.q;
      break;
  }
  return geo;
}

namespace {

Domain forward_image(const ActionGeometry& geo, const Domain& d) {
  // (t, x) is admissible iff the preimage lies in d; scales are positive
  // so the rectangle maps to a rectangle with preserved orientation.
  auto lo = [](double scale, double shift, double v) {
    return v == -Domain::kInf ? -Domain::kInf : shift + scale * v;
  };
  auto hi = [](double scale, double shift, double v) {
    return v == Domain::kInf ? Domain::kInf : shift + scale * v;
  };
  return {lo(geo.t_scale, geo.t_shift, d.t_min), hi(geo.t_scale, geo.t_shift, d.t_max),
          lo(geo.x_scale, geo.x_shift, d.x_min), hi(geo.x_scale, geo.x_shift, d.x_max)};
}

}  // namespace

Domain action_image_domain(const GroupElement& g, const Domain& d) {
  return forward_image(action_geometry(g), d);
}

ScalarField linear_action(const GroupElement& g, const ScalarField& f) {
  const ActionGeometry geo = action_geometry(g);
  const Domain image = forward_image(geo, f.domain());

  ScalarField::Eval eval = [geo, f](double t, double x) {
    return geo.prefactor *
           f((t - geo.t_shift) / geo.t_scale, (x - geo.x_shift) / geo.x_scale);
  };
  if (!f.has_analytic_partials()) return ScalarField(std::move(eval), image);

  ScalarField::PartialEval partials = [geo, f](double t, double x) {
    const FieldPartials p = f.partials((t - geo.t_shift) / geo.t_scale,
                                       (x - geo.x_shift) / geo.x_scale);
    return FieldPartials{geo.prefactor * p.f_t / geo.t_scale,
                         geo.prefactor * p.f_x / geo.x_scale,
                         geo.prefactor * p.f_xx / (geo.x_scale * geo.x_scale)};
  };
  return ScalarField(std::move(eval), std::move(partials), image);
}

ScalarField theta(const GroupElement& g, const ScalarField& f) {
  const Domain domain = f.domain();
  if (g.spec.group_case == GroupCase::G2) {
    const double s = g.s, r = g.r, x1 = g.x;
    ScalarField::Eval eval = [f, s, r, x1](double t, double x) {
      return f(t, x) + s - r * (x - x1);
    };
    if (!f.has_analytic_partials()) return ScalarField(std::move(eval), domain);
    ScalarField::PartialEval partials = [f, r](double t, double x) {
      FieldPartials p = f.partials(t, x);
      p.f_x -= r;
      return p;
    };
    return ScalarField(std::move(eval), std::move(partials), domain);
  }
  const double s = g.s;
  ScalarField::Eval eval = [f, s](double t, double x) { return f(t, x) + s; };
  if (!f.has_analytic_partials()) return ScalarField(std::move(eval), domain);
  ScalarField::PartialEval partials = [f](double t, double x) {
    return f.partials(t, x);
  };
  return ScalarField(std::move(eval), std::move(partials), domain);
}

ScalarField gamma_action(const GroupElement& g, const ScalarField& f) {
  return theta(g, linear_action(g, f));
}

double check_homomorphism(const GroupElement& g1, const GroupElement& g2,
                          const ScalarField& f, std::span<const Point> samples) {
  const ScalarField composed = gamma_action(mul(g1, g2), f);
  const ScalarField nested = gamma_action(g1, gamma_action(g2, f));
  double max_err = 0.0;
  for (const Point& p : samples) {
    max_err = std::max(max_err, std::abs(composed(p.t, p.x) - nested(p.t, p.x)));
  }
  return max_err;
}

}  // namespace filtsym
