#pragma once

#include <span>

#include "filtsym/group.hpp"
#include "filtsym/scalar_field.hpp"

namespace filtsym {

/// Pullback data of the linear action: g . f evaluates f at the
/// preimage ((t - t_shift)/t_scale, (x - x_shift)/x_scale) and scales
/// the value by `prefactor`.
///
///   G1: prefactor q,   t_scale q^2
///   G2: prefactor q,   t_scale e^r q^2
///   G3: prefactor q/r, t_scale r^n q^2
struct ActionGeometry {
  double prefactor = 1.0;
  double t_scale = 1.0;
  double x_scale = 1.0;
  double t_shift = 0.0;
  double x_shift = 0.0;
};

ActionGeometry action_geometry(const GroupElement& g);

/// Forward image of a domain under g's coordinate change: (t, x) lies in
/// the image iff its preimage lies in `d`.
Domain action_image_domain(const GroupElement& g, const Domain& d);

/// The linear (intertwining) action g . f. The result's domain is the
/// forward image of f's domain; analytic partials propagate by the
/// chain rule when f carries them.
ScalarField linear_action(const GroupElement& g, const ScalarField& f);

/// The twist map. G1/G3: f + s. G2: f + s - r (x - x_shift). Not a
/// group action by itself; composing it with the linear action is.
ScalarField theta(const GroupElement& g, const ScalarField& f);

/// The global action gamma(g) f = theta(g) (g . f). Explicitly:
///   G1: q f((t-t1)/q^2,        (x-x1)/q) + s1
///   G2: q f((t-t1)/(e^r q^2),  (x-x1)/q) + s1 - r1 (x - x1)
///   G3: (q/r) f((t-t1)/(r^n q^2), (x-x1)/q) + s1
ScalarField gamma_action(const GroupElement& g, const ScalarField& f);

/// Max over the samples of |gamma(g1 g2) f - gamma(g1)(gamma(g2) f)|.
/// Throws DomainError if a sample leaves either side's domain.
double check_homomorphism(const GroupElement& g1, const GroupElement& g2,
                          const ScalarField& f, std::span<const Point> samples);

}  // namespace filtsym
