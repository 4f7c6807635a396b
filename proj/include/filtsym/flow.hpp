#pragma once

#include "filtsym/action.hpp"
#include "filtsym/group.hpp"
#include "filtsym/scalar_field.hpp"

namespace filtsym {

/// Symmetry vector fields of v_t = k(v_x) v_xx, by their action on a
/// function f at a point (-tau f_t - xi f_x + phi for the field
/// tau d/dt + xi d/dx + phi d/dv):
///   X1: -f_t            X2: -f_x          X3: 1
///   X4: -2t f_t - x f_x + f
///   X5: -t f_t - x      (t d/dt - x d/dv, exp diffusivity)
///   X6: -n t f_t - f    (n t d/dt - v d/dv, power diffusivity)
///   X7: rotation in the (x, v) plane; acts on graphs only, see
///       rotation_case.hpp.
enum class VectorFieldId { X1, X2, X3, X4, X5, X6, X7 };

struct VectorField {
  VectorFieldId id = VectorFieldId::X1;
  double n = 1.0;  // used by X6 (and X7 at the graph level)

  VectorField(VectorFieldId id) : id(id) {}  // NOLINT(google-explicit-constructor)
  VectorField(VectorFieldId id, double n) : id(id), n(n) {}
};

const char* to_string(VectorFieldId id);

/// One-parameter flow gamma(exp(eps gen)) applied to f. In closed form:
///   Xi1: f(t - eps, x)          Xi2: f(t, x - eps)
///   Xi3: f + eps                Xi4: e^eps f(e^{-2 eps} t, e^{-eps} x)
///   Xi5: f(e^{-eps} t, x) - eps x
///   Xi6: e^{-eps} f(e^{-n eps} t, x)
ScalarField flow(const Generator& gen, double eps, const ScalarField& f);

/// Central-difference derivative of the flow at eps = 0:
/// (flow(+eps) - flow(-eps)) / (2 eps) evaluated at (t, x).
double infinitesimal_fd(const Generator& gen, const ScalarField& f, double t,
                        double x, double eps);

/// Evaluate the analytic rule of X1..X6 at (t, x), using the field's
/// partials. X7 has no function-level action and throws
/// std::invalid_argument.
double apply_vector_field(const VectorField& vf, const ScalarField& f,
                          double t, double x);

/// The vector field recovered by differentiating the flow of `gen`.
VectorField matching_vector_field(const Generator& gen);

}  // namespace filtsym
