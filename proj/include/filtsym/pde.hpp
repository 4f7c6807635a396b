#pragma once

#include <functional>
#include <span>
#include <string>

#include "filtsym/group.hpp"
#include "filtsym/scalar_field.hpp"

namespace filtsym {

/// The diffusivity k(p), p = v_x, of v_t = k(v_x) v_xx.
///
/// Domains: Exp and ArctanExp accept every p; Power(n) accepts every p
/// when n is a nonnegative integer and requires p > 0 otherwise.
/// Generic diffusivities additionally require |k'(p)| > 1e-12 at each
/// evaluation point (checked with a numeric derivative), since the
/// symmetry classification assumes a genuinely nonlinear k.
class KSpec {
 public:
  enum class Kind { Generic, Exp, Power, ArctanExp };

  static KSpec exp();
  static KSpec power(double n);
  static KSpec arctan_exp(double n);
  static KSpec generic(std::function<double(double)> k, std::string label = "k(p)");

  /// Generic diffusivity from an expression in the variable p.
  static KSpec generic_expression(const std::string& src);

  double operator()(double p) const;

  Kind kind() const { return kind_; }
  double n() const { return n_; }
  const std::string& label() const { return label_; }

 private:
  KSpec(Kind kind, double n, std::function<double(double)> fn, std::string label)
      : kind_(kind), n_(n), fn_(std::move(fn)), label_(std::move(label)) {}

  Kind kind_;
  double n_;
  std::function<double(double)> fn_;
  std::string label_;
};

enum class PartialsMode {
  Auto,     // analytic partials when the field has them, else stencils
  Stencil,  // central differences only
};

/// Pointwise residual f_t - k(f_x) f_xx.
double residual(const ScalarField& f, const KSpec& k, double t, double x,
                double h = ScalarField::kDefaultStep,
                PartialsMode mode = PartialsMode::Auto);

struct InvarianceResult {
  double max_residual_before = 0.0;
  double max_residual_after = 0.0;
};

/// Max |residual| of f and of gamma(g) f over the grid. Requires g's
/// group to match k's symmetry class (G1 <-> Generic, G2 <-> Exp,
/// G3 <-> Power with the same n); throws std::invalid_argument
/// otherwise.
InvarianceResult invariance_check(const ScalarField& f, const KSpec& k,
                                  const GroupElement& g,
                                  std::span<const Point> grid,
                                  double h = ScalarField::kDefaultStep,
                                  PartialsMode mode = PartialsMode::Auto);

/// Grid interior to both dom f and dom gamma(g) f, clipped to a finite
/// box and inset from every boundary (so k-domain edges and stencil
/// excursions stay clear).
std::vector<Point> invariance_grid(const ScalarField& f, const GroupElement& g,
                                   int nt = 20, int nx = 20,
                                   double h = ScalarField::kDefaultStep);

}  // namespace filtsym
