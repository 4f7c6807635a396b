#include "filtsym/flow.hpp"

#include <cmath>
#include <stdexcept>

namespace filtsym {

const char* to_string(VectorFieldId id) {
  switch (id) {
    case VectorFieldId::X1: return "X1";
    case VectorFieldId::X2: return "X2";
    case VectorFieldId::X3: return "X3";
    case VectorFieldId::X4: return "X4";
    case VectorFieldId::X5: return "X5";
    case VectorFieldId::X6: return "X6";
    case VectorFieldId::X7: return "X7";
  }
  return "?";
}

ScalarField flow(const Generator& gen, double eps, const ScalarField& f) {
  return gamma_action(exp_generator(gen, eps), f);
}

double infinitesimal_fd(const Generator& gen, const ScalarField& f, double t,
                        double x, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("infinitesimal_fd needs eps > 0");
  const ScalarField forward = flow(gen, eps, f);
  const ScalarField backward = flow(gen, -eps, f);
  return (forward(t, x) - backward(t, x)) / (2.0 * eps);
}

double apply_vector_field(const VectorField& vf, const ScalarField& f,
                          double t, double x) {
  switch (vf.id) {
    case VectorFieldId::X3:
      return 1.0;
    case VectorFieldId::X1:
      return -f.partials(t, x).f_t;
    case VectorFieldId::X2:
      return -f.partials(t, x).f_x;
    case VectorFieldId::X4: {
      const FieldPartials p = f.partials(t, x);
      return -2.0 * t * p.f_t - x * p.f_x + f(t, x);
    }
    case VectorFieldId::X5:
      return -t * f.partials(t, x).f_t - x;
    case VectorFieldId::X6:
      return -f(t, x) - vf.n * t * f.partials(t, x).f_t;
    case VectorFieldId::X7:
      throw std::invalid_argument(
          "X7 acts on solution graphs, not on functions; use the rotation-case "
          "graph action");
  }
  throw std::invalid_argument("unreachable");
}

VectorField matching_vector_field(const Generator& gen) {
  switch (gen.id) {
    case GeneratorId::Xi1: return VectorFieldId::X1;
    case GeneratorId::Xi2: return VectorFieldId::X2;
    case GeneratorId::Xi3: return VectorFieldId::X3;
    case GeneratorId::Xi4: return VectorFieldId::X4;
    case GeneratorId::Xi5: return VectorFieldId::X5;
    case GeneratorId::Xi6: return {VectorFieldId::X6, gen.n};
  }
  throw std::invalid_argument("unreachable");
}

}  // namespace filtsym
