#include "filtsym/group.hpp"

#include <cmath>
#include <string>

namespace filtsym {

namespace {

constexpr double kPatternTol = 1e-9;

[[noreturn]] void throw_spec_mismatch(const char* what) {
  throw std::invalid_argument(std::string("group spec mismatch: ") + what);
}

}  // namespace

const char* to_string(GroupCase c) {
  switch (c) {
    case GroupCase::G1: return "g1";
    case GroupCase::G2: return "g2";
    case GroupCase::G3: return "g3";
  }
  return "?";
}

const char* to_string(GeneratorId id) {
  switch (id) {
    case GeneratorId::Xi1: return "xi1";
    case GeneratorId::Xi2: return "xi2";
    case GeneratorId::Xi3: return "xi3";
    case GeneratorId::Xi4: return "xi4";
    case GeneratorId::Xi5: return "xi5";
    case GeneratorId::Xi6: return "xi6";
  }
  return "?";
}

GroupSpec GroupSpec::g3(double n) {
  if (n == 0.0 || !std::isfinite(n)) {
    throw DomainError("G3 family parameter n must be finite and nonzero");
  }
  return {GroupCase::G3, n};
}

GroupElement::GroupElement(GroupSpec spec_, double q_, double r_, double t_,
                           double x_, double s_)
    : spec(spec_), q(q_), r(r_), t(t_), x(x_), s(s_) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw DomainError("group parameter q must be positive");
  }
  switch (spec.group_case) {
    case GroupCase::G1:
      r = 0.0;  // unused in this chart
      break;
    case GroupCase::G2:
      if (!std::isfinite(r)) throw DomainError("group parameter r must be finite");
      break;
    case GroupCase::G3:
      if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError("G3 group parameter r must be positive");
      }
      break;
  }
}

GroupElement GroupElement::identity(GroupSpec spec) {
  const double r = spec.group_case == GroupCase::G3 ? 1.0 : 0.0;
  return GroupElement(spec, 1.0, r, 0.0, 0.0, 0.0);
}

Matrix4 generator_matrix(const Generator& gen) {
  Matrix4 m = Matrix4::Zero();
  switch (gen.id) {
    case GeneratorId::Xi1: m(0, 3) = 1.0; break;
    case GeneratorId::Xi2: m(1, 3) = 1.0; break;
    case GeneratorId::Xi3: m(2, 3) = 1.0; break;
    case GeneratorId::Xi4: m.diagonal() << 2.0, 1.0, 1.0, 0.0; break;
    case GeneratorId::Xi5:
      m(0, 0) = 1.0;
      m(2, 1) = -1.0;
      break;
    case GeneratorId::Xi6: m.diagonal() << gen.n, 0.0, -1.0, 0.0; break;
  }
  return m;
}

Generator::Generator(GeneratorId id_, double n_) : id(id_), n(n_) {
  if (id == GeneratorId::Xi6 && (n == 0.0 || !std::isfinite(n))) {
    throw DomainError("Xi6 requires a finite nonzero family parameter n");
  }
}

Matrix4 to_matrix(const GroupElement& g) {
  Matrix4 m = Matrix4::Identity();
  m(0, 3) = g.t;
  m(1, 3) = g.x;
  m(2, 3) = g.s;
  m(1, 1) = g.q;
  switch (g.spec.group_case) {
    case GroupCase::G1:
      m(0, 0) = g.q * g.q;
      m(2, 2) = g.q;
      break;
    case GroupCase::G2:
      m(0, 0) = std::exp(g.r) * g.q * g.q;
      m(2, 2) = g.q;
      m(2, 1) = -g.r * g.q;
      break;
    case GroupCase::G3:
      m(0, 0) = std::pow(g.r, g.spec.n) * g.q * g.q;
      m(2, 2) = g.q / g.r;
      break;
  }
  return m;
}

GroupElement from_matrix(const GroupSpec& spec, const Matrix4& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double tol = kPatternTol * scale;

  auto expect_zero = [&](int i, int j) {
    if (std::abs(m(i, j)) > tol) {
      throw StructureError("nonzero entry at (" + std::to_string(i) + "," +
                           std::to_string(j) + ") outside the group's block pattern");
    }
  };
  auto expect_value = [&](int i, int j, double v, const char* what) {
    if (std::abs(m(i, j) - v) > tol) {
      throw StructureError(std::string("entry (") + std::to_string(i) + "," +
                           std::to_string(j) + ") does not match " + what);
    }
  };

  // Shared pattern: bottom row (0,0,0,1), zero upper block off-pattern.
  expect_zero(3, 0);
  expect_zero(3, 1);
  expect_zero(3, 2);
  expect_value(3, 3, 1.0, "the affine 1");
  expect_zero(0, 1);
  expect_zero(0, 2);
  expect_zero(1, 0);
  expect_zero(1, 2);
  expect_zero(2, 0);
  if (spec.group_case != GroupCase::G2) expect_zero(2, 1);

  const double q = m(1, 1);
  if (!(q > 0.0)) throw StructureError("diagonal entry (1,1) must be a positive q");

  const double t = m(0, 3);
  const double x = m(1, 3);
  const double s = m(2, 3);

  switch (spec.group_case) {
    case GroupCase::G1: {
      expect_value(2, 2, q, "q");
      expect_value(0, 0, q * q, "q^2");
      return GroupElement(spec, q, t, x, s);
    }
    case GroupCase::G2: {
      expect_value(2, 2, q, "q");
      const double r = -m(2, 1) / q;
      expect_value(0, 0, std::exp(r) * q * q, "exp(r) q^2");
      return GroupElement(spec, q, r, t, x, s);
    }
    case GroupCase::G3: {
      if (!(m(2, 2) > 0.0)) {
        throw StructureError("diagonal entry (2,2) must be a positive q/r");
      }
      const double r = q / m(2, 2);
      expect_value(0, 0, std::pow(r, spec.n) * q * q, "r^n q^2");
      return GroupElement(spec, q, r, t, x, s);
    }
  }
  throw StructureError("unreachable");
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  if (!(a.spec == b.spec)) throw_spec_mismatch("mul requires elements of the same group");
  switch (a.spec.group_case) {
    case GroupCase::G1:
      return GroupElement(a.spec, a.q * b.q, a.t + a.q * a.q * b.t,
                          a.x + a.q * b.x, a.s + a.q * b.s);
    case GroupCase::G2:
      return GroupElement(a.spec, a.q * b.q, a.r + b.r,
                          a.t + std::exp(a.r) * a.q * a.q * b.t,
                          a.x + a.q * b.x, a.s + a.q * (b.s - a.r * b.x));
    case GroupCase::G3:
      return GroupElement(a.spec, a.q * b.q, a.r * b.r,
                          a.t + std::pow(a.r, a.spec.n) * a.q * a.q * b.t,
                          a.x + a.q * b.x, a.s + (a.q / a.r) * b.s);
  }
  throw_spec_mismatch("unreachable");
}

GroupElement inverse(const GroupElement& g) {
  switch (g.spec.group_case) {
    case GroupCase::G1:
      return GroupElement(g.spec, 1.0 / g.q, -g.t / (g.q * g.q), -g.x / g.q,
                          -g.s / g.q);
    case GroupCase::G2:
      return GroupElement(g.spec, 1.0 / g.q, -g.r,
                          -g.t * std::exp(-g.r) / (g.q * g.q), -g.x / g.q,
                          -(g.s + g.r * g.x) / g.q);
    case GroupCase::G3:
      return GroupElement(g.spec, 1.0 / g.q, 1.0 / g.r,
                          -g.t / (std::pow(g.r, g.spec.n) * g.q * g.q),
                          -g.x / g.q, -g.s * g.r / g.q);
  }
  throw DomainError("unreachable");
}

GroupSpec natural_spec(const Generator& gen) {
  switch (gen.id) {
    case GeneratorId::Xi5: return GroupSpec::g2();
    case GeneratorId::Xi6: return GroupSpec::g3(gen.n);
    default: return GroupSpec::g1();
  }
}

GroupElement exp_generator(const GroupSpec& spec, const Generator& gen, double eps) {
  const double r_id = spec.group_case == GroupCase::G3 ? 1.0 : 0.0;
  switch (gen.id) {
    case GeneratorId::Xi1:
      return GroupElement(spec, 1.0, r_id, eps, 0.0, 0.0);
    case GeneratorId::Xi2:
      return GroupElement(spec, 1.0, r_id, 0.0, eps, 0.0);
    case GeneratorId::Xi3:
      return GroupElement(spec, 1.0, r_id, 0.0, 0.0, eps);
    case GeneratorId::Xi4:
      return GroupElement(spec, std::exp(eps), r_id, 0.0, 0.0, 0.0);
    case GeneratorId::Xi5:
      if (spec.group_case != GroupCase::G2) {
        throw_spec_mismatch("Xi5 exponentiates into G2");
      }
      return GroupElement(spec, 1.0, eps, 0.0, 0.0, 0.0);
    case GeneratorId::Xi6:
      if (spec.group_case != GroupCase::G3 || spec.n != gen.n) {
        throw_spec_mismatch("Xi6 exponentiates into G3 with the same n");
      }
      return GroupElement(spec, 1.0, std::exp(eps), 0.0, 0.0, 0.0);
  }
  throw_spec_mismatch("unreachable");
}

GroupElement exp_generator(const Generator& gen, double eps) {
  return exp_generator(natural_spec(gen), gen, eps);
}

Matrix4 expm_series(const Matrix4& m, int terms) {
  int squarings = 0;
  double norm = m.cwiseAbs().maxCoeff();
  while (norm > 0.5 && squarings < 60) {
    norm /= 2.0;
    ++squarings;
  }
  const Matrix4 scaled = m / std::pow(2.0, squarings);
  Matrix4 sum = Matrix4::Identity();
  Matrix4 term = Matrix4::Identity();
  for (int k = 1; k < terms; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

double parameter_distance(const GroupElement& a, const GroupElement& b) {
  if (!(a.spec == b.spec)) throw_spec_mismatch("parameter_distance");
  auto rel = [](double u, double v) {
    return std::abs(u - v) / std::max({1.0, std::abs(u), std::abs(v)});
  };
  double d = rel(a.q, b.q);
  d = std::max(d, rel(a.r, b.r));
  d = std::max(d, rel(a.t, b.t));
  d = std::max(d, rel(a.x, b.x));
  d = std::max(d, rel(a.s, b.s));
  return d;
}

}  // namespace filtsym
