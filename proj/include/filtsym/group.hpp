#pragma once

#include <Eigen/Dense>

#include "filtsym/errors.hpp"

namespace filtsym {

using Matrix4 = Eigen::Matrix4d;

/// The three solvable symmetry groups, one per diffusivity class of
/// v_t = k(v_x) v_xx:
///   G1 — generic k (four-dimensional group),
///   G2 — k(p) = exp(p),
///   G3 — k(p) = p^n (family parameter n).
enum class GroupCase { G1, G2, G3 };

/// Selects a group and, for G3, fixes the exponent family parameter n.
/// Elements of different n live in different groups and never compose.
struct GroupSpec {
  GroupCase group_case = GroupCase::G1;
  double n = 1.0;  // meaningful for G3 only; must be nonzero there

  static GroupSpec g1() { return {GroupCase::G1, 0.0}; }
  static GroupSpec g2() { return {GroupCase::G2, 0.0}; }
  static GroupSpec g3(double n);

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    if (a.group_case != b.group_case) return false;
    return a.group_case != GroupCase::G3 || a.n == b.n;
  }
};

const char* to_string(GroupCase c);

/// Group element in chart coordinates (q, r, t, x, s).
///
/// Matrix realizations (rows/cols 0..3):
///   G1: diag(q^2, q, q, 1), last column (t, x, s, 1), q > 0
///   G2: (0,0) = e^r q^2, (1,1) = (2,2) = q, (2,1) = -r q,
///       last column (t, x, s, 1), q > 0, r real
///   G3: diag(r^n q^2, q, q/r, 1), last column (t, x, s, 1), q, r > 0
///
/// r is unused for G1 and normalized to 0 there.
struct GroupElement {
  GroupSpec spec;
  double q = 1.0;
  double r = 0.0;
  double t = 0.0;
  double x = 0.0;
  double s = 0.0;

  GroupElement(GroupSpec spec, double q, double r, double t, double x, double s);

  /// G1 convenience constructor (no r parameter).
  GroupElement(GroupSpec spec, double q, double t, double x, double s)
      : GroupElement(spec, q, spec.group_case == GroupCase::G3 ? 1.0 : 0.0, t, x, s) {}

  static GroupElement identity(GroupSpec spec);
};

/// Lie algebra basis elements. Xi1..Xi4 span the generic algebra; Xi5
/// extends it for G2, Xi6 (carrying n) for G3.
enum class GeneratorId { Xi1, Xi2, Xi3, Xi4, Xi5, Xi6 };

struct Generator {
  GeneratorId id = GeneratorId::Xi1;
  double n = 1.0;  // used by Xi6 only

  Generator(GeneratorId id) : id(id) {}  // NOLINT(google-explicit-constructor)
  Generator(GeneratorId id, double n);
};

const char* to_string(GeneratorId id);

/// 4x4 matrix realization of a basis element:
/// Xi1 = E14, Xi2 = E24, Xi3 = E34, Xi4 = diag(2,1,1,0),
/// Xi5 = E11 - E32, Xi6 = diag(n,0,-1,0).
Matrix4 generator_matrix(const Generator& gen);

/// Chart -> matrix. Throws DomainError if the parameters violate the
/// group's constraints (q <= 0, or r <= 0 for G3).
Matrix4 to_matrix(const GroupElement& g);

/// Matrix -> chart, the inverse of to_matrix. Throws StructureError if
/// the matrix does not match the block pattern of `spec` (forbidden
/// entries above tolerance 1e-9 relative to the matrix scale, wrong
/// consistency entries, or non-positive q).
GroupElement from_matrix(const GroupSpec& spec, const Matrix4& m);

/// Group law in chart coordinates; agrees with the matrix product.
/// Throws std::invalid_argument on mismatched specs.
GroupElement mul(const GroupElement& a, const GroupElement& b);

GroupElement inverse(const GroupElement& g);

/// Closed-form exponential of eps * gen, landing in the group `spec`.
/// Xi1..Xi4 are valid in every group; Xi5 requires G2 and Xi6 requires
/// G3 with matching n. Throws std::invalid_argument on a mismatch.
GroupElement exp_generator(const GroupSpec& spec, const Generator& gen, double eps);

/// Same, with the generator's natural group: G1 for Xi1..Xi4, G2 for
/// Xi5, G3 (with gen.n) for Xi6.
GroupElement exp_generator(const Generator& gen, double eps);

GroupSpec natural_spec(const Generator& gen);

/// Matrix exponential by scaling-and-squaring over a truncated power
/// series (`terms` terms per halved argument). Reference for the
/// closed-form exponentials; accurate to round-off for the dilation
/// generators across |eps| <= 3, where a plain 20-term series is not.
Matrix4 expm_series(const Matrix4& m, int terms = 20);

/// Max relative difference between the parameter tuples of two elements
/// of the same spec: |da| / max(1, |a|, |b|) componentwise.
double parameter_distance(const GroupElement& a, const GroupElement& b);

}  // namespace filtsym
