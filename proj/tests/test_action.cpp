#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "filtsym/action.hpp"
#include "filtsym/rng.hpp"
#include "filtsym/verify.hpp"
#include "oracles.hpp"

using namespace filtsym;

namespace {

ScalarField field_t_plus_x() {
  return ScalarField([](double t, double x) { return t + x; });
}

ScalarField field_x_squared() {
  return ScalarField([](double, double x) { return x * x; });
}

std::vector<Point> box_samples(int n = 10) {
  return grid_points(SampleBox{-2.0, 2.0, -2.0, 2.0}, n, n);
}

const GroupSpec kSpecs[] = {GroupSpec::g1(), GroupSpec::g2(), GroupSpec::g3(1.0),
                            GroupSpec::g3(2.0)};

}  // namespace

TEST_CASE("linear action") {
  SECTION("identity leaves the field untouched") {
    const ScalarField f = field_t_plus_x();
    for (const GroupSpec& spec : kSpecs) {
      const ScalarField gf = linear_action(GroupElement::identity(spec), f);
      CHECK(gf(1.25, -0.5) == f(1.25, -0.5));
    }
  }
  SECTION("G1 substitution") {
    const GroupElement g(GroupSpec::g1(), 2.0, 1.0, 3.0, 0.0);
    const ScalarField gf = linear_action(g, field_t_plus_x());
    CHECK(gf(9.0, 7.0) == 8.0);  // 2 f(2, 2)
  }
  SECTION("G3 substitution with n = 1") {
    const GroupElement g(GroupSpec::g3(1.0), 1.0, 2.0, 0.0, 0.0, 0.0);
    const ScalarField gf = linear_action(g, field_t_plus_x());
    for (const Point& p : box_samples(4)) {
      CHECK(gf(p.t, p.x) == Catch::Approx(0.5 * (p.t / 2.0 + p.x)).margin(1e-14));
    }
  }
}

TEST_CASE("theta twist") {
  const ScalarField zero([](double, double) { return 0.0; });
  SECTION("trivial parameters change nothing") {
    const ScalarField tf = theta(GroupElement::identity(GroupSpec::g2()), zero);
    CHECK(tf(0.3, 4.0) == 0.0);
  }
  SECTION("G1 additive shift") {
    const GroupElement g(GroupSpec::g1(), 1.0, 0.0, 0.0, 5.0);
    const ScalarField tf = theta(g, zero);
    CHECK(tf(0.0, 0.0) == 5.0);
    CHECK(tf(2.0, -3.0) == 5.0);
  }
  SECTION("G2 subtracts the shear term") {
    const GroupElement g(GroupSpec::g2(), 1.0, 1.0, 0.0, 2.0, 3.0);
    const ScalarField tf = theta(g, zero);
    CHECK(tf(0.0, 5.0) == 0.0);  // 3 - 1 (5 - 2)
    CHECK(tf(0.0, 2.0) == 3.0);
  }
}

TEST_CASE("theta alone fails the action law quantitatively") {
  const ScalarField f = field_t_plus_x();
  const double q1 = 2.0, s2 = 1.0;
  const GroupElement g1(GroupSpec::g1(), q1, 0.25, -1.0, 0.5);
  const GroupElement g2(GroupSpec::g1(), 3.0, 1.0, 2.0, s2);
  const ScalarField lhs = theta(mul(g1, g2), f);
  const ScalarField rhs = theta(g1, theta(g2, f));
  for (const Point& p : box_samples(5)) {
    CHECK(std::abs(lhs(p.t, p.x) - rhs(p.t, p.x)) == std::abs(q1 - 1.0) * s2);
  }
}

TEST_CASE("gamma global action") {
  SECTION("G1 worked example") {
    const GroupElement g(GroupSpec::g1(), 2.0, 1.0, 3.0, 5.0);
    const ScalarField gf = gamma_action(g, field_t_plus_x());
    CHECK(gf(9.0, 7.0) == 13.0);  // 2 f(2,2) + 5
  }
  SECTION("identity is exact") {
    for (const GroupSpec& spec : kSpecs) {
      const ScalarField f = field_x_squared();
      const ScalarField gf = gamma_action(GroupElement::identity(spec), f);
      for (const Point& p : box_samples(5)) {
        CHECK(gf(p.t, p.x) == f(p.t, p.x));
      }
    }
  }
  SECTION("G2 shear annihilates the coordinate field") {
    const GroupElement g(GroupSpec::g2(), 1.0, 1.0, 0.0, 0.0, 0.0);
    const ScalarField gf =
        gamma_action(g, ScalarField([](double, double x) { return x; }));
    for (const Point& p : box_samples(5)) {
      CHECK(gf(p.t, p.x) == Catch::Approx(0.0).margin(1e-15));
    }
  }
  SECTION("matches the expanded formulas on random draws") {
    for (const GroupSpec& spec : kSpecs) {
      SplitMix64 rng(555);
      const ScalarField f = field_x_squared();
      for (int i = 0; i < 50; ++i) {
        const GroupElement g = random_element(rng, spec, GroupDrawRanges::moderate());
        const ScalarField gf = gamma_action(g, f);
        for (const Point& p : box_samples(4)) {
          const double expanded = oracles::gamma_expanded(g, f, p.t, p.x);
          REQUIRE(gf(p.t, p.x) ==
                  Catch::Approx(expanded).margin(1e-12).epsilon(1e-12));
        }
      }
    }
  }
  SECTION("factorization through theta and the linear action is exact") {
    SplitMix64 rng(556);
    for (const GroupSpec& spec : kSpecs) {
      const GroupElement g = random_element(rng, spec, GroupDrawRanges::moderate());
      const ScalarField f = field_x_squared();
      const ScalarField composed = gamma_action(g, f);
      const ScalarField manual = theta(g, linear_action(g, f));
      for (const Point& p : box_samples(4)) {
        CHECK(composed(p.t, p.x) == manual(p.t, p.x));
      }
    }
  }
}

TEST_CASE("domains transform with the action") {
  const ScalarField f = separable_exp_solution(1.0, 1.0);  // x > -1
  const GroupElement g(GroupSpec::g1(), 2.0, 0.0, 3.0, 0.0);
  const ScalarField gf = gamma_action(g, f);
  // x admissible iff (x - 3)/2 > -1, i.e. x > 1.
  CHECK(gf.domain().x_min == Catch::Approx(1.0));
  CHECK_NOTHROW(gf(0.0, 1.5));
  CHECK_THROWS_AS(gf(0.0, 0.5), DomainError);
}

TEST_CASE("check_homomorphism") {
  SECTION("identity second factor gives zero exactly") {
    SplitMix64 rng(77);
    for (const GroupSpec& spec : kSpecs) {
      const GroupElement g1 = random_element(rng, spec, GroupDrawRanges::moderate());
      const GroupElement id = GroupElement::identity(spec);
      const auto samples = box_samples();
      CHECK(check_homomorphism(g1, id, field_t_plus_x(), samples) == 0.0);
    }
  }
  SECTION("G1 random pairs stay below 1e-10") {
    SplitMix64 rng(78);
    const auto samples = box_samples();
    for (int i = 0; i < 100; ++i) {
      const GroupElement g1 = random_element(rng, GroupSpec::g1(), GroupDrawRanges::moderate());
      const GroupElement g2 = random_element(rng, GroupSpec::g1(), GroupDrawRanges::moderate());
      REQUIRE(check_homomorphism(g1, g2, field_t_plus_x(), samples) < 1e-10);
    }
  }
  SECTION("G2 worked pair on x^2") {
    const GroupElement g1(GroupSpec::g2(), 2.0, 1.0, 0.0, 1.0, 1.0);
    const GroupElement g2(GroupSpec::g2(), 3.0, -1.0, 0.0, 2.0, 0.0);
    CHECK(check_homomorphism(g1, g2, field_x_squared(), box_samples()) < 1e-9);
  }
  SECTION("domain violations surface as DomainError") {
    const ScalarField f = separable_exp_solution(1.0, 1.0);
    const GroupElement g1(GroupSpec::g1(), 2.0, 0.0, 3.0, 0.0);
    const GroupElement id = GroupElement::identity(GroupSpec::g1());
    const std::vector<Point> bad = {{0.0, 0.0}};  // outside gamma(g1) f's domain
    CHECK_THROWS_AS(check_homomorphism(g1, id, f, bad), DomainError);
  }
}

TEST_CASE("action laws on random draws") {
  const NamedField fixtures[] = {
      {"t + x", field_t_plus_x()},
      {"x^2", field_x_squared()},
      {"sin(x) + t",
       ScalarField([](double t, double x) { return std::sin(x) + t; })},
  };
  for (const GroupSpec& spec : kSpecs) {
    DYNAMIC_SECTION("case " << to_string(spec.group_case) << " n=" << spec.n) {
      SplitMix64 rng(808);
      const auto samples = box_samples();
      for (const NamedField& fixture : fixtures) {
        double worst_hom = 0.0;
        double worst_inv = 0.0;
        for (int i = 0; i < 170; ++i) {
          const GroupElement g1 =
              random_element(rng, spec, GroupDrawRanges::moderate());
          const GroupElement g2 =
              random_element(rng, spec, GroupDrawRanges::moderate());
          worst_hom = std::max(
              worst_hom, check_homomorphism(g1, g2, fixture.field, samples));

          const ScalarField back =
              gamma_action(g1, gamma_action(inverse(g1), fixture.field));
          for (const Point& p : samples) {
            worst_inv = std::max(
                worst_inv, std::abs(back(p.t, p.x) - fixture.field(p.t, p.x)));
          }
        }
        REQUIRE(worst_hom < 1e-9);
        REQUIRE(worst_inv < 1e-9);
      }
    }
  }
}
