#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "filtsym/group.hpp"
#include "filtsym/rng.hpp"
#include "filtsym/verify.hpp"
#include "oracles.hpp"

using namespace filtsym;

namespace {

const GroupSpec kSpecs[] = {GroupSpec::g1(), GroupSpec::g2(), GroupSpec::g3(-1.0),
                            GroupSpec::g3(1.0), GroupSpec::g3(2.0)};

std::vector<Generator> generators_of(const GroupSpec& spec) {
  std::vector<Generator> gens = {GeneratorId::Xi1, GeneratorId::Xi2,
                                 GeneratorId::Xi3, GeneratorId::Xi4};
  if (spec.group_case == GroupCase::G2) gens.emplace_back(GeneratorId::Xi5);
  if (spec.group_case == GroupCase::G3) gens.push_back({GeneratorId::Xi6, spec.n});
  return gens;
}

}  // namespace

TEST_CASE("to_matrix matches the block patterns") {
  SECTION("G1 identity") {
    const Matrix4 m = to_matrix(GroupElement::identity(GroupSpec::g1()));
    CHECK(m.isApprox(Matrix4::Identity(), 0.0));
  }
  SECTION("G1 generic element") {
    const GroupElement g(GroupSpec::g1(), 2.0, 1.0, 3.0, 5.0);
    const Matrix4 m = to_matrix(g);
    CHECK(m(0, 0) == 4.0);
    CHECK(m(1, 1) == 2.0);
    CHECK(m(2, 2) == 2.0);
    CHECK(m(3, 3) == 1.0);
    CHECK(m(0, 3) == 1.0);
    CHECK(m(1, 3) == 3.0);
    CHECK(m(2, 3) == 5.0);
    CHECK(m(2, 1) == 0.0);
  }
  SECTION("G3 diagonal with n = 1") {
    const GroupElement g(GroupSpec::g3(1.0), 1.0, 2.0, 0.0, 0.0, 0.0);
    const Matrix4 m = to_matrix(g);
    CHECK(m(0, 0) == Catch::Approx(2.0).margin(1e-15));
    CHECK(m(1, 1) == 1.0);
    CHECK(m(2, 2) == Catch::Approx(0.5).margin(1e-15));
    CHECK(m(3, 3) == 1.0);
  }
  SECTION("G2 carries the shear entry") {
    const GroupElement g(GroupSpec::g2(), 1.0, 1.0, 0.0, 0.0, 0.0);
    const Matrix4 m = to_matrix(g);
    CHECK(m(0, 0) == Catch::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(m(2, 1) == -1.0);
  }
  SECTION("invalid parameters are rejected at construction") {
    CHECK_THROWS_AS(GroupElement(GroupSpec::g1(), 0.0, 0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(GroupElement(GroupSpec::g1(), -2.0, 0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(GroupElement(GroupSpec::g3(1.0), 1.0, -1.0, 0.0, 0.0, 0.0),
                    DomainError);
    CHECK_THROWS_AS(GroupSpec::g3(0.0), DomainError);
  }
}

TEST_CASE("from_matrix inverts the chart") {
  SECTION("identity") {
    const GroupElement g = from_matrix(GroupSpec::g1(), Matrix4::Identity());
    CHECK(g.q == 1.0);
    CHECK(g.t == 0.0);
    CHECK(g.x == 0.0);
    CHECK(g.s == 0.0);
  }
  SECTION("G1 block values") {
    Matrix4 m = Matrix4::Zero();
    m.diagonal() << 4.0, 2.0, 2.0, 1.0;
    m(0, 3) = 1.0;
    m(1, 3) = 3.0;
    m(2, 3) = 5.0;
    const GroupElement g = from_matrix(GroupSpec::g1(), m);
    CHECK(g.q == Catch::Approx(2.0).margin(1e-12));
    CHECK(g.t == 1.0);
    CHECK(g.x == 3.0);
    CHECK(g.s == 5.0);
  }
  SECTION("G2 recovers r from the shear entry") {
    Matrix4 m = Matrix4::Identity();
    m(0, 0) = std::exp(1.0);
    m(2, 1) = -1.0;
    const GroupElement g = from_matrix(GroupSpec::g2(), m);
    CHECK(g.q == 1.0);
    CHECK(g.r == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("pattern violations raise StructureError") {
    Matrix4 m = Matrix4::Identity();
    m(1, 0) = 0.1;
    CHECK_THROWS_AS(from_matrix(GroupSpec::g1(), m), StructureError);

    Matrix4 neg = Matrix4::Identity();
    neg(0, 0) = 1.0;
    neg(1, 1) = -1.0;
    CHECK_THROWS_AS(from_matrix(GroupSpec::g1(), neg), StructureError);

    // G2's shear entry is forbidden for G1.
    const GroupElement g2(GroupSpec::g2(), 2.0, 1.5, 0.0, 0.0, 0.0);
    CHECK_THROWS_AS(from_matrix(GroupSpec::g1(), to_matrix(g2)), StructureError);
  }
  SECTION("round-trip holds up to |params| = 1e6") {
    const GroupElement big(GroupSpec::g1(), 1e6, 1e6, -1e6, 123456.789);
    CHECK(parameter_distance(from_matrix(GroupSpec::g1(), to_matrix(big)), big) <
          1e-12);
  }
}

TEST_CASE("mul matches the matrix product") {
  SECTION("G1 worked example") {
    const GroupElement a(GroupSpec::g1(), 2.0, 1.0, 3.0, 5.0);
    const GroupElement b(GroupSpec::g1(), 3.0, 2.0, 1.0, 4.0);
    const GroupElement c = mul(a, b);
    CHECK(c.q == 6.0);
    CHECK(c.t == 9.0);
    CHECK(c.x == 5.0);
    CHECK(c.s == 13.0);
  }
  SECTION("identity is neutral") {
    for (const GroupSpec& spec : kSpecs) {
      SplitMix64 rng(7);
      const GroupElement g = random_element(rng, spec);
      const GroupElement id = GroupElement::identity(spec);
      CHECK(parameter_distance(mul(g, id), g) == 0.0);
      CHECK(parameter_distance(mul(id, g), g) == 0.0);
    }
  }
  SECTION("G2 t-component follows matrix arithmetic") {
    // Matrix multiplication gives t1 + e^{r1} q1^2 t2 = 4e here.
    const GroupElement a(GroupSpec::g2(), 2.0, 1.0, 0.0, 0.0, 0.0);
    const GroupElement b(GroupSpec::g2(), 1.0, 0.0, 1.0, 0.0, 0.0);
    const GroupElement c = mul(a, b);
    CHECK(c.t == Catch::Approx(4.0 * std::exp(1.0)).epsilon(1e-14));
    const GroupElement via_matrix =
        from_matrix(GroupSpec::g2(), to_matrix(a) * to_matrix(b));
    CHECK(parameter_distance(c, via_matrix) < 1e-12);
  }
  SECTION("mismatched specs are rejected") {
    const GroupElement g1 = GroupElement::identity(GroupSpec::g1());
    const GroupElement g2 = GroupElement::identity(GroupSpec::g2());
    CHECK_THROWS_AS(mul(g1, g2), std::invalid_argument);
    const GroupElement n1 = GroupElement::identity(GroupSpec::g3(1.0));
    const GroupElement n2 = GroupElement::identity(GroupSpec::g3(2.0));
    CHECK_THROWS_AS(mul(n1, n2), std::invalid_argument);
  }
}

TEST_CASE("inverse") {
  SECTION("identity") {
    for (const GroupSpec& spec : kSpecs) {
      const GroupElement id = GroupElement::identity(spec);
      CHECK(parameter_distance(inverse(id), id) == 0.0);
    }
  }
  SECTION("G1 worked example") {
    const GroupElement g(GroupSpec::g1(), 2.0, 1.0, 3.0, 5.0);
    const GroupElement inv = inverse(g);
    CHECK(inv.q == 0.5);
    CHECK(inv.t == -0.25);
    CHECK(inv.x == -1.5);
    CHECK(inv.s == -2.5);
  }
  SECTION("G2 flips r") {
    const GroupElement g(GroupSpec::g2(), 1.0, 1.0, 0.0, 0.0, 0.0);
    const GroupElement inv = inverse(g);
    CHECK(inv.q == 1.0);
    CHECK(inv.r == -1.0);
    CHECK(inv.t == 0.0);
    CHECK(inv.x == 0.0);
    CHECK(inv.s == 0.0);
  }
  SECTION("agrees with the matrix inverse") {
    for (const GroupSpec& spec : kSpecs) {
      SplitMix64 rng(11);
      for (int i = 0; i < 50; ++i) {
        const GroupElement g = random_element(rng, spec);
        const GroupElement via_matrix =
            from_matrix(spec, to_matrix(g).inverse().eval());
        CHECK(parameter_distance(inverse(g), via_matrix) < 1e-9);
      }
    }
  }
}

TEST_CASE("exp_generator closed forms") {
  SECTION("Xi4 at eps = ln 2") {
    const GroupElement g = exp_generator(Generator(GeneratorId::Xi4), std::log(2.0));
    CHECK(g.spec.group_case == GroupCase::G1);
    CHECK(g.q == Catch::Approx(2.0).epsilon(1e-15));
    CHECK(g.t == 0.0);
    CHECK(g.x == 0.0);
    CHECK(g.s == 0.0);
    const Matrix4 m = to_matrix(g);
    CHECK(m(0, 0) == Catch::Approx(4.0).epsilon(1e-14));
    CHECK(m(1, 1) == Catch::Approx(2.0).epsilon(1e-15));
  }
  SECTION("eps = 0 is the identity for every generator") {
    for (const GroupSpec& spec : kSpecs) {
      for (const Generator& gen : generators_of(spec)) {
        CHECK(parameter_distance(exp_generator(spec, gen, 0.0),
                                 GroupElement::identity(spec)) == 0.0);
      }
    }
  }
  SECTION("Xi5 series terminates off-diagonal") {
    const GroupElement g = exp_generator(Generator(GeneratorId::Xi5), 1.0);
    CHECK(g.spec.group_case == GroupCase::G2);
    CHECK(g.q == 1.0);
    CHECK(g.r == 1.0);
    const Matrix4 m = to_matrix(g);
    CHECK(m(0, 0) == Catch::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(m(2, 1) == -1.0);
  }
  SECTION("generator/spec mismatches are rejected") {
    CHECK_THROWS_AS(exp_generator(GroupSpec::g1(), Generator(GeneratorId::Xi5), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(exp_generator(GroupSpec::g2(), {GeneratorId::Xi6, 1.0}, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(exp_generator(GroupSpec::g3(2.0), {GeneratorId::Xi6, 1.0}, 1.0),
                    std::invalid_argument);
  }
  SECTION("matches a long plain Taylor series") {
    for (const GroupSpec& spec : kSpecs) {
      SplitMix64 rng(13);
      for (const Generator& gen : generators_of(spec)) {
        for (int i = 0; i < 20; ++i) {
          const double eps = rng.uniform(-3.0, 3.0);
          const Matrix4 closed = to_matrix(exp_generator(spec, gen, eps));
          const Matrix4 series = oracles::expm_taylor(eps * generator_matrix(gen));
          const double scale = std::max(1.0, series.cwiseAbs().maxCoeff());
          CHECK((closed - series).cwiseAbs().maxCoeff() / scale < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("group-law properties hold on random draws") {
  for (const GroupSpec& spec : kSpecs) {
    DYNAMIC_SECTION("case " << to_string(spec.group_case) << " n=" << spec.n) {
      SplitMix64 rng(1234);
      const GroupElement id = GroupElement::identity(spec);
      for (int i = 0; i < 1000; ++i) {
        const GroupElement a = random_element(rng, spec);
        const GroupElement b = random_element(rng, spec);
        const GroupElement c = random_element(rng, spec);
        REQUIRE(parameter_distance(mul(mul(a, b), c), mul(a, mul(b, c))) < 1e-10);
        REQUIRE(parameter_distance(mul(a, inverse(a)), id) < 1e-12);
        REQUIRE(parameter_distance(from_matrix(spec, to_matrix(a)), a) < 1e-12);

        const Matrix4 lhs = to_matrix(mul(a, b));
        const Matrix4 rhs = to_matrix(a) * to_matrix(b);
        const double scale =
            std::max({1.0, lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff()});
        REQUIRE((lhs - rhs).cwiseAbs().maxCoeff() / scale < 1e-12);
      }
    }
  }
}

TEST_CASE("one-parameter subgroup law") {
  for (const GroupSpec& spec : kSpecs) {
    SplitMix64 rng(991);
    for (const Generator& gen : generators_of(spec)) {
      for (int i = 0; i < 100; ++i) {
        const double e1 = rng.uniform(-3.0, 3.0);
        const double e2 = rng.uniform(-3.0, 3.0);
        const GroupElement lhs =
            mul(exp_generator(spec, gen, e1), exp_generator(spec, gen, e2));
        const GroupElement rhs = exp_generator(spec, gen, e1 + e2);
        REQUIRE(parameter_distance(lhs, rhs) < 1e-10);
      }
    }
  }
}
