#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <vector>

#include "filtsym/expression.hpp"
#include "filtsym/rng.hpp"

using namespace filtsym;

TEST_CASE("expression parsing and evaluation") {
  SECTION("single variable") {
    CHECK(FieldExpression::parse("x").eval(0.0, 7.5) == 7.5);
    CHECK(FieldExpression::parse("t").eval(-3.0, 7.5) == -3.0);
  }
  SECTION("t + x at (2,3)") {
    CHECK(FieldExpression::parse("t + x").eval(2.0, 3.0) == 5.0);
  }
  SECTION("precedence and powers") {
    CHECK(FieldExpression::parse("2*t + x^2").eval(1.0, 3.0) == 11.0);
    CHECK(FieldExpression::parse("2^3^2").eval(0.0, 0.0) == 512.0);  // right assoc
    CHECK(FieldExpression::parse("-x^2").eval(0.0, 3.0) == -9.0);    // ^ over unary -
    CHECK(FieldExpression::parse("2^-2").eval(0.0, 0.0) == 0.25);
    CHECK(FieldExpression::parse("6 / 2 / 3").eval(0.0, 0.0) == 1.0);  // left assoc
    CHECK(FieldExpression::parse("1 - 2 - 3").eval(0.0, 0.0) == -4.0);
  }
  SECTION("functions") {
    CHECK(FieldExpression::parse("ln(exp(x))").eval(0.0, 1.25) ==
          Catch::Approx(1.25).epsilon(1e-15));
    CHECK(FieldExpression::parse("sin(x)^2 + cos(x)^2").eval(0.0, 0.7) ==
          Catch::Approx(1.0).epsilon(1e-15));
    CHECK(FieldExpression::parse("arctan(tan(x))").eval(0.0, 0.5) ==
          Catch::Approx(0.5).epsilon(1e-14));
    CHECK(FieldExpression::parse("1.5e2 + 2.5").eval(0.0, 0.0) == 152.5);
  }
}

TEST_CASE("parse errors carry positions") {
  SECTION("unbalanced parenthesis reports end of input") {
    try {
      FieldExpression::parse("ln(x");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
  }
  SECTION("unknown identifier") {
    try {
      FieldExpression::parse("t + foo");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
  }
  SECTION("unknown character") {
    try {
      FieldExpression::parse("t + x; 3");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
  }
  SECTION("dangling operator") {
    CHECK_THROWS_AS(FieldExpression::parse("t +"), ParseError);
    CHECK_THROWS_AS(FieldExpression::parse(""), ParseError);
    CHECK_THROWS_AS(FieldExpression::parse("   "), ParseError);
    CHECK_THROWS_AS(FieldExpression::parse("t x"), ParseError);
    CHECK_THROWS_AS(FieldExpression::parse("sin x"), ParseError);
  }
}

namespace {

ExprPtr leaf_number(double v) {
  auto node = std::make_shared<ExprNode>();
  node->op = ExprNode::Op::Number;
  node->value = v;
  return node;
}

ExprPtr leaf_var(bool t) {
  auto node = std::make_shared<ExprNode>();
  node->op = t ? ExprNode::Op::VarT : ExprNode::Op::VarX;
  return node;
}

ExprPtr random_tree(SplitMix64& rng, int depth) {
  using Op = ExprNode::Op;
  if (depth <= 0 || rng.uniform() < 0.3) {
    if (rng.uniform() < 0.5) return leaf_var(rng.uniform() < 0.5);
    return leaf_number(std::floor(rng.uniform(0.0, 100.0)) / 4.0);
  }
  static const Op kBinary[] = {Op::Add, Op::Sub, Op::Mul, Op::Div, Op::Pow};
  static const Op kUnary[] = {Op::Neg, Op::Ln, Op::Exp, Op::Sin, Op::Cos,
                              Op::Tan, Op::Arctan};
  auto node = std::make_shared<ExprNode>();
  if (rng.uniform() < 0.7) {
    node->op = kBinary[rng.next_u64() % 5];
    node->lhs = random_tree(rng, depth - 1);
    node->rhs = random_tree(rng, depth - 1);
  } else {
    node->op = kUnary[rng.next_u64() % 7];
    node->lhs = random_tree(rng, depth - 1);
  }
  return node;
}

}  // namespace

TEST_CASE("print/parse round-trip") {
  SECTION("hand-picked shapes") {
    for (const char* src : {"2 * t + x ^ 2", "-(t + x)", "x ^ -2", "-x ^ 2",
                            "ln(x) / (1 - t)", "(t + x) * (t - x)", "2 ^ 3 ^ 2",
                            "1 - (2 - 3)", "arctan(x / (1 + t ^ 2))"}) {
      const FieldExpression e = FieldExpression::parse(src);
      const FieldExpression round = FieldExpression::parse(e.str());
      INFO(src << " printed as " << e.str());
      CHECK(round.equals(e));
    }
  }
  SECTION("random trees") {
    SplitMix64 rng(2025);
    for (int i = 0; i < 300; ++i) {
      const FieldExpression e(random_tree(rng, 5));
      const FieldExpression round = FieldExpression::parse(e.str());
      INFO("printed as " << e.str());
      REQUIRE(round.equals(e));
    }
  }
}

TEST_CASE("univariate diffusivity expressions") {
  const FieldExpression k = FieldExpression::parse_univariate("p^3 + p", "p");
  CHECK(k.eval(0.0, 2.0) == 10.0);
  // t is not a variable in this mode.
  CHECK_THROWS_AS(FieldExpression::parse_univariate("t + p", "p"), ParseError);
}

TEST_CASE("expression fields evaluate everywhere with stencil partials") {
  const ScalarField f = FieldExpression::parse("t * x").field();
  CHECK(f(2.0, 3.0) == 6.0);
  const FieldPartials p = f.partials(1.0, 1.0);
  CHECK(p.f_t == Catch::Approx(1.0).margin(1e-6));
  CHECK(p.f_x == Catch::Approx(1.0).margin(1e-6));
  CHECK(p.f_xx == Catch::Approx(0.0).margin(1e-6));
}
