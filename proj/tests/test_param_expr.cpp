#include <doctest.h>

#include "fwid/param_expr.hpp"
#include "test_util.hpp"

using namespace fwid;

TEST_CASE("rational normalizes and prints") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational overflow is reported") {
  Rational big(INT64_MAX / 2 + 1);
  CHECK_THROWS_AS(big * Rational(4), EvaluationError);
}

TEST_CASE("param expressions fold like polynomials") {
  auto a = ParamExpr::symbol("a");
  auto l = ParamExpr::symbol("l");
  auto n = ParamExpr::symbol("n");
  ParamExpr e = ParamExpr(1) + a * 2 - l + l * n;
  CHECK(e.to_string() == "1+2*a-l+l*n");
  CHECK(e.degree() == 2);
  CHECK(e.coefficient("a") == Rational(2));
  CHECK(e.constant() == Rational(1));
  CHECK((e - e).is_constant());
  CHECK((e - e).to_string() == "0");
  CHECK((a / Rational(2) + a / Rational(2)) == a);
  CHECK(e.substitute("l", ParamExpr(0)).to_string() == "1+2*a");
  CHECK(e.symbols() == std::set<std::string>{"a", "l", "n"});
  CHECK((ParamExpr(Rational(3, 2)) - a).to_string() == "3/2-a");
}

TEST_CASE("evaluation and exact values") {
  auto a = ParamExpr::symbol("a");
  auto n = ParamExpr::symbol("n");
  Binding b;
  b.set("a", Complex(0.25, 1));
  b.set_integer("n", 3);
  ParamExpr e = a * 2 + n / Rational(2);
  CHECK(rel_diff(e.evaluate<Complex>(b), Complex(2.0, 2)) < 1e-15);
  CHECK(lower(e.evaluate<QuadComplex>(b)) == Complex(2.0, 2));
  CHECK_FALSE(e.exact(b).has_value());
  CHECK((n * 2 - ParamExpr(7)).exact(b) == Rational(-1));
  CHECK((n / Rational(2)).exact(b) == Rational(3, 2));
  CHECK(exact_integer(b, "n") == 3);
  CHECK_THROWS_AS(ParamExpr::symbol("zz").evaluate<Complex>(b), EvaluationError);
}

TEST_CASE("binding") {
  Binding b;
  b.set_integer("m", 2);
  b.set("a", Complex(1, 0));
  CHECK(b.is_integer("m"));
  CHECK_FALSE(b.is_integer("a"));
  CHECK(b.integer("m") == 2);
  CHECK(b.has("a"));
  CHECK_FALSE(b.has("c"));
  CHECK_THROWS(b.at("c"));
}
