#include <doctest.h>

#include <random>

#include "fwid/catalog.hpp"
#include "fwid/notation.hpp"
#include "test_util.hpp"
#include "tree_gen.hpp"

using namespace fwid;

namespace {

std::string corpus(const std::string& name) { return std::string(FWID_CORPUS_DIR) + "/" + name + ".fwid"; }

int count_factors(const Expr& e) {
  if (const auto* b = std::get_if<BinaryNode>(&e.node().v); b && b->op == BinaryOp::Mul)
    return count_factors(b->lhs) + count_factors(b->rhs);
  return 1;
}

}  // namespace

TEST_CASE("minimal identity") {
  Identity id = parse_identity(R"(identity "poch0" { params: x in C; lhs: poch(x,0); rhs: 1; })");
  CHECK(id.name == "poch0");
  Binding b;
  b.set("x", Complex(0.3, 0.2));
  CHECK(eval_side(id, Side::Lhs, b) == Complex(1, 0));
  CHECK(eval_side(id, Side::Rhs, b) == Complex(1, 0));
}

TEST_CASE("corpus thm1 equals the hand-coded entry") {
  Identity file = load_identity_file(corpus("thm1"));
  const Identity& reg = Catalog::builtin().get("thm1");
  CHECK(file == reg);
  std::mt19937_64 g(5);
  std::uniform_real_distribution<double> re(-3, 3), im(-1, 1);
  int done = 0;
  for (int t = 0; done < 20 && t < 200; ++t) {
    Binding b;
    b.set("a", Complex(re(g), im(g)));
    b.set("l", Complex(re(g), im(g)));
    b.set_integer("n", static_cast<long>(g() % 13));
    try {
      Complex x = eval_side(file, Side::Lhs, b), y = eval_side(reg, Side::Lhs, b);
      CHECK(rel_diff(x, y) < 1e-12);
      ++done;
    } catch (const Error&) {
    }
  }
  CHECK(done == 20);
}

TEST_CASE("Fox-Wright grouping expands") {
  Expr e = parse_expr("Psi[(1,3/2;1) | (1+n;-1)](-1)");
  const auto* s = std::get_if<SeriesNode>(&e.node().v);
  REQUIRE(s);
  CHECK(s->spec.kind == SeriesKind::FoxWright);
  REQUIRE(s->spec.numerator.size() == 2);
  CHECK(s->spec.numerator[1].offset == ParamExpr(Rational(3, 2)));
  CHECK(s->spec.numerator[1].coeff == ParamExpr(1));
  REQUIRE(s->spec.denominator.size() == 1);
  CHECK(s->spec.denominator[0].coeff == ParamExpr(-1));
  CHECK(print_expr(e) == "Psi[(1, 3/2; 1) | (1+n; -1)](-1)");
}

TEST_CASE("expression examples") {
  Expr e = parse_expr("(-1)^n * 4^(2*a-l) * poch(1+2*a-l, n)");
  CHECK(count_factors(e) == 3);
  Expr s = parse_expr("sum(i, 0, m, poch(-m, i)/poch(1, i))");
  CHECK(std::holds_alternative<SumNode>(s.node().v));
  try {
    parse_expr("poch(x,)");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.span().column == 8);
    CHECK(err.span().start == 7);
  }
}

TEST_CASE("printer conventions") {
  Identity id = parse_identity(R"(identity "t" { params: n in N, b in C, a in C; lhs: gamma(2/4*a + 3/6); rhs: 1; })");
  std::string text = print_identity(id);
  CHECK(text.find("params: a in C, b in C, n in N;") != std::string::npos);
  CHECK(text.find("gamma(1/2+1/2*a)") != std::string::npos);
}

TEST_CASE("lambda alias") {
  Identity id = parse_identity("identity \"t\" { params: \xce\xbb in C; lhs: gamma(\xce\xbb); rhs: gamma(l); }");
  CHECK(id.lhs == id.rhs);
  CHECK(print_identity(id).find("\xce\xbb") == std::string::npos);
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse_identity(R"(identity "t" { params: a in C; lhs: gamma(b); rhs: 1; })"), SemanticError);
  CHECK_THROWS_AS(parse_identity(R"(identity "t" { params: a in C; lhs: gamma(1/a); rhs: 1; })"), SemanticError);
  CHECK_THROWS_AS(parse_identity(R"(identity "t" { params: a in C, a in N; lhs: 1; rhs: 1; })"), SemanticError);
}

TEST_CASE("parse errors stay inside the input") {
  const char* bad[] = {"gamma(", "poch(a, 1", "F[a | b](", "Psi[(a; 1) | ](1", "1 +", "sum(i, 0, n)", "a ^ ^ 2", "@",
                       "identity \"x\" { params: a in Q; lhs: 1; rhs: 1; }"};
  for (const char* text : bad) {
    CAPTURE(text);
    std::string_view sv(text);
    try {
      if (sv.starts_with("identity")) parse_identity(sv);
      else parse_expr(sv);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.span().start <= e.span().end);
      CHECK(e.span().end <= sv.size());
    }
  }
}

TEST_CASE("every corpus file is a print/parse fixpoint and matches the registry") {
  const Catalog& cat = Catalog::builtin();
  for (const auto& name : cat.names()) {
    CAPTURE(name);
    Identity id = load_identity_file(corpus(name));
    std::string once = print_identity(id);
    Identity again = parse_identity(once);
    CHECK(again == id);
    CHECK(print_identity(again) == once);
    CHECK(id == cat.get(name));
  }
}

TEST_CASE("random trees roundtrip") {
  fwid_test::TreeGen gen(77);
  for (int t = 0; t < 200; ++t) {
    Expr e = gen.tree(4);
    std::string text = print_expr(e);
    CAPTURE(text);
    Expr back = parse_expr(text);
    CHECK(back == e);
    CHECK(print_expr(back) == text);
  }
}
