#include <doctest.h>

#include "cq/laurent.hpp"

using namespace cq;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("canonical text") {
    const LaurentPoly p = P("1 + 3*x1^-1*x2");
    CHECK(p.to_string() == "3*x1^-1*x2 + 1");
    CHECK(P(p.to_string().c_str()) == p);
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(P("x - x").is_zero());
    CHECK(P("-2*y + 2*y^2").to_string() == "2*y^2 - 2*y");
  }

  TEST_CASE("parser accepts products, powers and bracketed names") {
    CHECK(P("(1 + x)^2") == P("1 + 2*x + x^2"));
    CHECK(P("Y[1,2]*Y[1,0]").variables() == std::vector<std::string>{"Y[1,0]", "Y[1,2]"});
    CHECK(P("x1'^2").coefficient(Monomial::variable("x1'", 2)) == 1);
    CHECK(P("x^-2*x^2") == LaurentPoly(1));
    CHECK_THROWS_AS(P("1 +"), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);
    CHECK_THROWS_AS(P("(1 + x"), ParseError);
    CHECK_THROWS_AS(P("1 + x)"), ParseError);
    CHECK_THROWS_AS(P("(1 + x)^-1"), ParseError);
    CHECK(P("(x*y)^-2") == P("x^-2*y^-2"));
    CHECK(P("-(x - y)*3") == P("3*y - 3*x"));
  }

  TEST_CASE("arithmetic") {
    CHECK(P("x + 1") * P("x - 1") == P("x^2 - 1"));
    CHECK(P("x^-1").pow(-2) == P("x^2"));
    CHECK_THROWS(P("1 + x").pow(-1));
    CHECK(P("x*y^-1").is_unit());
    CHECK_FALSE(P("2*x").is_unit());
    CHECK(P("x^2 + y").is_polynomial());
    CHECK_FALSE(P("x^-1").is_polynomial());
    CHECK(P("1 + x").has_nonnegative_coefficients());
    CHECK_FALSE(P("1 - x").has_nonnegative_coefficients());
  }

  TEST_CASE("big coefficients stay exact") {
    const LaurentPoly p = P("1 + x").pow(80);
    CHECK(p.coefficient(Monomial::variable("x", 40)) == BigInt("107507208733336176461620"));
  }

  TEST_CASE("exact division") {
    CHECK(exact_div(P("x^2 - 1"), P("x - 1")) == P("x + 1"));
    CHECK(exact_div(P("x2 + 1"), P("x1")) == P("x1^-1*x2 + x1^-1"));
    CHECK(exact_div(P("x^-1 + y*x^-2"), P("x^-1 + y*x^-2")) == LaurentPoly(1));
    CHECK(exact_div(P("6*x"), P("3")) == P("2*x"));
    CHECK_THROWS_AS(exact_div(P("x^2 + 1"), P("x - 1")), InexactDivision);
    CHECK_THROWS_AS(exact_div(P("x"), P("2")), InexactDivision);
    try {
      exact_div(P("x^2 + 1"), P("x - 1"));
    } catch (const InexactDivision& e) {
      CHECK_FALSE(e.remainder.empty());
    }
    CHECK_THROWS(exact_div(P("x"), LaurentPoly()));
  }

  TEST_CASE("simultaneous substitution") {
    const LaurentPoly p = P("x*y^-1 + y");
    const LaurentPoly s = substitute(p, {{"x", P("y")}, {"y", P("x")}});
    CHECK(s == P("x^-1*y + x"));
    CHECK(substitute(P("t^2 + 1"), {{"t", LaurentPoly(1)}}) == LaurentPoly(2));
    CHECK_THROWS(substitute(P("x^-1"), {{"x", P("1 + y")}}));
  }

  TEST_CASE("fraction text") {
    CHECK(fraction_text(P("x1^-1*x2 + x1^-1")) == "(1+x2)/x1");
    CHECK(fraction_text(P("x1 + 1")) == "x1 + 1");
    CHECK(fraction_text(P("x1^-1*x2^-1")) == "1/(x1*x2)");
    CHECK(fraction_text(P("x^-1 - 2")) == "(1-2*x)/x");
  }

  TEST_CASE("tropical semifield") {
    const TropicalMonomial a({{"y1", 1}, {"y2", -1}});
    const TropicalMonomial b({{"y1", -2}});
    CHECK(TropicalMonomial::oplus(a, b) == TropicalMonomial({{"y1", -2}, {"y2", -1}}));
    CHECK((a * b).to_monomial() == Monomial::from_entries({{"y1", -1}, {"y2", -1}}));
    // 1 + y evaluated at y = u^-1: min(0, -1)
    const TropicalMonomial v = tropical_eval(P("1 + y"), {{"y", TropicalMonomial({{"u", -1}})}});
    CHECK(v == TropicalMonomial({{"u", -1}}));
    CHECK_THROWS(tropical_eval(P("1 - y"), {{"y", TropicalMonomial({{"u", 1}})}}));
  }

  TEST_CASE("json form") {
    const LaurentPoly p = P("2*x^-1 + y");
    CHECK(LaurentPoly::from_json(p.to_json()) == p);
    CHECK(p.to_json()["text"] == p.to_string());
  }
}
