#include <doctest.h>

#include "ghyp/expression.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace ghyp;

namespace {

Complex eval(const std::string& text, std::vector<std::string> vars = {}, std::vector<Complex> values = {}) {
  return Expression::parse(text, std::move(vars)).evaluate(values);
}

}  // namespace

TEST_CASE("arithmetic and precedence") {
  CHECK(eval("1 + 2 * 3") == Complex(7, 0));
  CHECK(eval("(1 + 2) * 3") == Complex(9, 0));
  CHECK(eval("2 ^ 3 ^ 2") == Complex(512, 0));
  CHECK(eval("-2 ^ 2") == Complex(-4, 0));
  CHECK(eval("8 / 4 / 2") == Complex(1, 0));
  CHECK(eval("1.5e2") == Complex(150, 0));
}

TEST_CASE("variables, constants and functions") {
  CHECK(eval("l*l + l", {"l"}, {Complex(2, 0)}) == Complex(6, 0));
  CHECK(std::abs(eval("cos(pi)") - Complex(-1, 0)) < 1e-15);
  CHECK(eval("i * i") == Complex(-1, 0));
  CHECK(eval("abs(3 + 4*i)") == Complex(5, 0));
  CHECK(eval("max(1, 2) + min(1, 2)") == Complex(3, 0));
  CHECK(eval("conj(2 + i)") == Complex(2, -1));
  CHECK(eval("re(2 + 3*i) + im(2 + 3*i)") == Complex(5, 0));
  CHECK(eval("pow(1 + eig^2, 0.5)", {"eig"}, {Complex(0, 0)}) == Complex(1, 0));
  CHECK(eval("sqrt(-4)") == Complex(0, 2));
}

TEST_CASE("real powers stay real") {
  const Complex v = eval("(1 + nu)^(s/2)", {"nu", "s"}, {Complex(3, 0), Complex(-1, 0)});
  CHECK(v.imag() == 0.0);
  CHECK(v.real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eval("(-2)^3") == Complex(-8, 0));
}

TEST_CASE("parse errors name the column") {
  CHECK_THROWS_AS(eval("1 +"), ParseError);
  CHECK_THROWS_AS(eval("foo(1)"), ParseError);
  CHECK_THROWS_AS(eval("max(1)"), ParseError);
  CHECK_THROWS_AS(eval("(1 + 2"), ParseError);
  try {
    eval("1 + q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("column 5") != std::string::npos);
  }
}

TEST_CASE("evaluate checks the value count") {
  const auto e = Expression::parse("a + b", {"a", "b"});
  std::vector<Complex> one{Complex(1, 0)};
  CHECK_THROWS_AS(e.evaluate(one), Error);
}
