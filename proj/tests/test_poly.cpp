/*
   Copyright 2026 The dalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <sstream>

#include "dalg/poly.hpp"
#include "support.hpp"

using namespace dalg;
using dalg::testing::P;

TEST_CASE("rational normalization") {
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  CHECK(to_string(make_rational(0, -5)) == "0");
  CHECK(make_rational(0, 7).get_den() == 1);
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK(is_integer(make_rational(6, 3)));
  CHECK_FALSE(is_integer(make_rational(1, 2)));
}

TEST_CASE("degree sentinel") {
  const Degree inf = Degree::neg_infinity();
  CHECK(inf.is_neg_infinity());
  CHECK(inf < Degree(0));
  CHECK((inf + Degree(3)).is_neg_infinity());
  CHECK(Degree(2) + Degree(3) == Degree(5));
  CHECK_THROWS_AS((void)inf.value(), std::logic_error);
  std::ostringstream os;
  os << inf;
  CHECK(os.str() == "-inf");
}

TEST_CASE("parse") {
  SUBCASE("zero") {
    Polynomial z = P("0", 2);
    CHECK(z.is_zero());
    CHECK(to_string(z) == "0");
  }
  SUBCASE("family coefficient") {
    Polynomial p = P("1 - x1*x2^1", 2);
    CHECK(p.size() == 2);
    CHECK(p.coefficient(Monomial(2)) == 1);
    CHECK(p.coefficient(Monomial({1, 1})) == -1);
  }
  SUBCASE("single rational term") {
    Polynomial p = P("3/2*x1^2*x3", 3);
    CHECK(p.size() == 1);
    CHECK(p.coefficient(Monomial({2, 0, 1})) == make_rational(3, 2));
    CHECK(to_string(p) == "3/2*x1^2*x3");
  }
  SUBCASE("parentheses, powers and unary minus") {
    CHECK(P("(x1 + 1)^2", 1) == P("x1^2 + 2*x1 + 1", 1));
    CHECK(P("-(x1 - x2)", 2) == P("x2 - x1", 2));
    CHECK(P("x1^0", 1) == P("1", 1));
    CHECK(P("2/4*x1 - 1/2*x1", 1).is_zero());
  }
  SUBCASE("named variables") {
    const std::vector<std::string> names{"x", "y"};
    CHECK(parse_polynomial("y^2 - x*y", names) == P("x2^2 - x1*x2", 2));
    CHECK(to_string(P("x2^2 - x1*x2", 2), names) == "-x*y + y^2");
  }
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(P("x3", 2), ParseError);
  CHECK_THROWS_AS(P("2x1", 2), ParseError);
  CHECK_THROWS_AS(P("x1 +", 2), ParseError);
  CHECK_THROWS_AS(P("(x1", 2), ParseError);
  CHECK_THROWS_AS(P("1/0", 2), ParseError);
  CHECK_THROWS_AS(P("x1^-1", 2), ParseError);
  CHECK_THROWS_AS(P("", 2), ParseError);
  try {
    P("x1 + $", 2);
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("printing is descending grlex") {
  CHECK(to_string(P("1 + x1 + x2^2 + x1*x2", 2)) == "x1*x2 + x2^2 + x1 + 1");
  CHECK(to_string(P("-x1 - 1", 1)) == "-x1 - 1");
  CHECK(to_string(P("-7/3", 1)) == "-7/3");
}

TEST_CASE("ring operations") {
  const Polynomial a = P("1 - x1*x2", 2), b = P("1 + x1*x2", 2);
  CHECK(mul(a, b) == P("1 - x1^2*x2^2", 2));
  CHECK(mul(P("x1", 2), P("x1", 2)) == P("x1^2", 2));
  CHECK(add(a, negate(a)).is_zero());
  CHECK(scale(a, make_rational(1, 2)) == P("1/2 - 1/2*x1*x2", 2));
  CHECK(scale(a, 0).is_zero());
  CHECK(a.pow(0) == P("1", 2));
  CHECK(a.pow(2) == mul(a, a));
  CHECK_THROWS_AS(add(P("x1", 1), P("x1", 2)), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(P("x1^3", 1), 0) == P("3*x1^2", 1));
  CHECK(partial_derivative(P("7", 2), 0).is_zero());
  CHECK(partial_derivative(P("x1*x2^2", 2), 1) == P("2*x1*x2", 2));
  CHECK_THROWS_AS(partial_derivative(P("x1", 2), 2), std::out_of_range);
  CHECK(antiderivative(P("3*x1^2 + 1", 2), 0) == P("x1^3 + x1", 2));
}

TEST_CASE("substitution") {
  const Polynomial p = P("x1^2*x3 - x2 + 4", 3);
  std::vector<Polynomial> id{P("x1", 3), P("x2", 3), P("x3", 3)};
  CHECK(substitute(p, id) == p);
  std::vector<Polynomial> shift{P("x1", 3), P("x2", 3), P("x3 + 5", 3)};
  CHECK(substitute(P("x3", 3), shift) == P("x3 + 5", 3));
  std::vector<Polynomial> swap{P("x2", 2), P("x1", 2)};
  CHECK(substitute(P("x1*x2", 2), swap) == P("x1*x2", 2));
  std::vector<Polynomial> into_two{P("x1 + x2", 2)};
  CHECK(substitute(P("x1^2 + 1", 1), into_two) == P("x1^2 + 2*x1*x2 + x2^2 + 1", 2));
  CHECK_THROWS_AS(substitute(p, std::vector<Polynomial>{P("x1", 3)}), std::invalid_argument);
}

TEST_CASE("degrees") {
  CHECK(degree_in(P("x1^2*x2", 2), 0) == Degree(2));
  CHECK(total_degree(P("0", 2)).is_neg_infinity());
  CHECK(degree_in(P("0", 2), 1).is_neg_infinity());
  CHECK(total_degree(P("1 - x1*x2^3", 2)) == Degree(4));
  CHECK(homogeneous_part(P("1 - x1*x2^3 + x2^4 + x1", 2), 4) == P("x2^4 - x1*x2^3", 2));
  CHECK(coefficient_of_power(P("x1^2*x2 + 3*x2 - x1^2", 2), 0, 2) == P("x2 - 1", 2));
}

TEST_CASE("division by a single divisor") {
  const Polynomial p = P("x1 + x2", 2);
  DivisionResult r = divide(mul(p, P("x1 - 3", 2)), p);
  CHECK(r.quotient == P("x1 - 3", 2));
  CHECK(r.remainder.is_zero());
  DivisionResult s = divide(P("x1^2 + 1", 2), P("x1", 2));
  CHECK(s.quotient == P("x1", 2));
  CHECK(s.remainder == P("1", 2));
  CHECK_THROWS(divide(p, P("0", 2)));
}
