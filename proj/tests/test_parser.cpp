/*
   Copyright 2026 diffop developers

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

#include "diffop/parser.hpp"

#include <random>
#include <string>

#include "doctest.h"
#include "test_util.hpp"

using namespace diffop;
using namespace diffop::testutil;

TEST_CASE("parsing basics") {
  CHECK(parse_operator("0").is_zero());
  CHECK(parse_operator("D") == OrePoly::d());
  CHECK(parse_operator("  x  ") == OrePoly::variable());
  CHECK(parse_operator("-D") == -OrePoly::d());
  CHECK(parse_operator("3/2") == OrePoly(Rational(3, 2)));
  CHECK(parse_operator("D - D").is_zero());
  CHECK(parse_operator("2*(D + x) - D") == parse_operator("D + 2*x"));
  CHECK(parse_operator("x^3") == OrePoly(RatFunc(Poly::monomial(1, 3))));
  CHECK(parse_operator("(x+1)*(x-1)") == parse_operator("x^2 - 1"));
}

TEST_CASE("division in expressions is right multiplication by the inverse") {
  CHECK(parse_operator("D/x") ==
        OrePoly::d() * OrePoly(RatFunc::variable().inverse()));
  CHECK(parse_operator("x*D/x") == parse_operator("D - 1/x"));
  CHECK(parse_ratfunc("1/2/2") == RatFunc(Rational(1, 4)));
  CHECK(parse_ratfunc("(x^2-1)/(x+1)") == parse_ratfunc("x - 1"));
}

TEST_CASE("parse errors carry an offset") {
  CHECK_THROWS_AS(parse_operator("D +"), ParseError);
  CHECK_THROWS_AS(parse_operator("y"), ParseError);
  CHECK_THROWS_AS(parse_operator("2^^3"), ParseError);
  CHECK_THROWS_AS(parse_operator("(D"), ParseError);
  CHECK_THROWS_AS(parse_operator("x/(D+1)"), ParseError);
  CHECK_THROWS_AS(parse_operator("1/0"), ParseError);
  CHECK_THROWS_AS(parse_operator("x^-1"), ParseError);
  CHECK_THROWS_AS(parse_operator(""), ParseError);
  CHECK_THROWS_AS(parse_ratfunc("D + x"), ParseError);

  try {
    parse_operator("D @ x");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
  }
}

TEST_CASE("canonical printing") {
  CHECK(to_string(OrePoly::zero()) == "0");
  CHECK(to_string(OrePoly::one()) == "1");
  CHECK(to_string(parse_operator("D")) == "D");
  CHECK(to_string(parse_operator("-D")) == "-D");
  CHECK(to_string(parse_operator("D*x")) == "x*D + 1");
  CHECK(to_string(parse_operator("D/x")) == "1/x*D - 1/x^2");
  CHECK(to_string(parse_operator("(D+x)^2")) == "D^2 + 2*x*D + x^2 + 1");
  CHECK(to_string(parse_operator("D^2 + (x + 1/x)*D + 1 - 1/x^2")) ==
        "D^2 + (x^2+1)/x*D + (x^2-1)/x^2");
  CHECK(to_string(parse_operator("(1-x)*D")) == "-(x-1)*D");
  CHECK(to_string(parse_ratfunc("3/2 - x")) == "-x + 3/2");
  CHECK(to_string(parse_ratfunc("1/(2*x)")) == "1/2/x");
  CHECK(to_string(parse_ratfunc("(x+1)/(x-1)")) == "(x+1)/(x-1)");
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(20260309);
  for (int trial = 0; trial < 500; ++trial) {
    OrePoly a = rand_operator_up_to(rng, 4, 3, 9);
    std::string s = to_string(a);
    CAPTURE(s);
    CHECK(parse_operator(s) == a);
  }
  for (int trial = 0; trial < 200; ++trial) {
    RatFunc f = rand_ratfunc(rng, 4, 9);
    std::string s = to_string(f);
    CAPTURE(s);
    CHECK(parse_ratfunc(s) == f);
  }
}

TEST_CASE("side names") {
  CHECK(parse_side("left") == Side::left);
  CHECK(parse_side("right") == Side::right);
  CHECK_THROWS_AS(parse_side("sideways"), ParseError);
  CHECK(std::string(side_name(Side::left)) == "left");
  CHECK(std::string(side_name(Side::right)) == "right");
}
