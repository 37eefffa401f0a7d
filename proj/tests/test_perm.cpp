#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tgs/parse.hpp"
#include "tgs/perm.hpp"

using tgs::Perm;
using tgs::parse_cycles;
using tgs::print_cycles;

TEST_CASE("composition is left to right") {
  Perm a = parse_cycles("(1,2)", 3);
  Perm b = parse_cycles("(2,3)", 3);
  Perm ab = a * b;
  // 1 -a-> 2 -b-> 3
  CHECK(ab[0] == 2);
  CHECK(ab == parse_cycles("(1,3,2)", 3));
  CHECK(b * a == parse_cycles("(1,2,3)", 3));
}

TEST_CASE("inverse and conjugation") {
  Perm g = parse_cycles("(1,2,3,4,5)", 5);
  CHECK((g * g.inverse()).is_identity());
  Perm x = parse_cycles("(1,2)", 5);
  CHECK(g.conjugated_by(x) == x.inverse() * g * x);
  // conjugation relabels cycles
  CHECK(parse_cycles("(1,2,3)", 5).conjugated_by(parse_cycles("(3,4)", 5)) ==
        parse_cycles("(1,2,4)", 5));
}

TEST_CASE("order and cycle type") {
  Perm g = parse_cycles("(1,2)(3,4,5)", 6);
  CHECK(g.order() == 6);
  CHECK(g.cycle_type() == std::vector<unsigned>{2, 3});
  CHECK(Perm(4).order() == 1);
  CHECK(Perm(4).cycle_type().empty());
}

TEST_CASE("powers and p-parts") {
  Perm g = parse_cycles("(1,2)(3,4,5)", 6);
  CHECK(tgs::perm_pow(g, 6).is_identity());
  CHECK(tgs::perm_pow(g, 3) == parse_cycles("(1,2)", 6));
  CHECK(tgs::p_part(g, 2) == parse_cycles("(1,2)", 6));
  CHECK(tgs::p_part(g, 3) == parse_cycles("(3,4,5)", 6));
  CHECK(tgs::p_part(g, 5).is_identity());
  CHECK(tgs::is_p_element(parse_cycles("(1,2)", 6), 2));
  CHECK(!tgs::is_p_element(g, 2));
  CHECK(tgs::is_p_element(Perm(6), 2));
}

TEST_CASE("cycle parsing") {
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(parse_cycles("(1,2,3)", 3).images() ==
        std::vector<uint16_t>{1, 2, 0});
  CHECK(parse_cycles("(1,2)(3,4)", 5).images() ==
        std::vector<uint16_t>{1, 0, 3, 2, 4});
  CHECK(parse_cycles(" ( 1 , 2 ) ( 4 , 5 ) ", 5) ==
        parse_cycles("(1,2)(4,5)", 5));

  CHECK_THROWS_AS(parse_cycles("", 3), tgs::error);
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), tgs::error);
  CHECK_THROWS_AS(parse_cycles("1,2)", 3), tgs::error);
  CHECK_THROWS_AS(parse_cycles("(1,,2)", 3), tgs::error);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), tgs::error);
  CHECK_THROWS_AS(parse_cycles("(0,1)", 3), tgs::error);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), tgs::error);
}

TEST_CASE("print and parse round-trip") {
  for (const char* text : {"()", "(1,2)", "(1,3,2)", "(1,2)(3,4,5)",
                           "(2,4)(3,7)(6,8)"}) {
    Perm g = parse_cycles(text, 8);
    CHECK(parse_cycles(print_cycles(g), 8) == g);
  }
  CHECK(print_cycles(Perm(5)) == "()");
  CHECK(print_cycles(parse_cycles("(3,4)(1,2)", 4)) == "(1,2)(3,4)");
}

TEST_CASE("invalid image arrays are rejected") {
  CHECK_THROWS_AS(Perm(std::vector<uint16_t>{0, 0, 1}), tgs::error);
  CHECK_THROWS_AS(Perm(std::vector<uint16_t>{0, 3}), tgs::error);
}
