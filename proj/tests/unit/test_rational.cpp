#include "doctest.h"
#include "golab/rational.hpp"

using namespace golab;

TEST_SUITE("rational") {

TEST_CASE("canonical string form") {
  CHECK(rat_str(make_rat(4, 2)) == "2");
  CHECK(rat_str(make_rat(-3, 6)) == "-1/2");
  CHECK(rat_str(make_rat(3, -6)) == "-1/2");
  CHECK(rat_str(Rat(0)) == "0");
}

TEST_CASE("parsing round trip") {
  for (const char* s : {"0", "7", "-7", "3/4", "-11/13"}) {
    CHECK(rat_str(rat_from_string(s)) == s);
  }
  CHECK(rat_str(rat_from_string("4/6")) == "2/3");
  CHECK_THROWS_AS(rat_from_string("x"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string(""), ParseError);
  CHECK_THROWS_AS(rat_from_string("1.5"), ParseError);
}

TEST_CASE("vector helpers") {
  RVec a = {Rat(1), Rat(2)};
  RVec b = {Rat(3), Rat(-2)};
  CHECK(add_vec(a, b) == RVec{Rat(4), Rat(0)});
  CHECK(sub_vec(a, b) == RVec{Rat(-2), Rat(4)});
  CHECK(is_zero_vec(zero_vec(3)));
  RVec y = a;
  axpy(y, Rat(2), b);
  CHECK(y == RVec{Rat(7), Rat(-2)});
  CHECK_THROWS_AS(add_vec(a, zero_vec(3)), DimensionMismatch);
}

}  // TEST_SUITE
