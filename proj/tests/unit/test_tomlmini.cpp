#include "doctest.h"
#include "golab/errors.hpp"
#include "golab/tomlmini.hpp"

using namespace golab;

TEST_SUITE("tomlmini") {

TEST_CASE("tables, table arrays and values") {
  auto j = tomlmini::parse(R"(# space file
torus = [
  ["1", "1", 2, -3],
]

[[factors]]
type = "A"   # comment after value
rank = 1

[[factors]]
type = "B"
rank = 3

[metric]
lambdas = ["1", "2"]
sprime = [["1"]]
flag = true
)");
  CHECK(j["factors"].size() == 2);
  CHECK(j["factors"][1]["type"] == "B");
  CHECK(j["factors"][1]["rank"] == 3);
  CHECK(j["torus"][0][2] == 2);
  CHECK(j["torus"][0][3] == -3);
  CHECK(j["metric"]["lambdas"][1] == "2");
  CHECK(j["metric"]["sprime"][0][0] == "1");
  CHECK(j["metric"]["flag"] == true);
}

TEST_CASE("errors carry line numbers") {
  CHECK_THROWS_WITH_AS(tomlmini::parse("key 1\n"), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_AS(tomlmini::parse("x = [1, 2\n"), ParseError);
  CHECK_THROWS_AS(tomlmini::parse("x = 1.5\n"), ParseError);
  CHECK_THROWS_AS(tomlmini::parse("x = \"unterminated\n"), ParseError);
  CHECK_THROWS_AS(tomlmini::parse("[tab\n"), ParseError);
  CHECK_THROWS_AS(tomlmini::parse("x = 1 y = 2\n"), ParseError);
}

TEST_CASE("empty arrays and nesting") {
  auto j = tomlmini::parse("a = []\nb = [[1, 2], [3, 4]]\n");
  CHECK(j["a"].empty());
  CHECK(j["b"][1][0] == 3);
}

}  // TEST_SUITE
