#include "doctest.h"
#include "golab/errors.hpp"
#include "golab/spacefile.hpp"

using namespace golab;
using namespace golab::spacefile;

namespace {
const char* kTwoFactor = R"(torus = [["1", "1"]]

[[factors]]
type = "A"
rank = 1

[[factors]]
type = "A"
rank = 1

[metric]
lambdas = ["1", "2"]
sprime = [["4/3"]]
)";
}

TEST_SUITE("spacefile") {

TEST_CASE("toml round trip to a space and metric") {
  auto cfg = load_space_config(kTwoFactor);
  REQUIRE(cfg.factors.size() == 2);
  CHECK(cfg.torus.basis.size() == 1);
  REQUIRE(cfg.has_metric);
  CHECK(cfg.metric_is_blocks);

  auto space = build_from_config(cfg);
  CHECK(space.dim_m() == 5);
  auto metric = metric_from_config(space, cfg);
  CHECK(metric.mat.at(0, 0) == make_rat(4, 3));
}

TEST_CASE("json config accepted via auto detection") {
  auto cfg = load_space_config(R"({
    "factors": [{"type": "B", "rank": 3}],
    "torus": [],
    "metric": {"matrix": []}
  })");
  CHECK(cfg.factors[0].second == 3);
  CHECK(cfg.has_metric);
  CHECK_FALSE(cfg.metric_is_blocks);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(load_space_config("x = 1\n"), ParseError);
  CHECK_THROWS_AS(load_space_config("[[factors]]\ntype = \"A\"\n"), ParseError);
  CHECK_THROWS_AS(load_space_config(R"([[factors]]
type = "Q"
rank = 1
)"),
                  ParseError);
  // both metric forms at once
  CHECK_THROWS_AS(load_space_config(R"([[factors]]
type = "A"
rank = 1

[metric]
lambdas = ["1"]
matrix = [["1"]]
)"),
                  ParseError);
  // torus vector with wrong length
  auto cfg = load_space_config(R"(torus = [["1", "1"]]

[[factors]]
type = "A"
rank = 1
)");
  CHECK_THROWS_AS(build_from_config(cfg), ParseError);
}

TEST_CASE("metric required for metric_from_config") {
  auto cfg = load_space_config("[[factors]]\ntype = \"A\"\nrank = 1\n");
  auto space = build_from_config(cfg);
  CHECK_THROWS_AS(metric_from_config(space, cfg), ParseError);
}

TEST_CASE("default identity s' block") {
  auto cfg = load_space_config(R"(torus = [["1", "1"]]

[[factors]]
type = "A"
rank = 1

[[factors]]
type = "A"
rank = 1

[metric]
lambdas = ["1", "1"]
)");
  auto space = build_from_config(cfg);
  auto metric = metric_from_config(space, cfg);
  CHECK(metric.mat == lin::Mat::identity(5));
}

}  // TEST_SUITE
