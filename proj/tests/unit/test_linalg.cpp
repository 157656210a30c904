#include "doctest.h"
#include "golab/linalg.hpp"

using namespace golab;
using namespace golab::lin;

namespace {
Mat from(std::initializer_list<std::initializer_list<long>> rows) {
  int r = int(rows.size()), c = int(rows.begin()->size());
  Mat m(r, c);
  int i = 0;
  for (auto& row : rows) {
    int j = 0;
    for (long x : row) m.at(i, j++) = Rat(x);
    ++i;
  }
  return m;
}
}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank and rref") {
  Mat m = from({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  CHECK(rank(Mat::identity(4)) == 4);
}

TEST_CASE("kernel basis") {
  Mat m = from({{1, 2, 3}, {0, 0, 1}});
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  for (const auto& v : k) CHECK(is_zero_vec(mul(m, v)));
  CHECK(kernel_basis(Mat::identity(3)).empty());
}

TEST_CASE("solve") {
  Mat m = from({{2, 1}, {1, 3}});
  RVec b = {Rat(5), Rat(10)};
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(mul(m, *x) == b);

  Mat sing = from({{1, 1}, {2, 2}});
  CHECK(solve(sing, RVec{Rat(1), Rat(3)}) == std::nullopt);
  auto x2 = solve(sing, RVec{Rat(1), Rat(2)});
  REQUIRE(x2.has_value());
  CHECK(mul(sing, *x2) == RVec{Rat(1), Rat(2)});
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(from({{2, -1}, {-1, 2}})));
  CHECK_FALSE(is_positive_definite(from({{1, 2}, {2, 1}})));
  CHECK_FALSE(is_positive_definite(from({{0, 0}, {0, 1}})));
  CHECK_FALSE(is_positive_definite(from({{1, 2}, {3, 4}})));  // not symmetric
}

TEST_CASE("echelon solver feasibility and solutions") {
  EchelonSolver s(3);
  CHECK(s.add_row({Rat(1), Rat(1), Rat(0)}, Rat(3), 1) == EchelonSolver::RowResult::Added);
  CHECK(s.add_row({Rat(0), Rat(1), Rat(1)}, Rat(2), 2) == EchelonSolver::RowResult::Added);
  CHECK(s.add_row({Rat(1), Rat(2), Rat(1)}, Rat(5), 3) == EchelonSolver::RowResult::Redundant);
  CHECK_FALSE(s.infeasible());
  auto x = s.particular_solution();
  CHECK(x[0] + x[1] == 3);
  CHECK(x[1] + x[2] == 2);

  CHECK(s.add_row({Rat(1), Rat(2), Rat(1)}, Rat(6), 77) == EchelonSolver::RowResult::Infeasible);
  CHECK(s.infeasible());
  CHECK(s.infeasible_tag() == 77);
}

TEST_CASE("orthogonalize against a diagonal form") {
  auto form = [](const RVec& a, const RVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(long(i) + 1) * a[i] * b[i];
    return s;
  };
  std::vector<RVec> v = {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
  auto o = orthogonalize(v, form);
  CHECK(form(o[0], o[1]) == 0);
  CHECK(form(o[0], o[0]) > 0);
  CHECK(form(o[1], o[1]) > 0);

  std::vector<RVec> dep = {{Rat(1), Rat(0)}, {Rat(2), Rat(0)}};
  CHECK_THROWS_AS(orthogonalize(dep, form), NotPositiveDefinite);
}

TEST_CASE("matrix products") {
  Mat a = from({{1, 2}, {3, 4}});
  Mat b = from({{0, 1}, {1, 0}});
  CHECK(mul(a, b) == from({{2, 1}, {4, 3}}));
  CHECK(transpose(a) == from({{1, 3}, {2, 4}}));
  CHECK(mul(a, RVec{Rat(1), Rat(1)}) == RVec{Rat(3), Rat(7)});
}

}  // TEST_SUITE
