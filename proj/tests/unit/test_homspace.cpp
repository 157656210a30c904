#include "doctest.h"
#include "golab/errors.hpp"
#include "golab/flagstruct.hpp"
#include "golab/homspace.hpp"

using namespace golab;
using namespace golab::homspace;
using golab::chevalley::build_compact;
using golab::chevalley::direct_sum;
using golab::rootsys::RootType;
using golab::rootsys::build_root_system;

namespace {

SemisimpleAlgebra a1a1() {
  auto a1 = build_compact(build_root_system(RootType::A, 1));
  return direct_sum({a1, a1});
}

RVec rv(std::initializer_list<long> l) {
  RVec v;
  for (long x : l) v.push_back(Rat(x));
  return v;
}

struct Rng {
  unsigned long long s;
  explicit Rng(unsigned long long seed) : s(seed) {}
  unsigned long long next() {
    s += 0x9e3779b97f4a7c15ULL;
    unsigned long long z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  RVec vec(int n) {
    RVec v = zero_vec(n);
    for (auto& x : v) x = make_rat(long(next() % 5) - 2, long(next() % 2) + 1);
    return v;
  }
};

}  // namespace

TEST_SUITE("homspace") {

TEST_CASE("zero torus gives the Lie-group case m = g") {
  auto sp = build_space(direct_sum({build_compact(build_root_system(RootType::B, 3))}),
                        TorusSpec{});
  CHECK(sp.dim_s() == 0);
  CHECK(sp.dim_m() == 21);
  CHECK(sp.sprime_range.second == 0);
  CHECK(sp.p_ranges[0] == std::pair{0, 21});
  CHECK(sp.q_ranges[0].second - sp.q_ranges[0].first == 0);
  CHECK(sp.adapted[0].pi_k.size() == 3);  // every simple root vanishes on s = 0
  // identity adaptation: the standard positive system survives untouched
  for (int p = 0; p < 9; ++p) CHECK(sp.adapted[0].positives[size_t(p)] > 0);
  for (size_t i = 0; i < 3; ++i)
    CHECK(sp.adapted[0].simples[i] ==
          sp.alg.factors[0].rs.signed_index(sp.alg.factors[0].rs.simple_roots[i].coeffs));
}

TEST_CASE("full Cartan torus gives the full flag") {
  auto sp = build_space(direct_sum({build_compact(build_root_system(RootType::A, 2))}),
                        TorusSpec{{rv({1, 0}), rv({0, 1})}});
  CHECK(sp.dim_s() == 2);
  CHECK(sp.dim_m() == 6);
  CHECK(sp.sprime_range.second == 0);  // s' = 0
  CHECK(sp.p_ranges[0].second - sp.p_ranges[0].first == 0);
  CHECK(sp.q_ranges[0].second - sp.q_ranges[0].first == 6);
  CHECK(sp.adapted[0].pi_k.empty());
}

TEST_CASE("so(7) over the center of u(3) recovers the painted partition") {
  // center of the {alpha3}-painted diagram: alpha1, alpha2 vanish on it
  auto b3 = build_compact(build_root_system(RootType::B, 3));
  auto pd = golab::flagstruct::make_painted(b3.rs, {2});
  auto split = golab::flagstruct::isotropy_split(pd);
  REQUIRE(split.t_basis.size() == 1);
  auto sp = build_space(direct_sum({b3}), TorusSpec{{split.t_basis[0]}});

  CHECK(sp.dim_s() == 1);
  CHECK(sp.dim_m() == 20);
  CHECK(sp.sprime_range.second == 0);  // s equals the whole center
  CHECK(sp.p_ranges[0].second - sp.p_ranges[0].first == 8);
  CHECK(sp.q_ranges[0].second - sp.q_ranges[0].first == 12);

  // adapted vanishing simples must be a simple system for {alpha1, alpha2}'s span
  const auto& af = sp.adapted[0];
  CHECK(af.pi_k.size() == 2);
  CHECK(af.r_k_plus.size() == 3);
  for (auto ref : af.r_k_plus) {
    CHECK(ref > 0);  // standard positivity survives on the vanishing roots
    auto c = b3.rs.coeffs_of(ref);
    CHECK(c[2] == 0);  // no alpha3 component
  }
  // the vanishing simples are exactly alpha1, alpha2
  std::vector<std::vector<int>> pik;
  for (int i : af.pi_k) pik.push_back(b3.rs.coeffs_of(af.simples[size_t(i)]));
  CHECK(pik == std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}});
}

TEST_CASE("diagonal torus in su(2)+su(2)") {
  auto sp = build_space(a1a1(), TorusSpec{{rv({1, 1})}});
  CHECK(sp.dim_s() == 1);
  CHECK(sp.dim_m() == 5);
  CHECK(sp.sprime_range.second - sp.sprime_range.first == 1);
  for (auto [a, b] : sp.p_ranges) CHECK(a == b);
  CHECK(sp.q_ranges[0].second - sp.q_ranges[0].first == 2);
  CHECK(sp.q_ranges[1].second - sp.q_ranges[1].first == 2);

  SUBCASE("s' is orthogonal to s and lies in the Cartan sum") {
    const auto& b = sp.m_basis[size_t(sp.sprime_range.first)];
    CHECK(sp.alg.killing_form(b, sp.s_basis[0]) == 0);
  }

  SUBCASE("decomposition pieces are pairwise orthogonal with positive norms") {
    for (int u = 0; u < sp.dim_m(); ++u) CHECK(sp.m_diag[size_t(u)] > 0);
  }

  SUBCASE("m coordinates round trip") {
    Rng rng(3);
    for (int t = 0; t < 5; ++t) {
      RVec c = rng.vec(sp.dim_m());
      CHECK(sp.m_coords(sp.to_alg(c)) == c);
    }
  }
}

TEST_CASE("projections are homomorphisms and map s into the centers") {
  auto sp = build_space(a1a1(), TorusSpec{{rv({1, 1})}});
  Rng rng(7);
  for (int t = 0; t < 6; ++t) {
    RVec x = rng.vec(sp.alg.dim), y = rng.vec(sp.alg.dim);
    for (int j = 0; j < 2; ++j) {
      CHECK(project(sp, j, sp.alg.bracket(x, y)) ==
            sp.alg.bracket(project(sp, j, x), project(sp, j, y)));
    }
  }
  // pi_j(s) inside t_j: solve for membership in the center span
  for (int j = 0; j < 2; ++j)
    for (const auto& sb : sp.s_basis) {
      RVec pj = project(sp, j, sb);
      lin::Mat tm(int(sp.t_basis[size_t(j)].size()), sp.alg.dim);
      for (size_t r = 0; r < sp.t_basis[size_t(j)].size(); ++r)
        tm.set_row(int(r), sp.t_basis[size_t(j)][r]);
      CHECK(lin::solve(lin::transpose(tm), pj).has_value());
    }
  CHECK_THROWS_AS(project(sp, 5, zero_vec(sp.alg.dim)), BadFactorIndex);
}

TEST_CASE("f is abelian and the isotropy brackets stay inside the blocks") {
  auto b3 = build_compact(build_root_system(RootType::B, 3));
  auto pd = golab::flagstruct::make_painted(b3.rs, {2});
  auto split = golab::flagstruct::isotropy_split(pd);
  auto sp = build_space(direct_sum({b3}), TorusSpec{{split.t_basis[0]}});

  // [t_j, t_j] = 0 (inside the Cartan)
  for (const auto& x : sp.t_basis[0])
    for (const auto& y : sp.t_basis[0]) CHECK(is_zero_vec(sp.alg.bracket(x, y)));

  // [k_j, q_j] stays in q_j: bracket of isotropy with q basis is orthogonal to
  // s, s', p and the other factors
  auto iso = sp.isotropy_basis(0);
  auto q = sp.q_block_basis(0);
  for (const auto& k : iso)
    for (const auto& x : q) {
      RVec br = sp.alg.bracket(k, x);
      RVec c = sp.m_coords(br);  // must lie in m at all
      for (int u = 0; u < sp.dim_m(); ++u)
        if (c[size_t(u)] != 0) CHECK(sp.in_q(u));
    }
}

TEST_CASE("mixed two-factor space with partial flag in one factor") {
  auto b3 = build_compact(build_root_system(RootType::B, 3));
  auto a1 = build_compact(build_root_system(RootType::A, 1));
  auto alg = direct_sum({b3, a1});
  auto pd = golab::flagstruct::make_painted(b3.rs, {2});
  auto split = golab::flagstruct::isotropy_split(pd);
  RVec s1 = zero_vec(4);
  for (int i = 0; i < 3; ++i) s1[size_t(i)] = split.t_basis[0][size_t(i)];
  RVec s2 = rv({0, 0, 0, 1});
  auto sp = build_space(alg, TorusSpec{{s1, s2}});
  CHECK(sp.dim_s() == 2);
  CHECK(sp.dim_m() == 22);
  CHECK(sp.sprime_range.second == 0);
  CHECK(sp.p_ranges[0].second - sp.p_ranges[0].first == 8);
  CHECK(sp.p_ranges[1].second - sp.p_ranges[1].first == 0);
  CHECK(sp.q_ranges[0].second - sp.q_ranges[0].first == 12);
  CHECK(sp.q_ranges[1].second - sp.q_ranges[1].first == 2);
}

TEST_CASE("torus vectors must be independent") {
  CHECK_THROWS_AS(build_space(a1a1(), TorusSpec{{rv({1, 1}), rv({2, 2})}}),
                  InvariantViolation);
}

TEST_CASE("decomposition report") {
  auto sp = build_space(a1a1(), TorusSpec{{rv({1, 1})}});
  auto j = decompose_report(sp);
  CHECK(j["dim_g"] == 6);
  CHECK(j["dim_s"] == 1);
  CHECK(j["dim_m"] == 5);
  CHECK(j["dim_s_prime"] == 1);
  CHECK(j["dim_q"][0] == 2);
  CHECK(j["dim_q"][1] == 2);
}

TEST_CASE("generic line in the su(3) Cartan leaves a one-dimensional s'") {
  auto a2 = build_compact(build_root_system(RootType::A, 2));
  auto sp = build_space(direct_sum({a2}), TorusSpec{{rv({1, 3})}});
  CHECK(sp.dim_s() == 1);
  CHECK(sp.dim_m() == 7);
  CHECK(sp.sprime_range.second - sp.sprime_range.first == 1);
  CHECK(sp.adapted[0].pi_k.empty());  // generic: no root vanishes
  CHECK(sp.q_ranges[0].second - sp.q_ranges[0].first == 6);
}

}  // TEST_SUITE
