#include "golab/lemmalab.hpp"

#include <algorithm>

#include "golab/errors.hpp"
#include "golab/homspace.hpp"

namespace golab::lemmalab {

PairFactsReport verify_hum(const RootSystem& rs) {
  PairFactsReport rep;
  std::vector<std::vector<int>> all;
  for (const auto& r : rs.positive_roots) {
    all.push_back(r.coeffs);
    all.push_back(rootsys::coeff_neg(r.coeffs));
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a == b || a == rootsys::coeff_neg(b)) continue;
      ++rep.pairs_checked;
      Rat prod = rs.inner_coeffs(a, b);
      bool sum = rs.is_root(rootsys::coeff_add(a, b));
      bool dif = rs.is_root(rootsys::coeff_sub(a, b));
      if (!sum && !dif) {
        ++rep.case_counts[0];
        if (prod != 0) {
          ++rep.violations;
          rep.violation_notes.push_back("isolated pair with nonzero product");
        }
      }
      if (sum && !dif) {
        ++rep.case_counts[1];
        if (prod >= 0) {
          ++rep.violations;
          rep.violation_notes.push_back("sum-only pair with nonnegative product");
        }
      }
      if (prod < 0) {
        ++rep.case_counts[2];
        if (!sum) {
          ++rep.violations;
          rep.violation_notes.push_back("negative product without sum root");
        }
      }
    }
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      if (i == j) continue;
      ++rep.case_counts[3];
      if (rs.gram.at(i, j) > 0) {
        ++rep.violations;
        rep.violation_notes.push_back("simple pair with positive product");
      }
    }
  return rep;
}

SumExistsReport verify_sum_exists(const RootSystem& rs, const std::vector<int>& painted) {
  auto pd = flagstruct::make_painted(rs, painted);
  if (int(pd.painted.size()) == rs.rank)
    throw VacuousInput("no unpainted node: the claim assumes a nonempty isotropy system");
  auto fp = flagstruct::partition(pd);

  // signed complementary roots
  std::vector<rootsys::SignedIndex> r_m;
  for (int p : fp.r_m_plus) {
    r_m.push_back(p + 1);
    r_m.push_back(-(p + 1));
  }
  auto in_r_m = [&](const std::vector<int>& c) {
    rootsys::SignedIndex s = rs.signed_index(c);
    if (s == 0) return false;
    int p = std::abs(s) - 1;
    return std::find(fp.r_m_plus.begin(), fp.r_m_plus.end(), p) != fp.r_m_plus.end();
  };

  SumExistsReport rep;
  for (int alpha : fp.r_k_plus) {
    ++rep.checked;
    bool found = false;
    for (auto beta : r_m) {
      auto sum = rootsys::coeff_add(rs.positive(alpha).coeffs, rs.coeffs_of(beta));
      if (in_r_m(sum)) {
        rep.witnesses.emplace_back(alpha, beta);
        found = true;
        break;
      }
    }
    if (!found) ++rep.violations;
  }
  return rep;
}

TwoLayerReport verify_f1(GradedFamily family, int l) {
  if (l < 2) throw InvalidRank("graded families start at rank 2");
  RootSystem rs = family == GradedFamily::BOverU
                      ? rootsys::build_root_system(rootsys::RootType::B, l)
                      : rootsys::build_root_system(rootsys::RootType::C, l);
  int node = family == GradedFamily::BOverU ? l - 1 : 0;
  auto pd = flagstruct::make_painted(rs, {node});
  auto fp = flagstruct::partition(pd);
  if (!fp.graded) throw GradingUndefined("expected a two-step grading");

  TwoLayerReport rep;
  // part one: a pair with beta2 - beta1 a root forces a nonzero bracket
  for (int p1 : fp.r_m_1) {
    for (int p2 : fp.r_m_2) {
      auto dif = rootsys::coeff_sub(rs.positive(p2).coeffs, rs.positive(p1).coeffs);
      if (rs.is_root(dif)) {
        rep.bracket_nonzero = true;
        rep.witness_beta1 = p1;
        rep.witness_beta2 = p2;
        break;
      }
    }
    if (rep.bracket_nonzero) break;
  }
  if (!rep.bracket_nonzero) ++rep.violations;

  // part two over the actual algebra: every root of the second layer sees the
  // center, and ad_xi has zero kernel on the layer
  auto alg = chevalley::build_compact(rs);
  auto split = flagstruct::isotropy_split(pd);
  if (split.t_basis.size() != 1) throw InternalInvariantViolation("expected a line center");
  RVec xi = zero_vec(alg.dim);
  for (int i = 0; i < rs.rank; ++i) xi[size_t(i)] = split.t_basis[0][size_t(i)];

  for (int p : fp.r_m_2) {
    RVec xic = zero_vec(rs.rank);
    for (int i = 0; i < rs.rank; ++i) xic[size_t(i)] = xi[size_t(i)];
    if (alg.root_on_cartan(p + 1, xic) == 0) ++rep.violations;
  }

  auto sum = chevalley::direct_sum({alg});
  std::vector<RVec> q2;
  for (int p : fp.r_m_2) {
    for (int idx : {alg.a_index(p), alg.b_index(p)}) {
      RVec v = zero_vec(alg.dim);
      v[size_t(idx)] = 1;
      q2.push_back(std::move(v));
    }
  }
  rep.q2_dim = int(q2.size());
  lin::Mat ad(alg.dim, rep.q2_dim);
  for (int c = 0; c < rep.q2_dim; ++c) {
    RVec br = sum.bracket(xi, q2[size_t(c)]);
    for (int r = 0; r < alg.dim; ++r) ad.at(r, c) = br[size_t(r)];
  }
  rep.ad_rank = lin::rank(ad);
  rep.center_acts_freely = rep.ad_rank == rep.q2_dim;
  if (!rep.center_acts_freely) ++rep.violations;
  return rep;
}

bool verify_claim_root(const RootSystem& rs, int painted_node, int alpha0_pos, int beta_signed) {
  auto pd = flagstruct::make_painted(rs, {painted_node});
  auto fp = flagstruct::partition(pd);
  if (!fp.graded) throw GradingUndefined("claim needs the two-step grading");

  auto abs_coeffs = [&](rootsys::SignedIndex s) {
    auto c = rs.coeffs_of(s);
    return s > 0 ? c : rootsys::coeff_neg(c);
  };
  auto alpha0 = rs.positive(alpha0_pos).coeffs;
  auto beta_abs = abs_coeffs(beta_signed);

  // gamma1 = alpha0 + |beta|, gamma2 = |alpha0 - |beta||, as sign classes
  auto gamma1 = rootsys::coeff_add(alpha0, beta_abs);
  auto gamma2 = rootsys::coeff_sub(alpha0, beta_abs);
  auto same_class = [](const std::vector<int>& a, const std::vector<int>& b) {
    return a == b || a == rootsys::coeff_neg(b);
  };

  for (int other : fp.r_k_plus) {
    if (other == alpha0_pos) continue;
    const auto& oc = rs.positive(other).coeffs;
    for (int sign : {1, -1}) {
      std::vector<int> v = oc;
      for (size_t i = 0; i < v.size(); ++i) v[i] += sign * beta_abs[i];
      if (same_class(v, gamma1) || same_class(v, gamma2)) return false;
    }
  }
  return true;
}

ClaimRootSweep verify_claim_root_all(const RootSystem& rs, int painted_node) {
  auto pd = flagstruct::make_painted(rs, {painted_node});
  auto fp = flagstruct::partition(pd);
  if (!fp.graded) throw GradingUndefined("claim needs the two-step grading");

  ClaimRootSweep sweep;
  for (int alpha0 : fp.r_k_plus) {
    for (int pm : fp.r_m_plus) {
      for (auto beta : {pm + 1, -(pm + 1)}) {
        auto sum = rootsys::coeff_add(rs.positive(alpha0).coeffs, rs.coeffs_of(beta));
        rootsys::SignedIndex s = rs.signed_index(sum);
        if (s == 0) continue;
        bool in_m =
            std::find(fp.r_m_plus.begin(), fp.r_m_plus.end(), std::abs(s) - 1) != fp.r_m_plus.end();
        if (!in_m) continue;
        ++sweep.pairs_checked;
        if (!verify_claim_root(rs, painted_node, alpha0, beta)) ++sweep.violations;
      }
    }
  }
  return sweep;
}

std::vector<RootSystem> systems_up_to(int rank_max) {
  std::vector<RootSystem> out;
  using rootsys::RootType;
  for (int l = 1; l <= rank_max; ++l) out.push_back(rootsys::build_root_system(RootType::A, l));
  for (int l = 2; l <= rank_max; ++l) out.push_back(rootsys::build_root_system(RootType::B, l));
  for (int l = 2; l <= rank_max; ++l) out.push_back(rootsys::build_root_system(RootType::C, l));
  for (int l = 4; l <= rank_max; ++l) out.push_back(rootsys::build_root_system(RootType::D, l));
  if (rank_max >= 2) out.push_back(rootsys::build_root_system(RootType::G, 2));
  return out;
}

nlohmann::ordered_json run_lemma_sweeps(int rank_max) {
  nlohmann::ordered_json out;
  out["rank_max"] = rank_max;
  long total_violations = 0;

  auto systems = systems_up_to(rank_max);
  auto sys_name = [](const RootSystem& rs) {
    return rootsys::root_type_label(rs.type) + std::to_string(rs.rank);
  };

  nlohmann::ordered_json hum = nlohmann::ordered_json::array();
  for (const auto& rs : systems) {
    auto rep = verify_hum(rs);
    nlohmann::ordered_json j;
    j["system"] = sys_name(rs);
    j["pairs_checked"] = rep.pairs_checked;
    j["violations"] = rep.violations;
    total_violations += rep.violations;
    hum.push_back(j);
  }
  out["root_pair_facts"] = hum;

  nlohmann::ordered_json sums = nlohmann::ordered_json::array();
  for (const auto& rs : systems) {
    long checked = 0, violations = 0, diagrams = 0;
    // all painted subsets with at least one painted and one unpainted node
    for (int mask = 1; mask + 1 < (1 << rs.rank); ++mask) {
      std::vector<int> painted;
      for (int i = 0; i < rs.rank; ++i)
        if (mask & (1 << i)) painted.push_back(i);
      auto rep = verify_sum_exists(rs, painted);
      checked += rep.checked;
      violations += rep.violations;
      ++diagrams;
    }
    nlohmann::ordered_json j;
    j["system"] = sys_name(rs);
    j["diagrams"] = diagrams;
    j["roots_checked"] = checked;
    j["violations"] = violations;
    total_violations += violations;
    sums.push_back(j);
  }
  out["complementary_sum_exists"] = sums;

  nlohmann::ordered_json f1 = nlohmann::ordered_json::array();
  for (int l = 2; l <= rank_max; ++l) {
    for (auto fam : {GradedFamily::BOverU, GradedFamily::COverU1Sp}) {
      auto rep = verify_f1(fam, l);
      nlohmann::ordered_json j;
      j["family"] = fam == GradedFamily::BOverU ? "B/U" : "C/U1xSp";
      j["rank"] = l;
      j["bracket_nonzero"] = rep.bracket_nonzero;
      j["center_acts_freely"] = rep.center_acts_freely;
      j["violations"] = rep.violations;
      total_violations += rep.violations;
      f1.push_back(j);
    }
  }
  out["two_layer_facts"] = f1;

  nlohmann::ordered_json claim = nlohmann::ordered_json::array();
  for (int l = 2; l <= rank_max; ++l) {
    for (auto fam : {GradedFamily::BOverU, GradedFamily::COverU1Sp}) {
      auto rs = fam == GradedFamily::BOverU
                    ? rootsys::build_root_system(rootsys::RootType::B, l)
                    : rootsys::build_root_system(rootsys::RootType::C, l);
      int node = fam == GradedFamily::BOverU ? l - 1 : 0;
      auto sweep = verify_claim_root_all(rs, node);
      nlohmann::ordered_json j;
      j["family"] = fam == GradedFamily::BOverU ? "B/U" : "C/U1xSp";
      j["rank"] = l;
      j["pairs_checked"] = sweep.pairs_checked;
      j["violations"] = sweep.violations;
      total_violations += sweep.violations;
      claim.push_back(j);
    }
  }
  out["no_competing_root"] = claim;

  out["total_violations"] = total_violations;
  return out;
}

}  // namespace golab::lemmalab
