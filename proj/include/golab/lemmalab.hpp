#pragma once

#include <string>
#include <vector>

#include "golab/chevalley.hpp"
#include "golab/flagstruct.hpp"
#include "golab/rootsys.hpp"

#include "json.hpp"

namespace golab::lemmalab {

using rootsys::RootSystem;

/// Exhaustive check of the four root-pair facts: orthogonality when neither
/// the sum nor the difference is a root, negativity when only the sum is,
/// sum-closure under negative products, nonpositivity on simple pairs.
struct PairFactsReport {
  long pairs_checked = 0;
  long case_counts[4] = {0, 0, 0, 0};
  long violations = 0;
  std::vector<std::string> violation_notes;
};

PairFactsReport verify_hum(const RootSystem& rs);

/// For every isotropy-side positive root, finds a complementary root whose
/// sum stays complementary. Throws VacuousInput when nothing is unpainted.
struct SumExistsReport {
  long checked = 0;
  long violations = 0;
  std::vector<std::pair<int, int>> witnesses;  // (alpha pos idx, beta signed ref)
};

SumExistsReport verify_sum_exists(const RootSystem& rs, const std::vector<int>& painted);

/// Two-submodule facts of the graded flags: a nonvanishing bracket between the
/// layers, and the center acting without kernel on the second layer.
struct TwoLayerReport {
  bool bracket_nonzero = false;
  int witness_beta1 = -1, witness_beta2 = -1;  // positive indices
  bool center_acts_freely = false;
  int q2_dim = 0, ad_rank = 0;
  long violations = 0;
};

enum class GradedFamily { BOverU, COverU1Sp };  // paint the last / first node

TwoLayerReport verify_f1(GradedFamily family, int l);

/// No competing isotropy root can reproduce the bracket layers of a chosen
/// pair: checks all sign combinations modulo global sign.
bool verify_claim_root(const RootSystem& rs, int painted_node, int alpha0_pos, int beta_signed);

struct ClaimRootSweep {
  long pairs_checked = 0;
  long violations = 0;
};

ClaimRootSweep verify_claim_root_all(const RootSystem& rs, int painted_node);

/// Full regression sweep up to a rank bound; zero violations expected.
nlohmann::ordered_json run_lemma_sweeps(int rank_max);

/// All valid systems of rank <= rank_max (plus G2 when rank_max >= 2).
std::vector<RootSystem> systems_up_to(int rank_max);

}  // namespace golab::lemmalab
