#pragma once

#include <string>
#include <utility>
#include <vector>

#include "golab/chevalley.hpp"
#include "golab/rootsys.hpp"

#include "json.hpp"

namespace golab::homspace {

using chevalley::SemisimpleAlgebra;
using rootsys::SignedIndex;

/// Abelian subalgebra of the fixed Cartan, one basis vector per row, in
/// concatenated Cartan coordinates (sum of factor ranks). Arbitrary tori are
/// reduced to this by conjugacy before entering the workbench.
struct TorusSpec {
  std::vector<RVec> basis;
};

/// Positive system of one factor re-based so that every root vanishing on the
/// torus is generated by the vanishing simple roots. Roots are signed
/// references into the factor's standard positive list; the underlying root
/// planes of the algebra are unchanged.
struct AdaptedFactor {
  std::vector<SignedIndex> simples;    // new simple system
  std::vector<SignedIndex> positives;  // new positive system
  std::vector<int> pi_k;               // indices into simples: vanish on s
  std::vector<int> pi_m;               // complement
  std::vector<SignedIndex> r_k_plus;   // new-positive roots vanishing on s
  std::vector<SignedIndex> r_m_plus;   // the rest
};

/// Kinds of basis vectors of m, for reports and witnesses.
struct MLabel {
  enum class Kind { SPrime, TPrime, RootA, RootB } kind;
  int factor = -1;
  SignedIndex root = 0;  // for root-plane labels
  std::string text;
};

/// G/S with the exact tangent decomposition
///   m = s' + p_1 + ... + p_k + q_1 + ... + q_k
/// over a B-orthogonal basis (the negative Killing form is diagonal on it).
struct SpaceGS {
  SemisimpleAlgebra alg;
  std::vector<RVec> s_basis;  // over the algebra basis
  std::vector<AdaptedFactor> adapted;

  std::vector<std::vector<RVec>> t_basis;        // per factor, algebra coords
  std::vector<std::vector<RVec>> t_prime_basis;  // per factor, algebra coords

  std::vector<RVec> m_basis;
  RVec m_diag;  // B(m_u, m_u)
  std::vector<MLabel> m_labels;

  std::pair<int, int> sprime_range{0, 0};
  std::vector<std::pair<int, int>> p_ranges;
  std::vector<std::pair<int, int>> q_ranges;

  int dim_s() const { return int(s_basis.size()); }
  int dim_m() const { return int(m_basis.size()); }
  int num_factors() const { return alg.num_factors(); }

  bool in_sprime(int u) const { return u >= sprime_range.first && u < sprime_range.second; }
  bool in_p(int u) const;
  bool in_q(int u) const;
  int block_factor(int u) const;  // factor of the p/q block containing u, -1 for s'

  /// Algebra vector of a tangent coordinate vector.
  RVec to_alg(const RVec& m_coords) const;

  /// Exact coordinates over the m basis; verifies v lies in span(m).
  RVec m_coords(const RVec& alg_vec) const;

  /// Full isotropy algebra basis of factor j: h_j plus the R_K+ planes.
  std::vector<RVec> isotropy_basis(int j) const;

  /// Tangent basis slices.
  std::vector<RVec> q_block_basis(int j) const;
  std::vector<RVec> p_block_basis(int j) const;
};

/// Embeds concatenated Cartan coordinates into the algebra.
RVec cartan_to_alg(const SemisimpleAlgebra& alg, const RVec& cartan_coords);

int total_rank(const SemisimpleAlgebra& alg);

/// Re-bases every factor's positive system so that the roots vanishing on s
/// are exactly the span of the vanishing simple roots. Positivity comes from
/// the lexicographic sign of (alpha(s_1), ..., alpha(s_d), alpha(tau)) with a
/// fixed regular tiebreaker tau, verified on the finite root set.
std::vector<AdaptedFactor> adapt_base(const SemisimpleAlgebra& alg, const TorusSpec& s);

SpaceGS build_space(SemisimpleAlgebra alg, const TorusSpec& s);

/// pi_j on algebra vectors. Throws BadFactorIndex.
RVec project(const SpaceGS& space, int j, const RVec& x);

nlohmann::ordered_json decompose_report(const SpaceGS& space);

}  // namespace golab::homspace
