#pragma once

#include <map>
#include <utility>
#include <vector>

#include "golab/linalg.hpp"
#include "golab/rational.hpp"
#include "golab/rootsys.hpp"

#include "json.hpp"

namespace golab::chevalley {

using rootsys::RootSystem;
using rootsys::SignedIndex;

/// Sparse coefficient vector over an algebra basis, sorted by index.
using SparseVec = std::vector<std::pair<int, Rat>>;

/// Integer structure constants N(a,b) of a Chevalley basis, with signs fixed
/// on extraspecial pairs by the positive-root order and propagated from there.
/// Consistency is certified by the Jacobi sweep of the compact form built on
/// top of the table, not by trusting the propagation.
class ChevalleyConstants {
 public:
  /// N(a,b) for signed root references; 0 when a+b is not a root.
  /// a+b must be nonzero.
  long n(const RootSystem& rs, SignedIndex a, SignedIndex b) const;

  /// Largest r with b - r a a root (both positive indices, 0-based).
  static int string_down(const RootSystem& rs, int a_pos, int b_pos);

  std::map<std::pair<int, int>, long> npos;            // 0-based positive pairs
  std::vector<std::pair<int, int>> extraspecial_pairs; // one per non-simple positive root
};

ChevalleyConstants chevalley_constants(const RootSystem& rs);

/// Compact real form over the ordered basis
///   x_i = i H_{alpha_i} (i = 0..rank-1),  A_p, B_p (p = 0..|R+|-1),
/// with exact rational structure constants and the exact negative Killing
/// form. H_alpha is Killing-normalized, kappa(H_alpha, H) = alpha(H), so the
/// bracket scalars [x_i, A_beta] = (beta, alpha_i) B_beta are genuine
/// Killing-form root products rather than Euclidean-model ones.
struct CompactAlgebra {
  RootSystem rs;
  ChevalleyConstants nc;
  int dim = 0;

  int cartan_index(int i) const { return i; }
  int a_index(int p) const { return rs.rank + 2 * p; }
  int b_index(int p) const { return rs.rank + 2 * p + 1; }

  /// (beta_p, alpha_i) in the Killing normalization.
  lin::Mat root_products;  // |R+| x rank

  /// [A_p, B_p] = 2 * coroot_x[p] over the x basis.
  std::vector<RVec> coroot_x;

  std::vector<std::vector<SparseVec>> table;  // dim x dim
  lin::Mat killing;                           // negative Killing form, dim x dim

  const SparseVec& bracket_basis(int u, int v) const { return table[size_t(u)][size_t(v)]; }

  /// Evaluation of a signed root functional on a Cartan vector given over the
  /// x basis: alpha(Y) with Y = sum y_i x_i.
  Rat root_on_cartan(SignedIndex s, const RVec& y_cartan) const;
};

/// Builds the compact real form and certifies it with a full Jacobi sweep
/// over all basis triples (throws ConsistencyFailure on any violation).
CompactAlgebra build_compact(const RootSystem& rs);

struct SemisimpleAlgebra {
  std::vector<CompactAlgebra> factors;
  std::vector<int> offsets;  // size factors+1; offsets.back() == dim
  int dim = 0;

  int num_factors() const { return int(factors.size()); }
  int offset(int j) const { return offsets[size_t(j)]; }
  int factor_dim(int j) const { return factors[size_t(j)].dim; }
  int factor_of(int u) const;

  RVec bracket(const RVec& x, const RVec& y) const;
  SparseVec bracket_basis(int u, int v) const;  // offset-shifted, cross-factor = 0

  Rat killing(int u, int v) const;
  Rat killing_form(const RVec& x, const RVec& y) const;

  /// pi_j: zero outside the j-th block. Throws BadFactorIndex.
  RVec project(int j, const RVec& x) const;

  /// Embeds a factor-local vector at the factor's block.
  RVec embed(int j, const RVec& local) const;
};

SemisimpleAlgebra direct_sum(std::vector<CompactAlgebra> factors);

/// Exact bracket of arbitrary coefficient vectors. Throws DimensionMismatch.
RVec ad_action(const SemisimpleAlgebra& alg, const RVec& x, const RVec& y);

struct SweepReport {
  long checked = 0;
  long violations = 0;
};

/// Jacobi identity over all basis triples, exact.
SweepReport jacobi_sweep(const CompactAlgebra& alg);

/// B([x,y],z) + B(y,[x,z]) = 0 over all basis triples, exact.
SweepReport killing_ad_invariance_sweep(const CompactAlgebra& alg);

nlohmann::ordered_json to_json(const CompactAlgebra& alg);

}  // namespace golab::chevalley
