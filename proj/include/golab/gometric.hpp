#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golab/homspace.hpp"
#include "golab/linalg.hpp"

#include "json.hpp"

namespace golab::gometric {

using homspace::SpaceGS;

/// Invariant metric on m as a B-symmetric positive definite operator,
/// equivariant under the torus action. Columns act: A e_u = sum_v mat(v,u) e_v
/// over the space's B-orthogonal tangent basis.
struct MetricEndo {
  lin::Mat mat;
};

/// Validates symmetry, positivity and equivariance; throws InvariantViolation
/// (or NotPositiveDefinite) with the offending location.
MetricEndo make_metric(const SpaceGS& space, lin::Mat a);

/// Block metric diag(A_s', lambda_1 Id, ..., lambda_k Id) on
/// s' + (p_1+q_1) + ... + (p_k+q_k).
MetricEndo block_metric(const SpaceGS& space, const lin::Mat& sprime_block,
                        const std::vector<Rat>& lambdas);

MetricEndo standard_metric(const SpaceGS& space);

struct GoVerdict {
  bool go = false;
  lin::Mat xi;                   // dim_s x dim_m geodesic graph, when go
  RVec witness;                  // tangent coordinates, when not go
  std::string witness_label;     // human-readable combination
  int witness_rank = 0;          // rank of the per-vector system
  int witness_rank_aug = 0;      // rank with the right-hand side appended
  nlohmann::ordered_json to_json() const;
};

/// Decides existence of a linear, torus-equivariant geodesic graph m -> s by
/// an exact polarized linear system. For toral isotropy this decides the
/// geodesic-orbit property itself, and a GO answer certifies natural
/// reductivity at the same time.
GoVerdict is_go_linear(const SpaceGS& space, const MetricEndo& a, int witness_samples = 200,
                       unsigned long long seed = 1);

struct NecformReport {
  bool passes = false;
  std::vector<Rat> lambdas;  // one per factor, when passes
  std::string offending;     // first offending basis vector otherwise
  nlohmann::ordered_json to_json() const;
};

/// Checks the block shape: A preserves s', acts as one positive scalar on
/// each p_j + q_j. No eigendecomposition, direct column checks.
NecformReport necform_check(const SpaceGS& space, const MetricEndo& a);

/// Geodesic graph of a block-shaped metric from its s'-block and scalars:
/// xi(X) = sum_j (1/lambda_j) pi_j((A - lambda_j Id) X_{s'}), as a matrix
/// m -> s. Throws FormulaEscape when the image leaves s (a non-g.o. input),
/// InvariantViolation when A is not in block shape.
lin::Mat geodesic_graph_formula(const SpaceGS& space, const MetricEndo& a);

struct NormalVerdict {
  bool normal = false;
  std::vector<Rat> mu;
  std::string discrepancy;
  nlohmann::ordered_json to_json() const;
};

/// Metric induced by Q = sum mu_j B|_{g_j}: restriction to the Q-orthogonal
/// complement of s, pulled back to m. Throws NotPositive for mu_j <= 0.
MetricEndo normal_from_mu(const SpaceGS& space, const std::vector<Rat>& mu);

/// Recovers mu from the block action and compares against normal_from_mu.
NormalVerdict check_normal(const SpaceGS& space, const MetricEndo& a);

struct SampledReport {
  bool consistent = false;
  long samples_checked = 0;
  RVec witness;  // tangent coordinates of the first failure
  nlohmann::ordered_json to_json() const;
};

/// Seeded per-vector falsifier for a general (possibly non-abelian) isotropy
/// subalgebra: solves [xi, AX] = [AX, X] in the isotropy for each sample X.
/// Consistency on all samples never proves the metric geodesic orbit; a
/// failure disproves it.
SampledReport is_go_sampled(const chevalley::SemisimpleAlgebra& alg,
                            const std::vector<RVec>& iso_basis,
                            const std::vector<RVec>& tangent_basis, const lin::Mat& a,
                            int n_samples = 200, unsigned long long seed = 1);

/// Feasibility of a linear graph tangent -> span(iso_basis) for an abelian
/// isotropy given by iso_basis, via the same polarized system as
/// is_go_linear. Used for flag tangents against the center alone.
bool linear_graph_exists(const chevalley::SemisimpleAlgebra& alg,
                         const std::vector<RVec>& iso_basis,
                         const std::vector<RVec>& tangent_basis, const lin::Mat& a);

/// Polarized bi-invariance test [X, AY] + [Y, AX] = 0 on a subalgebra given
/// by a basis; returns the first violating pair if any.
struct BiInvarianceReport {
  bool bi_invariant = false;
  int witness_u = -1, witness_v = -1;
};
BiInvarianceReport bi_invariance_check(const chevalley::SemisimpleAlgebra& alg,
                                       const std::vector<RVec>& basis, const lin::Mat& a);

/// Metric restricted to a coordinate range of the tangent basis.
lin::Mat restrict_block(const lin::Mat& a, std::pair<int, int> range);

}  // namespace golab::gometric
