#pragma once

#include <string>
#include <vector>

#include "golab/chevalley.hpp"
#include "golab/rootsys.hpp"

#include "json.hpp"

namespace golab::flagstruct {

using rootsys::RootSystem;

/// Painted Dynkin diagram: the painted nodes select the complementary simple
/// roots. painted is 0-based, sorted, nonempty.
struct PaintedDiagram {
  RootSystem rs;
  std::vector<int> painted;

  std::vector<int> unpainted() const;
};

PaintedDiagram make_painted(RootSystem rs, std::vector<int> painted);

/// Partition of the positive roots into the isotropy part (spanned by the
/// unpainted simples) and the complementary part, plus the two-step grading
/// by the painted coefficient when it is defined.
struct FlagPartition {
  std::vector<int> r_k_plus;  // positive-root indices
  std::vector<int> r_m_plus;
  bool graded = false;
  std::vector<int> r_m_1;  // painted coefficient 1
  std::vector<int> r_m_2;  // painted coefficient 2
};

FlagPartition partition(const PaintedDiagram& pd);

/// Center and complement of the isotropy algebra inside the Cartan, in
/// coordinates over the i H_{alpha_i} basis. The kernel computation only
/// consumes ratios of root products, so the Euclidean model suffices here.
struct IsotropySplit {
  std::vector<RVec> t_basis;        // reduced echelon kernel basis
  std::vector<RVec> t_prime_basis;  // unit vectors at the unpainted nodes
  std::vector<int> k_root_planes;   // = r_k_plus
  int dim_t = 0;
  int dim_t_prime = 0;
  int dim_k = 0;  // rank + 2 |R_K+|
};

IsotropySplit isotropy_split(const PaintedDiagram& pd);

/// The document emitted by `flag describe`.
nlohmann::ordered_json flag_report(const PaintedDiagram& pd);

/// Flag-manifold tangent data over a concrete compact algebra: isotropy basis
/// (Cartan plus the unpainted root planes) and the tangent basis, with the
/// two-submodule ranges when the grading exists.
struct FlagSpace {
  std::vector<RVec> iso_basis;      // over the algebra basis
  std::vector<RVec> center_basis;   // t embedded in the algebra
  std::vector<RVec> q_basis;        // tangent, B-orthogonal plane vectors
  std::pair<int, int> q1_range{0, 0};
  std::pair<int, int> q2_range{0, 0};
  std::vector<std::string> q_labels;
};

FlagSpace build_flag_space(const chevalley::CompactAlgebra& alg, const PaintedDiagram& pd);

}  // namespace golab::flagstruct
