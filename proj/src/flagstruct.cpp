#include "golab/flagstruct.hpp"

#include <algorithm>

#include "golab/errors.hpp"

namespace golab::flagstruct {

std::vector<int> PaintedDiagram::unpainted() const {
  std::vector<int> out;
  for (int i = 0; i < rs.rank; ++i)
    if (!std::binary_search(painted.begin(), painted.end(), i)) out.push_back(i);
  return out;
}

PaintedDiagram make_painted(RootSystem rs, std::vector<int> painted) {
  std::sort(painted.begin(), painted.end());
  painted.erase(std::unique(painted.begin(), painted.end()), painted.end());
  if (painted.empty()) throw InvariantViolation("painted set must be nonempty");
  for (int i : painted)
    if (i < 0 || i >= rs.rank)
      throw InvariantViolation("painted node " + std::to_string(i + 1) + " out of range");
  return PaintedDiagram{std::move(rs), std::move(painted)};
}

FlagPartition partition(const PaintedDiagram& pd) {
  const auto& rs = pd.rs;
  FlagPartition fp;
  for (int p = 0; p < rs.num_positive(); ++p) {
    const auto& c = rs.positive(p).coeffs;
    bool in_k = true;
    for (int i : pd.painted) in_k = in_k && c[size_t(i)] == 0;
    (in_k ? fp.r_k_plus : fp.r_m_plus).push_back(p);
  }
  if (pd.painted.size() == 1) {
    int node = pd.painted[0];
    int cmax = 0;
    for (int p = 0; p < rs.num_positive(); ++p)
      cmax = std::max(cmax, rs.positive(p).coeffs[size_t(node)]);
    if (cmax == 2) {
      fp.graded = true;
      for (int p : fp.r_m_plus) {
        int c = rs.positive(p).coeffs[size_t(node)];
        if (c == 1)
          fp.r_m_1.push_back(p);
        else if (c == 2)
          fp.r_m_2.push_back(p);
        else
          throw InternalInvariantViolation("painted coefficient outside {1,2}");
      }
    }
  }
  return fp;
}

IsotropySplit isotropy_split(const PaintedDiagram& pd) {
  const auto& rs = pd.rs;
  IsotropySplit out;
  auto pi_k = pd.unpainted();

  // rows alpha_i(i H_{alpha_j}) for i in Pi_K, up to the fixed Killing/Euclid
  // ratio of the system, which does not move the kernel
  lin::Mat eval(int(pi_k.size()), rs.rank);
  for (size_t r = 0; r < pi_k.size(); ++r)
    for (int j = 0; j < rs.rank; ++j) eval.at(int(r), j) = rs.gram.at(pi_k[r], j);
  out.t_basis = lin::kernel_basis(eval);

  for (int i : pi_k) {
    RVec v = zero_vec(rs.rank);
    v[size_t(i)] = 1;
    out.t_prime_basis.push_back(std::move(v));
  }

  auto fp = partition(pd);
  out.k_root_planes = fp.r_k_plus;
  out.dim_t = int(out.t_basis.size());
  out.dim_t_prime = int(out.t_prime_basis.size());
  out.dim_k = rs.rank + 2 * int(fp.r_k_plus.size());

  if (out.dim_t != rs.rank - int(pi_k.size()))
    throw InternalInvariantViolation("center dimension mismatch");
  return out;
}

nlohmann::ordered_json flag_report(const PaintedDiagram& pd) {
  const auto& rs = pd.rs;
  auto fp = partition(pd);
  auto split = isotropy_split(pd);

  nlohmann::ordered_json j;
  j["type"] = rootsys::root_type_label(rs.type);
  j["rank"] = rs.rank;
  nlohmann::ordered_json painted = nlohmann::ordered_json::array();
  for (int i : pd.painted) painted.push_back(i + 1);
  j["painted"] = painted;

  auto root_list = [&](const std::vector<int>& idx) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (int p : idx) a.push_back(rs.positive(p).coeffs);
    return a;
  };
  j["r_k_plus"] = root_list(fp.r_k_plus);
  j["r_m_plus"] = root_list(fp.r_m_plus);
  j["graded"] = fp.graded;
  if (fp.graded) {
    j["r_m_1"] = root_list(fp.r_m_1);
    j["r_m_2"] = root_list(fp.r_m_2);
  }
  nlohmann::ordered_json iso;
  iso["dim_t"] = split.dim_t;
  iso["dim_t_prime"] = split.dim_t_prime;
  iso["dim_k"] = split.dim_k;
  j["isotropy"] = iso;
  return j;
}

FlagSpace build_flag_space(const chevalley::CompactAlgebra& alg, const PaintedDiagram& pd) {
  if (alg.rs.positive_roots.size() != pd.rs.positive_roots.size() || alg.rs.type != pd.rs.type ||
      alg.rs.rank != pd.rs.rank)
    throw DimensionMismatch("flag diagram does not match the algebra");
  auto fp = partition(pd);
  FlagSpace fs;
  auto unit = [&](int idx) {
    RVec v = zero_vec(alg.dim);
    v[size_t(idx)] = 1;
    return v;
  };
  for (int i = 0; i < alg.rs.rank; ++i) fs.iso_basis.push_back(unit(alg.cartan_index(i)));
  for (int p : fp.r_k_plus) {
    fs.iso_basis.push_back(unit(alg.a_index(p)));
    fs.iso_basis.push_back(unit(alg.b_index(p)));
  }

  auto split = isotropy_split(pd);
  for (const auto& t : split.t_basis) {
    RVec v = zero_vec(alg.dim);
    for (int i = 0; i < alg.rs.rank; ++i) v[size_t(alg.cartan_index(i))] = t[size_t(i)];
    fs.center_basis.push_back(std::move(v));
  }

  auto push_planes = [&](const std::vector<int>& roots) {
    for (int p : roots) {
      fs.q_basis.push_back(unit(alg.a_index(p)));
      fs.q_labels.push_back("A[" + nlohmann::json(alg.rs.positive(p).coeffs).dump() + "]");
      fs.q_basis.push_back(unit(alg.b_index(p)));
      fs.q_labels.push_back("B[" + nlohmann::json(alg.rs.positive(p).coeffs).dump() + "]");
    }
  };
  if (fp.graded) {
    fs.q1_range = {0, 2 * int(fp.r_m_1.size())};
    push_planes(fp.r_m_1);
    fs.q2_range = {fs.q1_range.second, fs.q1_range.second + 2 * int(fp.r_m_2.size())};
    push_planes(fp.r_m_2);
  } else {
    push_planes(fp.r_m_plus);
    fs.q1_range = {0, int(fs.q_basis.size())};
  }
  return fs;
}

}  // namespace golab::flagstruct
