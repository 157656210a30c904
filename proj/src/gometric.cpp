#include "golab/gometric.hpp"

#include <algorithm>

#include "golab/errors.hpp"

namespace golab::gometric {

namespace {

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
  // coefficients in {-2,...,2}
  RVec small_vec(int n) {
    RVec v = zero_vec(n);
    for (auto& x : v) x = Rat(long(next() % 5) - 2);
    return v;
  }
};

nlohmann::ordered_json rat_vec_json(const RVec& v) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

nlohmann::ordered_json rat_mat_json(const lin::Mat& m) {
  auto a = nlohmann::ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) a.push_back(rat_vec_json(m.row(r)));
  return a;
}

// A e_u over the algebra basis, one column at a time
std::vector<RVec> metric_columns(const chevalley::SemisimpleAlgebra& alg,
                                 const std::vector<RVec>& tangent, const lin::Mat& a) {
  int dm = int(tangent.size());
  std::vector<RVec> cols(static_cast<size_t>(dm));
  for (int u = 0; u < dm; ++u) {
    RVec v = zero_vec(alg.dim);
    for (int w = 0; w < dm; ++w)
      if (a.at(w, u) != 0) axpy(v, a.at(w, u), tangent[size_t(w)]);
    cols[size_t(u)] = std::move(v);
  }
  return cols;
}

// Polarized linear system for a linear graph tangent -> span(iso). Unknowns
// xi[a][u] flattened as a*dm + u. Origin tags: pair rows carry u*dm + v,
// everything else -1.
lin::EchelonSolver build_graph_system(const chevalley::SemisimpleAlgebra& alg,
                                      const std::vector<RVec>& iso,
                                      const std::vector<RVec>& tangent, const lin::Mat& a,
                                      bool equivariance,
                                      const std::function<RVec(const RVec&)>* tangent_coords) {
  int ds = int(iso.size());
  int dm = int(tangent.size());
  lin::EchelonSolver solver(ds * dm);

  auto acols = metric_columns(alg, tangent, a);
  // [iso_a, A e_w] for every a, w
  std::vector<std::vector<RVec>> sa_cols(static_cast<size_t>(ds), std::vector<RVec>(static_cast<size_t>(dm)));
  for (int s = 0; s < ds; ++s)
    for (int w = 0; w < dm; ++w) sa_cols[size_t(s)][size_t(w)] = alg.bracket(iso[size_t(s)], acols[size_t(w)]);

  if (equivariance && tangent_coords) {
    // xi([iso_a0, e_u]) = 0: the isotropy is abelian here, so the other half
    // of the equivariance identity vanishes identically
    for (int a0 = 0; a0 < ds; ++a0)
      for (int u = 0; u < dm; ++u) {
        RVec br = alg.bracket(iso[size_t(a0)], tangent[size_t(u)]);
        RVec c = (*tangent_coords)(br);
        if (is_zero_vec(c)) continue;
        for (int aa = 0; aa < ds; ++aa) {
          RVec row = zero_vec(ds * dm);
          for (int w = 0; w < dm; ++w) row[size_t(aa * dm + w)] = c[size_t(w)];
          solver.add_row(std::move(row), Rat(0), -1);
          if (solver.infeasible())
            throw InternalInvariantViolation("homogeneous equivariance row infeasible");
        }
      }
  }

  for (int u = 0; u < dm && !solver.infeasible(); ++u)
    for (int v = u; v < dm && !solver.infeasible(); ++v) {
      RVec k = alg.bracket(tangent[size_t(u)], acols[size_t(v)]);
      axpy(k, Rat(1), alg.bracket(tangent[size_t(v)], acols[size_t(u)]));
      std::vector<int> comps;
      for (int c = 0; c < alg.dim; ++c) {
        bool nz = k[size_t(c)] != 0;
        for (int s = 0; s < ds && !nz; ++s)
          nz = sa_cols[size_t(s)][size_t(v)][size_t(c)] != 0 ||
               sa_cols[size_t(s)][size_t(u)][size_t(c)] != 0;
        if (nz) comps.push_back(c);
      }
      for (int c : comps) {
        RVec row = zero_vec(ds * dm);
        for (int s = 0; s < ds; ++s) {
          row[size_t(s * dm + u)] += sa_cols[size_t(s)][size_t(v)][size_t(c)];
          row[size_t(s * dm + v)] += sa_cols[size_t(s)][size_t(u)][size_t(c)];
        }
        solver.add_row(std::move(row), -k[size_t(c)], long(u) * dm + v);
      }
    }
  return solver;
}

// per-vector geodesic equation: exists xi in span(iso) with [xi, AX] = [AX, X]
struct PerVector {
  bool feasible;
  int rank, rank_aug;
};

PerVector per_vector_check(const chevalley::SemisimpleAlgebra& alg, const std::vector<RVec>& iso,
                           const RVec& x_alg, const RVec& ax_alg) {
  int ds = int(iso.size());
  lin::Mat m(alg.dim, ds);
  for (int s = 0; s < ds; ++s) {
    RVec col = alg.bracket(iso[size_t(s)], ax_alg);
    for (int c = 0; c < alg.dim; ++c) m.at(c, s) = col[size_t(c)];
  }
  RVec rhs = alg.bracket(ax_alg, x_alg);
  PerVector pv;
  pv.rank = lin::rank(m);
  lin::Mat aug(alg.dim, ds + 1);
  for (int c = 0; c < alg.dim; ++c) {
    for (int s = 0; s < ds; ++s) aug.at(c, s) = m.at(c, s);
    aug.at(c, ds) = rhs[size_t(c)];
  }
  pv.rank_aug = lin::rank(aug);
  pv.feasible = pv.rank == pv.rank_aug;
  return pv;
}

}  // namespace

MetricEndo make_metric(const SpaceGS& space, lin::Mat a) {
  int dm = space.dim_m();
  if (a.rows() != dm || a.cols() != dm)
    throw DimensionMismatch("metric matrix must be " + std::to_string(dm) + " square");

  // B-symmetry: gram(u,v) = B(A e_u, e_v) = a(v,u) d_v must be symmetric
  lin::Mat gram(dm, dm);
  for (int u = 0; u < dm; ++u)
    for (int v = 0; v < dm; ++v) gram.at(u, v) = a.at(v, u) * space.m_diag[size_t(v)];
  for (int u = 0; u < dm; ++u)
    for (int v = u + 1; v < dm; ++v)
      if (gram.at(u, v) != gram.at(v, u))
        throw InvariantViolation("metric not B-symmetric at basis pair (" + std::to_string(u) +
                                 "," + std::to_string(v) + ")");
  if (!lin::is_positive_definite(gram))
    throw NotPositiveDefinite("metric is not positive definite");

  // torus equivariance: A ad_xi = ad_xi A on m for every torus basis vector
  for (size_t b = 0; b < space.s_basis.size(); ++b) {
    lin::Mat ad(dm, dm);
    for (int u = 0; u < dm; ++u) {
      RVec c = space.m_coords(space.alg.bracket(space.s_basis[b], space.m_basis[size_t(u)]));
      for (int w = 0; w < dm; ++w) ad.at(w, u) = c[size_t(w)];
    }
    if (!(lin::mul(a, ad) == lin::mul(ad, a)))
      throw InvariantViolation("metric not equivariant under torus vector " + std::to_string(b));
  }
  return MetricEndo{std::move(a)};
}

MetricEndo block_metric(const SpaceGS& space, const lin::Mat& sprime_block,
                        const std::vector<Rat>& lambdas) {
  int ns = space.sprime_range.second - space.sprime_range.first;
  if (sprime_block.rows() != ns || sprime_block.cols() != ns)
    throw DimensionMismatch("s' block must be " + std::to_string(ns) + " square");
  if (int(lambdas.size()) != space.num_factors())
    throw DimensionMismatch("one lambda per factor expected");
  for (const auto& l : lambdas)
    if (l <= 0) throw NotPositiveDefinite("lambdas must be positive");

  lin::Mat a(space.dim_m(), space.dim_m());
  for (int u = 0; u < ns; ++u)
    for (int v = 0; v < ns; ++v) a.at(u, v) = sprime_block.at(u, v);
  for (int j = 0; j < space.num_factors(); ++j) {
    for (int u = space.p_ranges[size_t(j)].first; u < space.p_ranges[size_t(j)].second; ++u)
      a.at(u, u) = lambdas[size_t(j)];
    for (int u = space.q_ranges[size_t(j)].first; u < space.q_ranges[size_t(j)].second; ++u)
      a.at(u, u) = lambdas[size_t(j)];
  }
  return make_metric(space, std::move(a));
}

MetricEndo standard_metric(const SpaceGS& space) {
  return MetricEndo{lin::Mat::identity(space.dim_m())};
}

nlohmann::ordered_json GoVerdict::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = go ? "GO" : "NOT_GO";
  if (go) {
    j["geodesic_graph"] = rat_mat_json(xi);
  } else {
    j["witness"] = rat_vec_json(witness);
    j["witness_label"] = witness_label;
    j["infeasibility"] = {{"rank", witness_rank}, {"rank_augmented", witness_rank_aug}};
  }
  return j;
}

GoVerdict is_go_linear(const SpaceGS& space, const MetricEndo& a, int witness_samples,
                       unsigned long long seed) {
  const auto& alg = space.alg;
  int dm = space.dim_m();
  int ds = space.dim_s();

  std::function<RVec(const RVec&)> coords = [&](const RVec& v) { return space.m_coords(v); };
  auto solver =
      build_graph_system(alg, space.s_basis, space.m_basis, a.mat, true, &coords);

  GoVerdict verdict;
  if (!solver.infeasible()) {
    // canonical certificate: re-solve with the graph confined to the s'
    // coordinates; the block-form theory guarantees this stays feasible
    auto canon = build_graph_system(alg, space.s_basis, space.m_basis, a.mat, true, &coords);
    for (int s = 0; s < ds; ++s)
      for (int u = 0; u < dm; ++u) {
        if (space.in_sprime(u)) continue;
        RVec row = zero_vec(ds * dm);
        row[size_t(s * dm + u)] = 1;
        canon.add_row(std::move(row), Rat(0), -1);
      }
    if (canon.infeasible())
      throw InternalInvariantViolation("graph exists but none confined to s'");
    RVec sol = canon.particular_solution();
    verdict.go = true;
    verdict.xi = lin::Mat(ds, dm);
    for (int s = 0; s < ds; ++s)
      for (int u = 0; u < dm; ++u) verdict.xi.at(s, u) = sol[size_t(s * dm + u)];

    // certificate recheck: the polarized identity holds exactly
    auto acols = metric_columns(alg, space.m_basis, a.mat);
    auto xi_of = [&](int u) {
      RVec v = zero_vec(alg.dim);
      for (int s = 0; s < ds; ++s) axpy(v, verdict.xi.at(s, u), space.s_basis[size_t(s)]);
      return v;
    };
    std::vector<RVec> xs(static_cast<size_t>(dm));
    for (int u = 0; u < dm; ++u) xs[size_t(u)] = xi_of(u);
    for (int u = 0; u < dm; ++u)
      for (int v = u; v < dm; ++v) {
        RVec lhs = alg.bracket(add_vec(xs[size_t(u)], space.m_basis[size_t(u)]), acols[size_t(v)]);
        axpy(lhs, Rat(1),
             alg.bracket(add_vec(xs[size_t(v)], space.m_basis[size_t(v)]), acols[size_t(u)]));
        if (!is_zero_vec(lhs))
          throw InternalInvariantViolation("solved geodesic graph fails the polarized identity");
      }
    return verdict;
  }

  // witness search: the tagged infeasible pair first, then a deterministic
  // family, then seeded small-rational vectors
  auto acols = metric_columns(alg, space.m_basis, a.mat);
  auto try_candidate = [&](const RVec& coords_m, const std::string& label) -> bool {
    RVec x = space.to_alg(coords_m);
    if (is_zero_vec(x)) return false;
    RVec ax = zero_vec(alg.dim);
    for (int w = 0; w < dm; ++w)
      if (coords_m[size_t(w)] != 0) {
        RVec col = zero_vec(alg.dim);
        for (int ww = 0; ww < dm; ++ww)
          if (a.mat.at(ww, w) != 0) axpy(col, a.mat.at(ww, w), space.m_basis[size_t(ww)]);
        axpy(ax, coords_m[size_t(w)], col);
      }
    auto pv = per_vector_check(alg, space.s_basis, x, ax);
    if (pv.feasible) return false;
    verdict.go = false;
    verdict.witness = coords_m;
    verdict.witness_label = label;
    verdict.witness_rank = pv.rank;
    verdict.witness_rank_aug = pv.rank_aug;
    return true;
  };
  auto unit = [&](int u) {
    RVec v = zero_vec(dm);
    v[size_t(u)] = 1;
    return v;
  };
  auto label_of = [&](const RVec& c) {
    std::string s;
    for (int u = 0; u < dm; ++u)
      if (c[size_t(u)] != 0) {
        if (!s.empty()) s += " + ";
        if (c[size_t(u)] != 1) s += rat_str(c[size_t(u)]) + "*";
        s += space.m_labels[size_t(u)].text;
      }
    return s;
  };

  long tag = solver.infeasible_tag();
  if (tag >= 0) {
    int u = int(tag / dm), v = int(tag % dm);
    RVec c = unit(u);
    if (v != u) c[size_t(v)] = 1;
    if (try_candidate(c, label_of(c))) return verdict;
  }
  for (int u = 0; u < dm; ++u)
    if (try_candidate(unit(u), label_of(unit(u)))) return verdict;
  for (int u = 0; u < dm; ++u)
    for (int v = u + 1; v < dm; ++v) {
      RVec c = unit(u);
      c[size_t(v)] = 1;
      if (try_candidate(c, label_of(c))) return verdict;
    }
  // s'-directions plus full complementary sums pin the graph the hardest
  std::vector<RVec> qsums;
  {
    RVec all = zero_vec(dm);
    for (int j = 0; j < space.num_factors(); ++j) {
      RVec fq = zero_vec(dm);
      for (int u = space.q_ranges[size_t(j)].first; u < space.q_ranges[size_t(j)].second; ++u)
        if (space.m_labels[size_t(u)].kind == homspace::MLabel::Kind::RootA) {
          fq[size_t(u)] = 1;
          all[size_t(u)] = 1;
        }
      if (!is_zero_vec(fq)) qsums.push_back(fq);
    }
    if (!is_zero_vec(all)) qsums.push_back(all);
  }
  for (const auto& qs : qsums)
    if (try_candidate(qs, label_of(qs))) return verdict;
  for (int b = space.sprime_range.first; b < space.sprime_range.second; ++b)
    for (const auto& qs : qsums) {
      RVec c = qs;
      c[size_t(b)] = 1;
      if (try_candidate(c, label_of(c))) return verdict;
    }
  Rng rng(seed);
  for (int t = 0; t < witness_samples; ++t) {
    RVec c = rng.small_vec(dm);
    if (try_candidate(c, "seeded sample " + std::to_string(t))) return verdict;
  }
  throw InternalInvariantViolation(
      "polarized system infeasible but no per-vector witness found in budget");
}

nlohmann::ordered_json NecformReport::to_json() const {
  nlohmann::ordered_json j;
  j["passes"] = passes;
  if (passes) {
    auto l = nlohmann::ordered_json::array();
    for (const auto& x : lambdas) l.push_back(rat_str(x));
    j["lambdas"] = l;
  } else {
    j["offending"] = offending;
  }
  return j;
}

NecformReport necform_check(const SpaceGS& space, const MetricEndo& a) {
  NecformReport rep;
  int dm = space.dim_m();
  // s' must be invariant
  for (int u = space.sprime_range.first; u < space.sprime_range.second; ++u)
    for (int v = 0; v < dm; ++v)
      if (!space.in_sprime(v) && a.mat.at(v, u) != 0) {
        rep.offending = "column " + space.m_labels[size_t(u)].text + " leaves s'";
        return rep;
      }
  // every p_j + q_j block must be one positive scalar
  for (int j = 0; j < space.num_factors(); ++j) {
    std::vector<int> idx;
    for (int u = space.p_ranges[size_t(j)].first; u < space.p_ranges[size_t(j)].second; ++u)
      idx.push_back(u);
    for (int u = space.q_ranges[size_t(j)].first; u < space.q_ranges[size_t(j)].second; ++u)
      idx.push_back(u);
    Rat lambda = 0;
    bool have = false;
    for (int u : idx) {
      for (int v = 0; v < dm; ++v)
        if (v != u && a.mat.at(v, u) != 0) {
          rep.offending = "column " + space.m_labels[size_t(u)].text + " is not diagonal";
          return rep;
        }
      if (!have) {
        lambda = a.mat.at(u, u);
        have = true;
      } else if (a.mat.at(u, u) != lambda) {
        rep.offending = "scalar changes inside block at " + space.m_labels[size_t(u)].text;
        return rep;
      }
    }
    if (!have) lambda = 1;  // empty block: any positive scalar represents it
    if (lambda <= 0) {
      rep.offending = "nonpositive scalar on factor " + std::to_string(j);
      return rep;
    }
    rep.lambdas.push_back(lambda);
  }
  rep.passes = true;
  return rep;
}

lin::Mat geodesic_graph_formula(const SpaceGS& space, const MetricEndo& a) {
  auto rep = necform_check(space, a);
  if (!rep.passes)
    throw InvariantViolation("metric is not in block form: " + rep.offending);
  int ds = space.dim_s();
  int dm = space.dim_m();
  lin::Mat xi(ds, dm);

  lin::Mat smat(space.alg.dim, ds);
  for (int s = 0; s < ds; ++s)
    for (int c = 0; c < space.alg.dim; ++c) smat.at(c, s) = space.s_basis[size_t(s)][size_t(c)];

  for (int u = space.sprime_range.first; u < space.sprime_range.second; ++u) {
    RVec b_alg = space.m_basis[size_t(u)];
    RVec ab_alg = zero_vec(space.alg.dim);
    for (int v = 0; v < dm; ++v)
      if (a.mat.at(v, u) != 0) axpy(ab_alg, a.mat.at(v, u), space.m_basis[size_t(v)]);
    RVec w = zero_vec(space.alg.dim);
    for (int j = 0; j < space.num_factors(); ++j) {
      RVec vj = space.alg.project(j, ab_alg);
      axpy(vj, -rep.lambdas[size_t(j)], space.alg.project(j, b_alg));
      axpy(w, 1 / rep.lambdas[size_t(j)], vj);
    }
    auto sol = lin::solve(smat, w);
    if (!sol)
      throw FormulaEscape("graph image leaves the torus at " + space.m_labels[size_t(u)].text);
    for (int s = 0; s < ds; ++s) xi.at(s, u) = (*sol)[size_t(s)];
  }
  return xi;
}

nlohmann::ordered_json NormalVerdict::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = normal ? "NORMAL" : "NOT_NORMAL";
  if (normal) {
    auto m = nlohmann::ordered_json::array();
    for (const auto& x : mu) m.push_back(rat_str(x));
    j["mu"] = m;
  } else {
    j["discrepancy"] = discrepancy;
  }
  return j;
}

MetricEndo normal_from_mu(const SpaceGS& space, const std::vector<Rat>& mu) {
  if (int(mu.size()) != space.num_factors())
    throw DimensionMismatch("one mu per factor expected");
  for (const auto& m : mu)
    if (m <= 0) throw NotPositive("mu must be positive");

  const auto& alg = space.alg;
  auto qform = [&](const RVec& x, const RVec& y) {
    Rat s = 0;
    for (int j = 0; j < space.num_factors(); ++j)
      s += mu[size_t(j)] * alg.killing_form(alg.project(j, x), alg.project(j, y));
    return s;
  };

  int ds = space.dim_s();
  int dm = space.dim_m();
  // projection onto the Q-orthogonal complement of s along s
  lin::Mat sgram(ds, ds);
  for (int b = 0; b < ds; ++b)
    for (int c = 0; c < ds; ++c) sgram.at(b, c) = qform(space.s_basis[size_t(b)], space.s_basis[size_t(c)]);
  std::vector<RVec> proj(static_cast<size_t>(dm));
  for (int u = 0; u < dm; ++u) {
    RVec v = space.m_basis[size_t(u)];
    if (ds > 0) {
      RVec rhs = zero_vec(ds);
      for (int b = 0; b < ds; ++b) rhs[size_t(b)] = qform(v, space.s_basis[size_t(b)]);
      auto c = lin::solve(sgram, rhs);
      if (!c) throw InternalInvariantViolation("Q degenerate on the torus");
      for (int b = 0; b < ds; ++b) axpy(v, -(*c)[size_t(b)], space.s_basis[size_t(b)]);
    }
    proj[size_t(u)] = std::move(v);
  }
  lin::Mat a(dm, dm);
  for (int u = 0; u < dm; ++u)
    for (int v = 0; v < dm; ++v) {
      Rat m = qform(proj[size_t(u)], proj[size_t(v)]);
      a.at(v, u) = m / space.m_diag[size_t(v)];
    }
  return make_metric(space, std::move(a));
}

NormalVerdict check_normal(const SpaceGS& space, const MetricEndo& a) {
  NormalVerdict out;
  int dm = space.dim_m();
  std::vector<Rat> mu;
  for (int j = 0; j < space.num_factors(); ++j) {
    std::vector<int> idx;
    for (int u = space.p_ranges[size_t(j)].first; u < space.p_ranges[size_t(j)].second; ++u)
      idx.push_back(u);
    for (int u = space.q_ranges[size_t(j)].first; u < space.q_ranges[size_t(j)].second; ++u)
      idx.push_back(u);
    Rat lambda = 0;
    bool have = false;
    for (int u : idx) {
      for (int v = 0; v < dm; ++v)
        if (v != u && a.mat.at(v, u) != 0) {
          out.discrepancy = "metric is not scalar at " + space.m_labels[size_t(u)].text;
          return out;
        }
      if (!have) {
        lambda = a.mat.at(u, u);
        have = true;
      } else if (a.mat.at(u, u) != lambda) {
        out.discrepancy = "scalar changes inside factor block " + std::to_string(j);
        return out;
      }
    }
    if (!have) lambda = 1;
    mu.push_back(lambda);
  }
  auto ref = normal_from_mu(space, mu);
  for (int u = 0; u < dm; ++u)
    for (int v = 0; v < dm; ++v)
      if (ref.mat.at(u, v) != a.mat.at(u, v)) {
        out.discrepancy = "s' block differs from the normal projection at (" +
                          space.m_labels[size_t(u)].text + ", " + space.m_labels[size_t(v)].text +
                          ")";
        return out;
      }
  out.normal = true;
  out.mu = std::move(mu);
  return out;
}

nlohmann::ordered_json SampledReport::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = consistent ? "consistent" : "NOT_GO";
  j["samples_checked"] = samples_checked;
  if (!consistent) j["witness"] = rat_vec_json(witness);
  return j;
}

SampledReport is_go_sampled(const chevalley::SemisimpleAlgebra& alg,
                            const std::vector<RVec>& iso_basis,
                            const std::vector<RVec>& tangent_basis, const lin::Mat& a,
                            int n_samples, unsigned long long seed) {
  int dm = int(tangent_basis.size());
  if (a.rows() != dm || a.cols() != dm)
    throw DimensionMismatch("metric must match the tangent basis");

  // tangent coordinates via the B-orthogonal diagonal
  RVec diag = zero_vec(dm);
  for (int u = 0; u < dm; ++u) {
    diag[size_t(u)] = alg.killing_form(tangent_basis[size_t(u)], tangent_basis[size_t(u)]);
    for (int v = u + 1; v < dm; ++v)
      if (alg.killing_form(tangent_basis[size_t(u)], tangent_basis[size_t(v)]) != 0)
        throw InvariantViolation("tangent basis must be B-orthogonal");
  }
  auto coords = [&](const RVec& v) {
    RVec c = zero_vec(dm);
    for (int u = 0; u < dm; ++u)
      c[size_t(u)] = alg.killing_form(v, tangent_basis[size_t(u)]) / diag[size_t(u)];
    RVec back = zero_vec(alg.dim);
    for (int u = 0; u < dm; ++u) axpy(back, c[size_t(u)], tangent_basis[size_t(u)]);
    if (back != v) throw InvariantViolation("bracket leaves the tangent space");
    return c;
  };

  // equivariance of A for the given isotropy, exact
  for (const auto& k : iso_basis) {
    lin::Mat ad(dm, dm);
    for (int u = 0; u < dm; ++u) {
      RVec c = coords(alg.bracket(k, tangent_basis[size_t(u)]));
      for (int w = 0; w < dm; ++w) ad.at(w, u) = c[size_t(w)];
    }
    if (!(lin::mul(a, ad) == lin::mul(ad, a)))
      throw InvariantViolation("metric not equivariant under the isotropy");
  }

  auto acols = metric_columns(alg, tangent_basis, a);
  SampledReport rep;
  auto check = [&](const RVec& c) -> bool {
    RVec x = zero_vec(alg.dim);
    for (int u = 0; u < dm; ++u)
      if (c[size_t(u)] != 0) axpy(x, c[size_t(u)], tangent_basis[size_t(u)]);
    if (is_zero_vec(x)) return true;
    RVec ax = zero_vec(alg.dim);
    for (int u = 0; u < dm; ++u)
      if (c[size_t(u)] != 0) axpy(ax, c[size_t(u)], acols[size_t(u)]);
    ++rep.samples_checked;
    auto pv = per_vector_check(alg, iso_basis, x, ax);
    if (!pv.feasible) {
      rep.consistent = false;
      rep.witness = c;
      return false;
    }
    return true;
  };

  rep.consistent = true;
  for (int u = 0; u < dm; ++u) {
    RVec c = zero_vec(dm);
    c[size_t(u)] = 1;
    if (!check(c)) return rep;
  }
  for (int u = 0; u < dm; ++u)
    for (int v = u + 1; v < dm; ++v) {
      RVec c = zero_vec(dm);
      c[size_t(u)] = 1;
      c[size_t(v)] = 1;
      if (!check(c)) return rep;
    }
  Rng rng(seed);
  for (int t = 0; t < n_samples; ++t)
    if (!check(rng.small_vec(dm))) return rep;
  return rep;
}

bool linear_graph_exists(const chevalley::SemisimpleAlgebra& alg,
                         const std::vector<RVec>& iso_basis,
                         const std::vector<RVec>& tangent_basis, const lin::Mat& a) {
  auto solver = build_graph_system(alg, iso_basis, tangent_basis, a, false, nullptr);
  return !solver.infeasible();
}

BiInvarianceReport bi_invariance_check(const chevalley::SemisimpleAlgebra& alg,
                                       const std::vector<RVec>& basis, const lin::Mat& a) {
  auto acols = metric_columns(alg, basis, a);
  BiInvarianceReport rep;
  int n = int(basis.size());
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      RVec lhs = alg.bracket(basis[size_t(u)], acols[size_t(v)]);
      axpy(lhs, Rat(1), alg.bracket(basis[size_t(v)], acols[size_t(u)]));
      if (!is_zero_vec(lhs)) {
        rep.bi_invariant = false;
        rep.witness_u = u;
        rep.witness_v = v;
        return rep;
      }
    }
  rep.bi_invariant = true;
  return rep;
}

lin::Mat restrict_block(const lin::Mat& a, std::pair<int, int> range) {
  auto [lo, hi] = range;
  int n = hi - lo;
  lin::Mat out(n, n);
  for (int u = 0; u < a.rows(); ++u)
    for (int v = lo; v < hi; ++v) {
      bool inside = u >= lo && u < hi;
      if (!inside && a.at(u, v) != 0)
        throw InvariantViolation("block is not invariant under the metric");
      if (inside) out.at(u - lo, v - lo) = a.at(u, v);
    }
  return out;
}

}  // namespace golab::gometric
