#include "golab/homspace.hpp"

#include <algorithm>
#include <map>

#include "golab/errors.hpp"

namespace golab::homspace {

int total_rank(const SemisimpleAlgebra& alg) {
  int r = 0;
  for (const auto& f : alg.factors) r += f.rs.rank;
  return r;
}

RVec cartan_to_alg(const SemisimpleAlgebra& alg, const RVec& cartan_coords) {
  if (int(cartan_coords.size()) != total_rank(alg))
    throw DimensionMismatch("torus vector length must equal the total rank");
  RVec v = zero_vec(alg.dim);
  int pos = 0;
  for (int j = 0; j < alg.num_factors(); ++j) {
    const auto& f = alg.factors[size_t(j)];
    for (int i = 0; i < f.rs.rank; ++i)
      v[size_t(alg.offset(j) + f.cartan_index(i))] = cartan_coords[size_t(pos++)];
  }
  return v;
}

namespace {

// factor-local Cartan slice of an algebra vector
RVec factor_cartan(const SemisimpleAlgebra& alg, int j, const RVec& v) {
  const auto& f = alg.factors[size_t(j)];
  RVec out = zero_vec(f.rs.rank);
  for (int i = 0; i < f.rs.rank; ++i) out[size_t(i)] = v[size_t(alg.offset(j) + i)];
  return out;
}

bool cartan_supported(const SemisimpleAlgebra& alg, const RVec& v) {
  for (int j = 0; j < alg.num_factors(); ++j) {
    const auto& f = alg.factors[size_t(j)];
    for (int u = f.rs.rank; u < f.dim; ++u)
      if (v[size_t(alg.offset(j) + u)] != 0) return false;
  }
  return true;
}

std::string signed_root_text(const rootsys::RootSystem& rs, SignedIndex s) {
  auto c = rs.coeffs_of(s);
  return nlohmann::json(c).dump();
}

}  // namespace

std::vector<AdaptedFactor> adapt_base(const SemisimpleAlgebra& alg, const TorusSpec& s) {
  // torus vectors in algebra coordinates, validated as Cartan-supported and
  // linearly independent
  std::vector<RVec> sv;
  for (const auto& b : s.basis) sv.push_back(cartan_to_alg(alg, b));
  if (!sv.empty()) {
    lin::Mat m = lin::from_rows(sv, alg.dim);
    if (lin::rank(m) != int(sv.size()))
      throw InvariantViolation("torus basis vectors are linearly dependent");
  }

  std::vector<AdaptedFactor> out;
  for (int j = 0; j < alg.num_factors(); ++j) {
    const auto& f = alg.factors[size_t(j)];
    const auto& rs = f.rs;
    int npos = rs.num_positive();

    // evaluation tuples (alpha(s_1), ..., alpha(s_d), alpha(tau)); the
    // tiebreaker tau sits in the dominant chamber with alpha_i(tau) = 1, so
    // it evaluates every root to its height: regular on the whole root set,
    // and roots vanishing on s keep their standard sign
    std::vector<RVec> tuples(static_cast<size_t>(npos));
    lin::Mat simple_products(rs.rank, rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      int pi = rs.signed_index(rs.simple_roots[size_t(i)].coeffs) - 1;
      for (int j = 0; j < rs.rank; ++j) simple_products.at(i, j) = f.root_products.at(pi, j);
    }
    auto tau_sol = lin::solve(simple_products, RVec(size_t(rs.rank), Rat(1)));
    if (!tau_sol) throw InternalInvariantViolation("degenerate Cartan product matrix");
    RVec tau = *tau_sol;
    for (int p = 0; p < npos; ++p)
      if (f.root_on_cartan(p + 1, tau) != Rat(rs.positive(p).height()))
        throw InternalInvariantViolation("tiebreaker does not evaluate to heights");
    for (int p = 0; p < npos; ++p) {
      RVec t;
      for (const auto& b : sv) t.push_back(f.root_on_cartan(p + 1, factor_cartan(alg, j, b)));
      t.push_back(f.root_on_cartan(p + 1, tau));
      tuples[size_t(p)] = std::move(t);
    }
    auto tuple_sign = [&](int p) {
      for (const auto& x : tuples[size_t(p)]) {
        if (x > 0) return 1;
        if (x < 0) return -1;
      }
      return 0;
    };

    AdaptedFactor af;
    std::map<std::vector<int>, SignedIndex> pos_index;
    for (int p = 0; p < npos; ++p) {
      int sg = tuple_sign(p);
      if (sg == 0) throw InternalInvariantViolation("degenerate positivity tuple");
      SignedIndex ref = sg > 0 ? p + 1 : -(p + 1);
      af.positives.push_back(ref);
      pos_index[rs.coeffs_of(ref)] = ref;
    }

    // new simples = indecomposables of the new positive system
    for (SignedIndex ref : af.positives) {
      auto c = rs.coeffs_of(ref);
      bool decomposable = false;
      for (SignedIndex other : af.positives) {
        auto rest = rootsys::coeff_sub(c, rs.coeffs_of(other));
        bool zero = std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; });
        if (!zero && pos_index.count(rest)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) af.simples.push_back(ref);
    }
    if (int(af.simples.size()) != rs.rank)
      throw AdaptationFailure("adapted simple system has wrong size");

    auto vanishes = [&](SignedIndex ref) {
      for (size_t b = 0; b + 1 < tuples[size_t(std::abs(ref) - 1)].size(); ++b)
        if (tuples[size_t(std::abs(ref) - 1)][b] != 0) return false;
      return true;
    };
    for (size_t i = 0; i < af.simples.size(); ++i)
      (vanishes(af.simples[i]) ? af.pi_k : af.pi_m).push_back(int(i));
    for (SignedIndex ref : af.positives)
      (vanishes(ref) ? af.r_k_plus : af.r_m_plus).push_back(ref);

    // verification: every vanishing positive root must decompose inside the
    // vanishing set down to Pi_K
    std::map<std::vector<int>, bool> vanish_pos;
    for (SignedIndex ref : af.r_k_plus) vanish_pos[rs.coeffs_of(ref)] = true;
    std::map<std::vector<int>, bool> pik_set;
    for (int i : af.pi_k) pik_set[rs.coeffs_of(af.simples[size_t(i)])] = true;
    for (SignedIndex ref : af.r_k_plus) {
      auto c = rs.coeffs_of(ref);
      if (pik_set.count(c)) continue;
      bool ok = false;
      for (const auto& [bc, _] : vanish_pos) {
        auto rest = rootsys::coeff_sub(c, bc);
        bool zero = std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; });
        if (!zero && vanish_pos.count(rest)) {
          ok = true;
          break;
        }
      }
      if (!ok) throw AdaptationFailure("vanishing root not generated by vanishing simples");
    }
    out.push_back(std::move(af));
  }
  return out;
}

bool SpaceGS::in_p(int u) const {
  for (const auto& [a, b] : p_ranges)
    if (u >= a && u < b) return true;
  return false;
}

bool SpaceGS::in_q(int u) const {
  for (const auto& [a, b] : q_ranges)
    if (u >= a && u < b) return true;
  return false;
}

int SpaceGS::block_factor(int u) const {
  for (int j = 0; j < num_factors(); ++j) {
    if (u >= p_ranges[size_t(j)].first && u < p_ranges[size_t(j)].second) return j;
    if (u >= q_ranges[size_t(j)].first && u < q_ranges[size_t(j)].second) return j;
  }
  return -1;
}

RVec SpaceGS::to_alg(const RVec& coords) const {
  if (int(coords.size()) != dim_m()) throw DimensionMismatch("tangent coordinate length");
  RVec v = zero_vec(alg.dim);
  for (int u = 0; u < dim_m(); ++u)
    if (coords[size_t(u)] != 0) axpy(v, coords[size_t(u)], m_basis[size_t(u)]);
  return v;
}

RVec SpaceGS::m_coords(const RVec& alg_vec) const {
  RVec c = zero_vec(dim_m());
  for (int u = 0; u < dim_m(); ++u)
    c[size_t(u)] = alg.killing_form(alg_vec, m_basis[size_t(u)]) / m_diag[size_t(u)];
  if (to_alg(c) != alg_vec)
    throw InternalInvariantViolation("vector does not lie in the tangent space");
  return c;
}

std::vector<RVec> SpaceGS::isotropy_basis(int j) const {
  if (j < 0 || j >= num_factors()) throw BadFactorIndex("factor index out of range");
  std::vector<RVec> out;
  const auto& f = alg.factors[size_t(j)];
  for (int i = 0; i < f.rs.rank; ++i) {
    RVec v = zero_vec(alg.dim);
    v[size_t(alg.offset(j) + f.cartan_index(i))] = 1;
    out.push_back(std::move(v));
  }
  for (SignedIndex ref : adapted[size_t(j)].r_k_plus) {
    int p = std::abs(ref) - 1;
    for (int idx : {f.a_index(p), f.b_index(p)}) {
      RVec v = zero_vec(alg.dim);
      v[size_t(alg.offset(j) + idx)] = 1;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<RVec> SpaceGS::q_block_basis(int j) const {
  if (j < 0 || j >= num_factors()) throw BadFactorIndex("factor index out of range");
  std::vector<RVec> out;
  for (int u = q_ranges[size_t(j)].first; u < q_ranges[size_t(j)].second; ++u)
    out.push_back(m_basis[size_t(u)]);
  return out;
}

std::vector<RVec> SpaceGS::p_block_basis(int j) const {
  if (j < 0 || j >= num_factors()) throw BadFactorIndex("factor index out of range");
  std::vector<RVec> out;
  for (int u = p_ranges[size_t(j)].first; u < p_ranges[size_t(j)].second; ++u)
    out.push_back(m_basis[size_t(u)]);
  return out;
}

SpaceGS build_space(SemisimpleAlgebra alg_in, const TorusSpec& s) {
  SpaceGS sp;
  sp.alg = std::move(alg_in);
  const auto& alg = sp.alg;

  for (const auto& b : s.basis) {
    RVec v = cartan_to_alg(alg, b);
    if (!cartan_supported(alg, v))
      throw InvariantViolation("torus vector not inside the Cartan");
    sp.s_basis.push_back(std::move(v));
  }
  sp.adapted = adapt_base(alg, s);

  auto bform = [&](const RVec& x, const RVec& y) { return alg.killing_form(x, y); };

  // per-factor center and complement inside the Cartan
  for (int j = 0; j < alg.num_factors(); ++j) {
    const auto& f = alg.factors[size_t(j)];
    const auto& af = sp.adapted[size_t(j)];

    lin::Mat eval(int(af.pi_k.size()), f.rs.rank);
    for (size_t r = 0; r < af.pi_k.size(); ++r) {
      SignedIndex ref = af.simples[size_t(af.pi_k[r])];
      for (int i = 0; i < f.rs.rank; ++i) {
        Rat v = f.root_products.at(std::abs(ref) - 1, i);
        eval.at(int(r), i) = ref > 0 ? v : -v;
      }
    }
    std::vector<RVec> tloc = lin::kernel_basis(eval);
    std::vector<RVec> t_alg;
    for (const auto& t : tloc) {
      RVec v = zero_vec(alg.dim);
      for (int i = 0; i < f.rs.rank; ++i) v[size_t(alg.offset(j) + i)] = t[size_t(i)];
      t_alg.push_back(std::move(v));
    }
    sp.t_basis.push_back(std::move(t_alg));

    std::vector<RVec> tp;
    for (int i : af.pi_k) {
      SignedIndex ref = af.simples[size_t(i)];
      auto coeffs = f.rs.coeffs_of(ref);
      RVec v = zero_vec(alg.dim);
      for (int ii = 0; ii < f.rs.rank; ++ii) v[size_t(alg.offset(j) + ii)] = Rat(coeffs[size_t(ii)]);
      tp.push_back(std::move(v));
    }
    if (!tp.empty()) tp = lin::orthogonalize(tp, bform);
    sp.t_prime_basis.push_back(std::move(tp));
  }

  // f = sum of centers; s must lie inside it; s' = B-complement of s in f
  std::vector<RVec> f_basis;
  for (const auto& tb : sp.t_basis)
    for (const auto& v : tb) f_basis.push_back(v);

  if (!sp.s_basis.empty()) {
    lin::Mat fm(int(f_basis.size()), alg.dim);
    for (size_t r = 0; r < f_basis.size(); ++r) fm.set_row(int(r), f_basis[r]);
    lin::Mat ft = lin::transpose(fm);
    for (const auto& sbv : sp.s_basis)
      if (!lin::solve(ft, sbv))
        throw InternalInvariantViolation("torus does not lie in the sum of centers");
  }

  std::vector<RVec> sprime;
  if (!f_basis.empty()) {
    lin::Mat pairings(int(sp.s_basis.size()), int(f_basis.size()));
    for (size_t b = 0; b < sp.s_basis.size(); ++b)
      for (size_t i = 0; i < f_basis.size(); ++i)
        pairings.at(int(b), int(i)) = bform(sp.s_basis[b], f_basis[i]);
    for (const auto& coef : lin::kernel_basis(pairings)) {
      RVec v = zero_vec(alg.dim);
      for (size_t i = 0; i < f_basis.size(); ++i) axpy(v, coef[size_t(i)], f_basis[i]);
      sprime.push_back(std::move(v));
    }
    if (!sprime.empty()) sprime = lin::orthogonalize(sprime, bform);
  }

  // assemble m = s' | p_1 .. p_k | q_1 .. q_k
  auto push_vec = [&](RVec v, MLabel lbl) {
    sp.m_labels.push_back(std::move(lbl));
    sp.m_basis.push_back(std::move(v));
  };
  sp.sprime_range = {0, int(sprime.size())};
  for (size_t i = 0; i < sprime.size(); ++i)
    push_vec(sprime[i], {MLabel::Kind::SPrime, -1, 0, "s'[" + std::to_string(i) + "]"});

  for (int j = 0; j < alg.num_factors(); ++j) {
    const auto& f = alg.factors[size_t(j)];
    const auto& af = sp.adapted[size_t(j)];
    int begin = int(sp.m_basis.size());
    for (size_t i = 0; i < sp.t_prime_basis[size_t(j)].size(); ++i)
      push_vec(sp.t_prime_basis[size_t(j)][i],
               {MLabel::Kind::TPrime, j, 0, "t'[" + std::to_string(j) + "][" + std::to_string(i) + "]"});
    for (SignedIndex ref : af.r_k_plus) {
      int p = std::abs(ref) - 1;
      RVec a = zero_vec(alg.dim), b = zero_vec(alg.dim);
      a[size_t(alg.offset(j) + f.a_index(p))] = 1;
      b[size_t(alg.offset(j) + f.b_index(p))] = 1;
      push_vec(std::move(a), {MLabel::Kind::RootA, j, ref, "p" + std::to_string(j) + ".A" + signed_root_text(f.rs, ref)});
      push_vec(std::move(b), {MLabel::Kind::RootB, j, ref, "p" + std::to_string(j) + ".B" + signed_root_text(f.rs, ref)});
    }
    sp.p_ranges.emplace_back(begin, int(sp.m_basis.size()));
  }
  for (int j = 0; j < alg.num_factors(); ++j) {
    const auto& f = alg.factors[size_t(j)];
    const auto& af = sp.adapted[size_t(j)];
    int begin = int(sp.m_basis.size());
    for (SignedIndex ref : af.r_m_plus) {
      int p = std::abs(ref) - 1;
      RVec a = zero_vec(alg.dim), b = zero_vec(alg.dim);
      a[size_t(alg.offset(j) + f.a_index(p))] = 1;
      b[size_t(alg.offset(j) + f.b_index(p))] = 1;
      push_vec(std::move(a), {MLabel::Kind::RootA, j, ref, "q" + std::to_string(j) + ".A" + signed_root_text(f.rs, ref)});
      push_vec(std::move(b), {MLabel::Kind::RootB, j, ref, "q" + std::to_string(j) + ".B" + signed_root_text(f.rs, ref)});
    }
    sp.q_ranges.emplace_back(begin, int(sp.m_basis.size()));
  }

  if (sp.dim_m() + sp.dim_s() != alg.dim)
    throw InternalInvariantViolation("tangent dimension mismatch");

  // the assembled basis must be exactly B-orthogonal with positive diagonal,
  // and orthogonal to s
  sp.m_diag = zero_vec(sp.dim_m());
  for (int u = 0; u < sp.dim_m(); ++u) {
    sp.m_diag[size_t(u)] = bform(sp.m_basis[size_t(u)], sp.m_basis[size_t(u)]);
    if (sp.m_diag[size_t(u)] <= 0)
      throw InternalInvariantViolation("tangent basis vector with nonpositive norm");
    for (int v = u + 1; v < sp.dim_m(); ++v)
      if (bform(sp.m_basis[size_t(u)], sp.m_basis[size_t(v)]) != 0)
        throw InternalInvariantViolation("tangent basis not B-orthogonal");
    for (const auto& sbv : sp.s_basis)
      if (bform(sp.m_basis[size_t(u)], sbv) != 0)
        throw InternalInvariantViolation("tangent basis not orthogonal to the torus");
  }

  // centralizer cross-check: h + sum of vanishing planes must equal
  // {Y : [Y, s_b] = 0 for all b}, computed as an exact kernel
  {
    int d = int(sp.s_basis.size());
    if (d > 0) {
      lin::Mat stacked(d * alg.dim, alg.dim);
      for (int b = 0; b < d; ++b)
        for (int u = 0; u < alg.dim; ++u) {
          RVec eu = zero_vec(alg.dim);
          eu[size_t(u)] = 1;
          RVec br = alg.bracket(sp.s_basis[size_t(b)], eu);
          for (int w = 0; w < alg.dim; ++w) stacked.at(b * alg.dim + w, u) = br[size_t(w)];
        }
      int dim_centralizer = alg.dim - lin::rank(stacked);
      int expect = 0;
      for (int j = 0; j < alg.num_factors(); ++j)
        expect += alg.factors[size_t(j)].rs.rank + 2 * int(sp.adapted[size_t(j)].r_k_plus.size());
      if (dim_centralizer != expect)
        throw InternalInvariantViolation("centralizer dimension mismatch");
    }
  }
  return sp;
}

RVec project(const SpaceGS& space, int j, const RVec& x) { return space.alg.project(j, x); }

nlohmann::ordered_json decompose_report(const SpaceGS& space) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const auto& f : space.alg.factors) {
    nlohmann::ordered_json fj;
    fj["type"] = rootsys::root_type_label(f.rs.type);
    fj["rank"] = f.rs.rank;
    fj["dim"] = f.dim;
    factors.push_back(fj);
  }
  j["factors"] = factors;
  j["dim_g"] = space.alg.dim;
  j["dim_s"] = space.dim_s();
  j["dim_m"] = space.dim_m();
  j["dim_s_prime"] = space.sprime_range.second - space.sprime_range.first;
  nlohmann::ordered_json p = nlohmann::ordered_json::array(),
                         q = nlohmann::ordered_json::array(),
                         t = nlohmann::ordered_json::array();
  for (int k = 0; k < space.num_factors(); ++k) {
    p.push_back(space.p_ranges[size_t(k)].second - space.p_ranges[size_t(k)].first);
    q.push_back(space.q_ranges[size_t(k)].second - space.q_ranges[size_t(k)].first);
    t.push_back(int(space.t_basis[size_t(k)].size()));
  }
  j["dim_p"] = p;
  j["dim_q"] = q;
  j["dim_t"] = t;
  // the adapted vanishing simple roots as coefficient vectors
  nlohmann::ordered_json painted = nlohmann::ordered_json::array();
  for (int k = 0; k < space.num_factors(); ++k) {
    const auto& af = space.adapted[size_t(k)];
    const auto& rs = space.alg.factors[size_t(k)].rs;
    nlohmann::ordered_json pk = nlohmann::ordered_json::array();
    for (int i : af.pi_k) pk.push_back(rs.coeffs_of(af.simples[size_t(i)]));
    painted.push_back(pk);
  }
  j["pi_k_adapted"] = painted;
  return j;
}

}  // namespace golab::homspace
