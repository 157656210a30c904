#include "golab/chevalley.hpp"

#include <algorithm>

#include "golab/errors.hpp"
#include "golab/threading.hpp"

namespace golab::chevalley {

namespace {

void sparse_add(SparseVec& v, int idx, const Rat& c) {
  if (c == 0) return;
  for (auto& [i, x] : v)
    if (i == idx) {
      x += c;
      return;
    }
  v.emplace_back(idx, c);
}

void sparse_normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, x] : v)
    if (x != 0) out.emplace_back(i, x);
  v = std::move(out);
}

}  // namespace

int ChevalleyConstants::string_down(const RootSystem& rs, int a_pos, int b_pos) {
  const auto& a = rs.positive(a_pos).coeffs;
  std::vector<int> v = rs.positive(b_pos).coeffs;
  int r = 0;
  while (true) {
    v = rootsys::coeff_sub(v, a);
    if (!rs.is_root(v)) break;
    ++r;
  }
  return r;
}

long ChevalleyConstants::n(const RootSystem& rs, SignedIndex a, SignedIndex b) const {
  std::vector<int> sum = rootsys::coeff_add(rs.coeffs_of(a), rs.coeffs_of(b));
  bool zero = true;
  for (int c : sum) zero = zero && c == 0;
  if (zero) throw InternalInvariantViolation("N(a,-a) requested");
  if (!rs.is_root(sum)) return 0;

  if (a > 0 && b > 0) {
    auto it = npos.find({a - 1, b - 1});
    if (it == npos.end()) throw InternalInvariantViolation("missing positive N entry");
    return it->second;
  }
  if (a < 0 && b < 0) return -n(rs, -a, -b);

  // mixed pair: rotate the zero-sum triple (a, b, c) so both pair members are
  // positive, using N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y); a global sign
  // flip negates N.
  SignedIndex c = -rs.signed_index(sum);
  long flip = 1;
  SignedIndex x = a, y = b, z = c;
  int positives = (x > 0) + (y > 0) + (z > 0);
  if (positives == 1) {
    x = -x;
    y = -y;
    z = -z;
    flip = -1;
  }
  auto len2 = [&](SignedIndex s) {
    const auto& r = rs.positive(std::abs(s) - 1);
    return rs.inner_coeffs(r.coeffs, r.coeffs);
  };
  Rat val;
  if (x > 0 && y > 0) {
    val = Rat(n(rs, x, y));
  } else if (y > 0 && z > 0) {
    val = Rat(n(rs, y, z)) * len2(z) / len2(x);
  } else {
    val = Rat(n(rs, z, x)) * len2(z) / len2(y);
  }
  val *= flip;
  if (!rat_is_integer(val))
    throw ConsistencyFailure("non-integral structure constant in sign propagation");
  return val.get_num().get_si();
}

ChevalleyConstants chevalley_constants(const RootSystem& rs) {
  ChevalleyConstants nc;

  // Positive roots come ordered by height then lexicographically; filling the
  // pairs of each sum root gamma in that order keeps every constant referenced
  // by the propagation formula already available (their sums are lower roots).
  for (int g = 0; g < rs.num_positive(); ++g) {
    const auto& gamma = rs.positive(g);
    if (gamma.height() == 1) continue;

    int alpha = -1, beta = -1;  // extraspecial pair of gamma
    std::vector<std::pair<int, int>> pairs;
    for (int d = 0; d < rs.num_positive(); ++d) {
      std::vector<int> rest = rootsys::coeff_sub(gamma.coeffs, rs.positive(d).coeffs);
      SignedIndex e = rs.signed_index(rest);
      if (e <= 0) continue;
      if (alpha < 0) {
        alpha = d;
        beta = e - 1;
      }
      if (d < e - 1) pairs.emplace_back(d, e - 1);
    }
    if (alpha < 0) throw InternalInvariantViolation("positive root with no decomposition");
    nc.extraspecial_pairs.emplace_back(alpha, beta);

    long base = ChevalleyConstants::string_down(rs, alpha, beta) + 1;
    nc.npos[{alpha, beta}] = base;
    nc.npos[{beta, alpha}] = -base;

    Rat glen = rs.inner_coeffs(gamma.coeffs, gamma.coeffs);
    for (auto [d, e] : pairs) {
      if ((d == alpha && e == beta) || (d == beta && e == alpha)) continue;
      const auto& delta = rs.positive(d);
      const auto& eps = rs.positive(e);
      SignedIndex sd = d + 1, sa = alpha + 1, sb = beta + 1;

      // Jacobi identity on (E_alpha, E_beta, E_{-delta}) combined with the
      // zero-sum rotation rule pins N(delta, eps) from lower constants.
      Rat acc = 0;
      std::vector<int> bd = rootsys::coeff_sub(rs.positive(beta).coeffs, delta.coeffs);
      if (rs.is_root(bd)) {
        SignedIndex sbd = rs.signed_index(bd);
        acc += Rat(nc.n(rs, sb, -sd)) * Rat(nc.n(rs, sbd, sa));
      }
      std::vector<int> ad = rootsys::coeff_sub(rs.positive(alpha).coeffs, delta.coeffs);
      if (rs.is_root(ad)) {
        SignedIndex sad = rs.signed_index(ad);
        acc += Rat(nc.n(rs, -sd, sa)) * Rat(nc.n(rs, sad, sb));
      }
      Rat elen = rs.inner_coeffs(eps.coeffs, eps.coeffs);
      Rat val = glen / (elen * Rat(nc.npos[{alpha, beta}])) * acc;
      if (!rat_is_integer(val))
        throw ConsistencyFailure("special-pair propagation produced a non-integer");
      long nv = val.get_num().get_si();
      long expect = ChevalleyConstants::string_down(rs, d, e) + 1;
      if (std::abs(nv) != expect)
        throw ConsistencyFailure("|N| != r+1 after propagation");
      nc.npos[{d, e}] = nv;
      nc.npos[{e, d}] = -nv;
    }

    if (std::abs(nc.npos[{alpha, beta}]) != ChevalleyConstants::string_down(rs, alpha, beta) + 1)
      throw ConsistencyFailure("|N| != r+1 on extraspecial pair");
  }
  return nc;
}

Rat CompactAlgebra::root_on_cartan(SignedIndex s, const RVec& y_cartan) const {
  int p = std::abs(s) - 1;
  Rat v = 0;
  for (int i = 0; i < rs.rank; ++i)
    if (y_cartan[size_t(i)] != 0) v += y_cartan[size_t(i)] * root_products.at(p, i);
  return s > 0 ? v : -v;
}

namespace {

// Solves kappa * t = rhs on the complex Cartan (coroot coordinates).
RVec cartan_solve(const lin::Mat& kappa, const RVec& rhs) {
  auto sol = lin::solve(kappa, rhs);
  if (!sol) throw InternalInvariantViolation("Cartan Killing matrix singular");
  return *sol;
}

}  // namespace

CompactAlgebra build_compact(const RootSystem& rs) {
  CompactAlgebra alg;
  alg.rs = rs;
  alg.nc = chevalley_constants(alg.rs);
  int rank = rs.rank;
  int npos = rs.num_positive();
  alg.dim = rank + 2 * npos;

  // Complex Cartan bookkeeping over the simple-coroot basis h_i:
  //   pairing[p][i] = <beta_p, alpha_i> = beta_p(h_i)
  std::vector<std::vector<long>> pairing(size_t(npos), std::vector<long>(size_t(rank), 0));
  for (int p = 0; p < npos; ++p)
    for (int i = 0; i < rank; ++i) {
      long v = 0;
      for (int j = 0; j < rank; ++j)
        v += rs.positive(p).coeffs[size_t(j)] * rs.cartan[size_t(j)][size_t(i)];
      pairing[size_t(p)][size_t(i)] = v;
    }

  // kappa(h_i, h_j) = sum over roots of beta(h_i) beta(h_j)
  lin::Mat kappa(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat s = 0;
      for (int p = 0; p < npos; ++p)
        s += Rat(2) * Rat(pairing[size_t(p)][size_t(i)]) * Rat(pairing[size_t(p)][size_t(j)]);
      kappa.at(i, j) = s;
    }

  // H_i = H_{alpha_i} over the coroot basis: kappa(H_i, h_j) = <alpha_i, alpha_j>
  std::vector<RVec> H(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    RVec rhs = zero_vec(rank);
    for (int j = 0; j < rank; ++j) rhs[size_t(j)] = Rat(rs.cartan[size_t(i)][size_t(j)]);
    H[size_t(i)] = cartan_solve(kappa, rhs);
  }
  lin::Mat Hmat(rank, rank);  // columns H_i
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < rank; ++k) Hmat.at(k, i) = H[size_t(i)][size_t(k)];

  // (beta_p, alpha_i) in Killing normalization = beta_p evaluated on H_i
  alg.root_products = lin::Mat(npos, rank);
  for (int p = 0; p < npos; ++p)
    for (int i = 0; i < rank; ++i) {
      Rat v = 0;
      for (int k = 0; k < rank; ++k)
        v += H[size_t(i)][size_t(k)] * Rat(pairing[size_t(p)][size_t(k)]);
      alg.root_products.at(p, i) = v;
    }

  // coroot of beta over simple coroots, then over the x basis via Hmat
  alg.coroot_x.resize(size_t(npos));
  for (int p = 0; p < npos; ++p) {
    const auto& beta = rs.positive(p);
    Rat blen = rs.inner_coeffs(beta.coeffs, beta.coeffs);
    RVec d = zero_vec(rank);
    for (int k = 0; k < rank; ++k) {
      Rat dk = Rat(beta.coeffs[size_t(k)]) * rs.gram.at(k, k) / blen;
      if (!rat_is_integer(dk))
        throw InternalInvariantViolation("coroot has non-integer coordinates");
      d[size_t(k)] = dk;
    }
    auto sol = lin::solve(Hmat, d);
    if (!sol) throw InternalInvariantViolation("H basis singular");
    alg.coroot_x[size_t(p)] = *sol;
  }

  // bracket table
  alg.table.assign(size_t(alg.dim), std::vector<SparseVec>(size_t(alg.dim)));
  auto set_bracket = [&](int u, int v, SparseVec sv) {
    sparse_normalize(sv);
    SparseVec neg;
    for (auto& [i, c] : sv) neg.emplace_back(i, -c);
    alg.table[size_t(u)][size_t(v)] = sv;
    alg.table[size_t(v)][size_t(u)] = std::move(neg);
  };

  for (int i = 0; i < rank; ++i)
    for (int p = 0; p < npos; ++p) {
      const Rat& c = alg.root_products.at(p, i);
      SparseVec ab, bb;
      sparse_add(ab, alg.b_index(p), c);
      sparse_add(bb, alg.a_index(p), -c);
      set_bracket(alg.cartan_index(i), alg.a_index(p), std::move(ab));
      set_bracket(alg.cartan_index(i), alg.b_index(p), std::move(bb));
    }

  for (int p = 0; p < npos; ++p) {
    SparseVec v;
    for (int k = 0; k < rank; ++k) sparse_add(v, k, 2 * alg.coroot_x[size_t(p)][size_t(k)]);
    set_bracket(alg.a_index(p), alg.b_index(p), std::move(v));
  }

  // [X_beta, X_gamma] for distinct positive roots, expanded through the
  // Chevalley constants: with s = beta+gamma, d = beta-gamma (when roots),
  //   [A_b, A_g] = N(b,g) A_s - N(b,-g) A_d
  //   [A_b, B_g] = N(b,g) B_s + N(b,-g) B_d
  //   [B_b, B_g] = -N(b,g) A_s - N(b,-g) A_d
  // where A_{-m} = -A_m and B_{-m} = B_m.
  auto a_term = [&](SparseVec& out, SignedIndex m, const Rat& c) {
    if (m == 0 || c == 0) return;
    sparse_add(out, alg.a_index(std::abs(m) - 1), m > 0 ? c : -c);
  };
  auto b_term = [&](SparseVec& out, SignedIndex m, const Rat& c) {
    if (m == 0 || c == 0) return;
    sparse_add(out, alg.b_index(std::abs(m) - 1), c);
  };
  for (int p = 0; p < npos; ++p)
    for (int q = p + 1; q < npos; ++q) {
      const auto& beta = rs.positive(p).coeffs;
      const auto& gamma = rs.positive(q).coeffs;
      SignedIndex s = rs.signed_index(rootsys::coeff_add(beta, gamma));
      SignedIndex d = rs.signed_index(rootsys::coeff_sub(beta, gamma));
      Rat n1 = s != 0 ? Rat(alg.nc.n(rs, p + 1, q + 1)) : Rat(0);
      Rat n2 = d != 0 ? Rat(alg.nc.n(rs, p + 1, -(q + 1))) : Rat(0);

      SparseVec aa, ab, ba, bb;
      a_term(aa, s, n1);
      a_term(aa, d, -n2);
      b_term(ab, s, n1);
      b_term(ab, d, n2);
      // [B_b, A_g] = -[A_g, B_b] = -(N(g,b) B_s + N(g,-b) B_{g-b})
      Rat m1 = s != 0 ? Rat(alg.nc.n(rs, q + 1, p + 1)) : Rat(0);
      Rat m2 = d != 0 ? Rat(alg.nc.n(rs, q + 1, -(p + 1))) : Rat(0);
      b_term(ba, s, -m1);
      b_term(ba, d, -m2);  // B_{g-b} = B_{b-g}
      a_term(bb, s, -n1);
      a_term(bb, d, -n2);

      set_bracket(alg.a_index(p), alg.a_index(q), std::move(aa));
      set_bracket(alg.a_index(p), alg.b_index(q), std::move(ab));
      set_bracket(alg.b_index(p), alg.a_index(q), std::move(ba));
      set_bracket(alg.b_index(p), alg.b_index(q), std::move(bb));
    }

  // negative Killing form as the exact trace form of the adjoint, negated
  alg.killing = lin::Mat(alg.dim, alg.dim);
  for (int u = 0; u < alg.dim; ++u)
    for (int v = u; v < alg.dim; ++v) {
      Rat tr = 0;
      for (int w = 0; w < alg.dim; ++w) {
        for (const auto& [x, c] : alg.table[size_t(v)][size_t(w)]) {
          for (const auto& [y, c2] : alg.table[size_t(u)][size_t(x)])
            if (y == w) tr += c * c2;
        }
      }
      alg.killing.at(u, v) = -tr;
      alg.killing.at(v, u) = alg.killing.at(u, v);
    }

  auto jac = jacobi_sweep(alg);
  if (jac.violations != 0)
    throw ConsistencyFailure("Jacobi sweep failed on " + std::to_string(jac.violations) +
                             " triples");
  return alg;
}

int SemisimpleAlgebra::factor_of(int u) const {
  for (int j = 0; j < num_factors(); ++j)
    if (u >= offsets[size_t(j)] && u < offsets[size_t(j) + 1]) return j;
  throw DimensionMismatch("basis index out of range");
}

SparseVec SemisimpleAlgebra::bracket_basis(int u, int v) const {
  int j = factor_of(u);
  if (factor_of(v) != j) return {};
  int off = offsets[size_t(j)];
  SparseVec out = factors[size_t(j)].bracket_basis(u - off, v - off);
  for (auto& [i, c] : out) i += off;
  return out;
}

RVec SemisimpleAlgebra::bracket(const RVec& x, const RVec& y) const {
  if (int(x.size()) != dim || int(y.size()) != dim)
    throw DimensionMismatch("bracket: vector size mismatch");
  RVec out = zero_vec(dim);
  for (int j = 0; j < num_factors(); ++j) {
    int off = offsets[size_t(j)];
    const auto& f = factors[size_t(j)];
    for (int u = 0; u < f.dim; ++u) {
      if (x[size_t(off + u)] == 0) continue;
      for (int v = 0; v < f.dim; ++v) {
        if (y[size_t(off + v)] == 0) continue;
        Rat c = x[size_t(off + u)] * y[size_t(off + v)];
        for (const auto& [w, s] : f.bracket_basis(u, v)) out[size_t(off + w)] += c * s;
      }
    }
  }
  return out;
}

Rat SemisimpleAlgebra::killing(int u, int v) const {
  int j = factor_of(u);
  if (factor_of(v) != j) return Rat(0);
  int off = offsets[size_t(j)];
  return factors[size_t(j)].killing.at(u - off, v - off);
}

Rat SemisimpleAlgebra::killing_form(const RVec& x, const RVec& y) const {
  if (int(x.size()) != dim || int(y.size()) != dim)
    throw DimensionMismatch("killing_form: vector size mismatch");
  Rat s = 0;
  for (int j = 0; j < num_factors(); ++j) {
    int off = offsets[size_t(j)];
    const auto& k = factors[size_t(j)].killing;
    for (int u = 0; u < factors[size_t(j)].dim; ++u) {
      if (x[size_t(off + u)] == 0) continue;
      for (int v = 0; v < factors[size_t(j)].dim; ++v)
        if (y[size_t(off + v)] != 0) s += x[size_t(off + u)] * y[size_t(off + v)] * k.at(u, v);
    }
  }
  return s;
}

RVec SemisimpleAlgebra::project(int j, const RVec& x) const {
  if (j < 0 || j >= num_factors()) throw BadFactorIndex("factor index out of range");
  if (int(x.size()) != dim) throw DimensionMismatch("project: vector size mismatch");
  RVec out = zero_vec(dim);
  for (int u = offsets[size_t(j)]; u < offsets[size_t(j) + 1]; ++u) out[size_t(u)] = x[size_t(u)];
  return out;
}

RVec SemisimpleAlgebra::embed(int j, const RVec& local) const {
  if (j < 0 || j >= num_factors()) throw BadFactorIndex("factor index out of range");
  if (int(local.size()) != factor_dim(j)) throw DimensionMismatch("embed: size mismatch");
  RVec out = zero_vec(dim);
  for (size_t u = 0; u < local.size(); ++u) out[size_t(offsets[size_t(j)]) + u] = local[u];
  return out;
}

SemisimpleAlgebra direct_sum(std::vector<CompactAlgebra> factors) {
  if (factors.empty()) throw Error("direct_sum of empty list");
  SemisimpleAlgebra alg;
  alg.offsets.push_back(0);
  for (auto& f : factors) {
    alg.offsets.push_back(alg.offsets.back() + f.dim);
    alg.factors.push_back(std::move(f));
  }
  alg.dim = alg.offsets.back();
  return alg;
}

RVec ad_action(const SemisimpleAlgebra& alg, const RVec& x, const RVec& y) {
  return alg.bracket(x, y);
}

SweepReport jacobi_sweep(const CompactAlgebra& alg) {
  int n = alg.dim;
  std::vector<std::pair<int, int>> uv;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) uv.emplace_back(u, v);
  std::vector<long> bad(uv.size(), 0);
  parallel_for(long(uv.size()), [&](long k) {
    auto [u, v] = uv[size_t(k)];
    for (int w = v + 1; w < n; ++w) {
      RVec acc = zero_vec(n);
      auto add_term = [&](int a, int b, int c) {
        for (const auto& [m, s] : alg.bracket_basis(a, b))
          for (const auto& [m2, s2] : alg.bracket_basis(m, c)) acc[size_t(m2)] += s * s2;
      };
      add_term(u, v, w);
      add_term(v, w, u);
      add_term(w, u, v);
      if (!is_zero_vec(acc)) bad[size_t(k)] += 1;
    }
  });
  SweepReport rep;
  long n3 = 0;
  for (auto b : bad) rep.violations += b;
  n3 = long(n) * (n - 1) * (n - 2) / 6;
  rep.checked = n3;
  return rep;
}

SweepReport killing_ad_invariance_sweep(const CompactAlgebra& alg) {
  int n = alg.dim;
  std::vector<long> bad(size_t(n), 0);
  parallel_for(long(n), [&](long uu) {
    int u = int(uu);
    for (int v = 0; v < n; ++v)
      for (int w = v; w < n; ++w) {
        Rat lhs = 0;
        for (const auto& [m, s] : alg.bracket_basis(u, v)) lhs += s * alg.killing.at(m, w);
        for (const auto& [m, s] : alg.bracket_basis(u, w)) lhs += s * alg.killing.at(v, m);
        if (lhs != 0) bad[size_t(u)] += 1;
      }
  });
  SweepReport rep;
  for (auto b : bad) rep.violations += b;
  rep.checked = long(n) * n * (n + 1) / 2;
  return rep;
}

nlohmann::ordered_json to_json(const CompactAlgebra& alg) {
  nlohmann::ordered_json j;
  j["root_system"] = rootsys::to_json(alg.rs);
  j["dim"] = alg.dim;
  nlohmann::ordered_json consts = nlohmann::ordered_json::array();
  for (const auto& [pq, n] : alg.nc.npos) {
    nlohmann::ordered_json e;
    e["pair"] = {pq.first, pq.second};
    e["n"] = n;
    consts.push_back(e);
  }
  j["chevalley_constants"] = consts;
  return j;
}

}  // namespace golab::chevalley
