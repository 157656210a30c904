#include "golab/rootsys.hpp"

#include <algorithm>

#include "golab/errors.hpp"

namespace golab::rootsys {

RootType root_type_from_string(const std::string& s) {
  if (s == "A" || s == "a") return RootType::A;
  if (s == "B" || s == "b") return RootType::B;
  if (s == "C" || s == "c") return RootType::C;
  if (s == "D" || s == "d") return RootType::D;
  if (s == "G" || s == "g" || s == "G2" || s == "g2") return RootType::G;
  throw ParseError("unknown root system type '" + s + "'");
}

std::string root_type_label(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::G: return "G";
  }
  throw InternalInvariantViolation("bad RootType");
}

std::vector<int> coeff_add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<int> coeff_sub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::vector<int> coeff_neg(const std::vector<int>& a) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

std::vector<int> RootSystem::coeffs_of(SignedIndex s) const {
  if (s == 0) throw InternalInvariantViolation("coeffs_of(0)");
  const auto& c = positive_roots[size_t(std::abs(s) - 1)].coeffs;
  return s > 0 ? c : coeff_neg(c);
}

Rat RootSystem::inner_coeffs(const std::vector<int>& a, const std::vector<int>& b) const {
  Rat s = 0;
  for (int i = 0; i < rank; ++i) {
    if (a[size_t(i)] == 0) continue;
    for (int j = 0; j < rank; ++j)
      if (b[size_t(j)] != 0) s += Rat(a[size_t(i)]) * Rat(b[size_t(j)]) * gram.at(i, j);
  }
  return s;
}

namespace {

std::vector<RVec> simple_ambients(RootType type, int rank) {
  auto e = [&](int dim, std::initializer_list<std::pair<int, int>> terms) {
    RVec v = zero_vec(dim);
    for (auto [idx, c] : terms) v[size_t(idx)] = c;
    return v;
  };
  std::vector<RVec> s;
  switch (type) {
    case RootType::A:
      if (rank < 1) throw InvalidRank("A_l needs rank >= 1");
      for (int i = 0; i < rank; ++i) s.push_back(e(rank + 1, {{i, 1}, {i + 1, -1}}));
      break;
    case RootType::B:
      if (rank < 2) throw InvalidRank("B_l needs rank >= 2 (B1 = A1)");
      for (int i = 0; i + 1 < rank; ++i) s.push_back(e(rank, {{i, 1}, {i + 1, -1}}));
      s.push_back(e(rank, {{rank - 1, 1}}));
      break;
    case RootType::C:
      if (rank < 2) throw InvalidRank("C_l needs rank >= 2 (C1 = A1)");
      for (int i = 0; i + 1 < rank; ++i) s.push_back(e(rank, {{i, 1}, {i + 1, -1}}));
      s.push_back(e(rank, {{rank - 1, 2}}));
      break;
    case RootType::D:
      if (rank < 4) throw InvalidRank("D_l needs rank >= 4 (D2 reducible, D3 = A3)");
      for (int i = 0; i + 1 < rank; ++i) s.push_back(e(rank, {{i, 1}, {i + 1, -1}}));
      s.push_back(e(rank, {{rank - 2, 1}, {rank - 1, 1}}));
      break;
    case RootType::G:
      if (rank != 2) throw InvalidRank("G has rank 2 only");
      s.push_back(e(3, {{0, 1}, {1, -1}}));
      s.push_back(e(3, {{0, -2}, {1, 1}, {2, 1}}));
      break;
  }
  return s;
}

long expected_root_count(RootType type, int rank) {
  switch (type) {
    case RootType::A: return long(rank) * (rank + 1);
    case RootType::B:
    case RootType::C: return 2L * rank * rank;
    case RootType::D: return 2L * rank * (rank - 1);
    case RootType::G: return 12;
  }
  return -1;
}

Rat dot(const RVec& a, const RVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// height ascending, then coefficient vector descending lexicographically,
// which lists alpha_1 before alpha_2 among simples
bool root_order(const Root& a, const Root& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs > b.coeffs;
}

void check_irreducible(const RootSystem& rs) {
  std::vector<int> comp(size_t(rs.rank), -1);
  std::vector<int> stack = {0};
  comp[0] = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < rs.rank; ++j)
      if (comp[size_t(j)] < 0 && rs.gram.at(i, j) != 0) {
        comp[size_t(j)] = 0;
        stack.push_back(j);
      }
  }
  for (int j = 0; j < rs.rank; ++j)
    if (comp[size_t(j)] < 0)
      throw InternalInvariantViolation("root system not irreducible");
}

}  // namespace

RootSystem build_root_system(RootType type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;

  auto amb = simple_ambients(type, rank);
  rs.gram = lin::Mat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.gram.at(i, j) = dot(amb[size_t(i)], amb[size_t(j)]);

  rs.cartan.assign(size_t(rank), std::vector<long>(size_t(rank), 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat c = 2 * rs.gram.at(i, j) / rs.gram.at(j, j);
      if (!rat_is_integer(c))
        throw InternalInvariantViolation("non-integral Cartan entry");
      rs.cartan[size_t(i)][size_t(j)] = c.get_num().get_si();
    }

  for (int i = 0; i < rank; ++i) {
    Root r;
    r.coeffs.assign(size_t(rank), 0);
    r.coeffs[size_t(i)] = 1;
    r.ambient = amb[size_t(i)];
    rs.simple_roots.push_back(r);
  }

  // Generate R+ from the Cartan matrix, heights nondecreasing: for a root a
  // and a simple alpha_i, the string bound q = r - <a, alpha_i> decides
  // whether a + alpha_i is a root; every root a - k alpha_i has smaller
  // height, so its membership is already recorded when a is processed.
  std::unordered_map<std::vector<int>, bool, CoeffHash> seen;
  std::vector<Root> queue = rs.simple_roots;
  for (const auto& r : queue) seen[r.coeffs] = true;
  for (size_t k = 0; k < queue.size(); ++k) {
    const Root a = queue[k];  // copy; queue may reallocate below
    for (int i = 0; i < rank; ++i) {
      long pairing = 0;
      for (int j = 0; j < rank; ++j)
        pairing += a.coeffs[size_t(j)] * rs.cartan[size_t(j)][size_t(i)];
      int r = 0;
      std::vector<int> down = a.coeffs;
      while (true) {
        down[size_t(i)] -= 1;
        if (seen.find(down) == seen.end()) break;
        ++r;
      }
      long q = r - pairing;
      if (q >= 1) {
        std::vector<int> up = a.coeffs;
        up[size_t(i)] += 1;
        if (seen.count(up)) continue;
        Root nr;
        nr.coeffs = up;
        nr.ambient = zero_vec(int(amb[0].size()));
        for (int j = 0; j < rank; ++j)
          axpy(nr.ambient, Rat(up[size_t(j)]), amb[size_t(j)]);
        seen[up] = true;
        queue.push_back(std::move(nr));
      }
    }
  }
  rs.positive_roots = std::move(queue);
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), root_order);

  for (int p = 0; p < rs.num_positive(); ++p) {
    rs.index[rs.positive_roots[size_t(p)].coeffs] = p + 1;
    rs.index[coeff_neg(rs.positive_roots[size_t(p)].coeffs)] = -(p + 1);
  }

  if (rs.num_roots() != expected_root_count(type, rank))
    throw InternalInvariantViolation("root count does not match the classical formula");
  check_irreducible(rs);
  return rs;
}

RootSystem build_root_system(const std::string& type, int rank) {
  return build_root_system(root_type_from_string(type), rank);
}

Rat inner(const RootSystem& rs, const Root& a, const Root& b) {
  return rs.inner_coeffs(a.coeffs, b.coeffs);
}

long cartan_int(const RootSystem& rs, const Root& a, const Root& b) {
  Rat c = 2 * inner(rs, a, b) / inner(rs, b, b);
  if (!rat_is_integer(c)) throw InternalInvariantViolation("non-integral <a,b>");
  return c.get_num().get_si();
}

std::pair<int, int> root_string(const RootSystem& rs, const Root& a, const Root& b) {
  if (a.coeffs == b.coeffs || a.coeffs == coeff_neg(b.coeffs))
    throw ProportionalRoots("root string undefined for proportional roots");
  if (!rs.is_root(a.coeffs) || !rs.is_root(b.coeffs))
    throw InternalInvariantViolation("root_string: arguments must be roots");
  int r = 0, q = 0;
  std::vector<int> v = coeff_sub(a.coeffs, b.coeffs);
  while (rs.is_root(v)) {
    ++r;
    v = coeff_sub(v, b.coeffs);
  }
  v = coeff_add(a.coeffs, b.coeffs);
  while (rs.is_root(v)) {
    ++q;
    v = coeff_add(v, b.coeffs);
  }
  if (long(r) - q != cartan_int(rs, a, b))
    throw InternalInvariantViolation("root string law r - q = <a,b> violated");
  return {r, q};
}

std::vector<int> reflect(const RootSystem& rs, const Root& a, const Root& b) {
  long c = cartan_int(rs, a, b);
  std::vector<int> r = a.coeffs;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= int(c) * b.coeffs[i];
  return r;
}

std::vector<int> decompose_to_simple_chain(const RootSystem& rs, const Root& a) {
  if (!rs.is_positive(a.coeffs))
    throw InternalInvariantViolation("chain decomposition needs a positive root");
  std::vector<int> chain;
  std::vector<int> cur = a.coeffs;
  while (true) {
    int h = 0;
    for (int c : cur) h += c;
    if (h == 1) {
      for (int i = 0; i < rs.rank; ++i)
        if (cur[size_t(i)] == 1) chain.push_back(i);
      break;
    }
    bool found = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (cur[size_t(i)] == 0) continue;
      std::vector<int> down = cur;
      down[size_t(i)] -= 1;
      if (rs.is_positive(down)) {
        chain.push_back(i);
        cur = down;
        found = true;
        break;
      }
    }
    if (!found)
      throw InternalInvariantViolation("no simple-root chain step; root system corrupt");
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

nlohmann::ordered_json to_json(const RootSystem& rs) {
  nlohmann::ordered_json j;
  j["type"] = root_type_label(rs.type);
  j["rank"] = rs.rank;
  auto amb_json = [](const RVec& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
  };
  j["simple_roots"] = nlohmann::ordered_json::array();
  for (const auto& r : rs.simple_roots) j["simple_roots"].push_back(amb_json(r.ambient));
  j["positive_roots"] = nlohmann::ordered_json::array();
  for (const auto& r : rs.positive_roots) j["positive_roots"].push_back(r.coeffs);
  j["cartan_matrix"] = rs.cartan;
  return j;
}

}  // namespace golab::rootsys
