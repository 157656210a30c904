#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "golab/linalg.hpp"
#include "golab/rational.hpp"

#include "json.hpp"

namespace golab::rootsys {

enum class RootType { A, B, C, D, G };

RootType root_type_from_string(const std::string& s);
std::string root_type_label(RootType t);

/// A root stored as integer coefficients over the simple basis together with
/// its rational coordinates in the standard Euclidean model of the type.
struct Root {
  std::vector<int> coeffs;
  RVec ambient;

  int height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
  }
};

/// Signed reference into the positive-root list: +(p+1) for positive_roots[p],
/// -(p+1) for its negative, 0 for "not a root".
using SignedIndex = int;

struct CoeffHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int c : v) {
      h ^= size_t(c) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Irreducible root system of type A_l, B_l, C_l, D_l or G_2.
///
/// The Euclidean model normalization is used throughout this module; the
/// Killing normalization (a fixed positive multiple of it per system) lives in
/// the algebra layer. Positive roots are ordered by height, then by descending
/// lexicographic coefficient vector, so alpha_1 < alpha_2 < ... among simples.
struct RootSystem {
  RootType type;
  int rank = 0;
  std::vector<Root> simple_roots;
  std::vector<Root> positive_roots;
  lin::Mat gram;                          // (alpha_i, alpha_j)
  std::vector<std::vector<long>> cartan;  // <alpha_i, alpha_j>

  std::unordered_map<std::vector<int>, SignedIndex, CoeffHash> index;

  int num_positive() const { return int(positive_roots.size()); }
  int num_roots() const { return 2 * num_positive(); }

  SignedIndex signed_index(const std::vector<int>& coeffs) const {
    auto it = index.find(coeffs);
    return it == index.end() ? 0 : it->second;
  }
  bool is_root(const std::vector<int>& coeffs) const { return signed_index(coeffs) != 0; }
  bool is_positive(const std::vector<int>& coeffs) const { return signed_index(coeffs) > 0; }

  const Root& positive(int p) const { return positive_roots[size_t(p)]; }

  /// Coefficient vector of a signed root reference.
  std::vector<int> coeffs_of(SignedIndex s) const;

  /// Euclidean product extended bilinearly to coefficient vectors.
  Rat inner_coeffs(const std::vector<int>& a, const std::vector<int>& b) const;
};

std::vector<int> coeff_add(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> coeff_sub(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> coeff_neg(const std::vector<int>& a);

/// Builds the root system. Valid ranks: A >= 1, B >= 2, C >= 2, D >= 4, G = 2.
/// Throws InvalidRank otherwise.
RootSystem build_root_system(RootType type, int rank);
RootSystem build_root_system(const std::string& type, int rank);

Rat inner(const RootSystem& rs, const Root& a, const Root& b);

/// The integer <a,b> = 2(a,b)/(b,b).
long cartan_int(const RootSystem& rs, const Root& a, const Root& b);

/// Root string of a through b: r = max{k >= 0 : a - k b in R},
/// q = max{k >= 0 : a + k b in R}. Throws ProportionalRoots when a = +-b.
std::pair<int, int> root_string(const RootSystem& rs, const Root& a, const Root& b);

/// Weyl reflection s_b(a) = a - <a,b> b as a coefficient vector.
std::vector<int> reflect(const RootSystem& rs, const Root& a, const Root& b);

/// Writes a positive root a as an ordered list of simple-root indices
/// (0-based) whose partial sums are all roots.
std::vector<int> decompose_to_simple_chain(const RootSystem& rs, const Root& a);

nlohmann::ordered_json to_json(const RootSystem& rs);

}  // namespace golab::rootsys
