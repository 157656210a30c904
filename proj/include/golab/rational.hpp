#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "golab/errors.hpp"

namespace golab {

/// Exact rational scalar. All core arithmetic is exact; no floating point.
using Rat = mpq_class;

using RVec = std::vector<Rat>;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline int rat_sign(const Rat& q) { return sgn(q); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

/// Canonical form: "n" when the denominator is 1, else "p/q" with q > 0 and
/// gcd(p, q) = 1. Used for every serialized rational in reports.
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p/q" or "n". Throws ParseError on malformed input.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::string t = s;
  for (char c : t) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
      throw ParseError("bad rational literal: '" + s + "'");
  }
  try {
    Rat q(t);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: '" + s + "'");
  }
}

inline RVec zero_vec(int n) { return RVec(static_cast<size_t>(n), Rat(0)); }

inline bool is_zero_vec(const RVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline RVec add_vec(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector size mismatch");
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RVec sub_vec(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector size mismatch");
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RVec scale_vec(const Rat& c, const RVec& a) {
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline void axpy(RVec& y, const Rat& c, const RVec& x) {
  if (y.size() != x.size()) throw DimensionMismatch("vector size mismatch");
  if (c == 0) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] += c * x[i];
}

}  // namespace golab
