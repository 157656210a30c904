#include "golab/linalg.hpp"

#include <algorithm>

#include "golab/errors.hpp"

namespace golab::lin {

Mat mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mul: inner dimensions differ");
  Mat r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b.at(k, j) != 0) r.at(i, j) += x * b.at(k, j);
    }
  return r;
}

RVec mul(const Mat& a, const RVec& x) {
  if (a.cols() != int(x.size())) throw DimensionMismatch("mul: size mismatch");
  RVec r = zero_vec(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0 && x[size_t(j)] != 0) r[size_t(i)] += a.at(i, j) * x[size_t(j)];
  return r;
}

Mat transpose(const Mat& a) {
  Mat r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

Mat from_rows(const std::vector<RVec>& rows, int cols) {
  Mat m(int(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (int(rows[r].size()) != cols) throw DimensionMismatch("from_rows: ragged input");
    m.set_row(int(r), rows[r]);
  }
  return m;
}

int rref(Mat& m, std::vector<int>* pivots) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

int rank(Mat m) { return rref(m); }

std::vector<RVec> kernel_basis(const Mat& m) {
  Mat e = m;
  std::vector<int> piv;
  int r = rref(e, &piv);
  std::vector<bool> is_piv(size_t(m.cols()), false);
  for (int c : piv) is_piv[size_t(c)] = true;
  std::vector<RVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_piv[size_t(c)]) continue;
    RVec v = zero_vec(m.cols());
    v[size_t(c)] = 1;
    for (int i = 0; i < r; ++i) v[size_t(piv[size_t(i)])] = -e.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVec> solve(const Mat& m, const RVec& b) {
  if (int(b.size()) != m.rows()) throw DimensionMismatch("solve: rhs size mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[size_t(i)];
  }
  std::vector<int> piv;
  rref(aug, &piv);
  for (int c : piv)
    if (c == m.cols()) return std::nullopt;
  RVec x = zero_vec(m.cols());
  for (size_t i = 0; i < piv.size(); ++i) x[size_t(piv[i])] = aug.at(int(i), m.cols());
  return x;
}

bool is_symmetric(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

bool is_positive_definite(const Mat& m) {
  if (!is_symmetric(m)) return false;
  Mat w = m;
  int n = w.rows();
  for (int k = 0; k < n; ++k) {
    if (w.at(k, k) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      if (w.at(i, k) == 0) continue;
      Rat f = w.at(i, k) / w.at(k, k);
      for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
    }
  }
  return true;
}

EchelonSolver::RowResult EchelonSolver::add_row(RVec coeffs, Rat rhs, long origin_tag) {
  if (int(coeffs.size()) != n_) throw DimensionMismatch("EchelonSolver: row width");
  for (auto& [piv, row] : rows_) {
    if (coeffs[size_t(piv)] == 0) continue;
    Rat f = coeffs[size_t(piv)];
    axpy(coeffs, -f, row.c);
    coeffs[size_t(piv)] = 0;  // exact by construction
    rhs -= f * row.rhs;
  }
  int piv = -1;
  for (int j = 0; j < n_; ++j)
    if (coeffs[size_t(j)] != 0) {
      piv = j;
      break;
    }
  if (piv < 0) {
    if (rhs != 0) {
      if (!infeasible_) {
        infeasible_ = true;
        infeasible_tag_ = origin_tag;
      }
      return RowResult::Infeasible;
    }
    return RowResult::Redundant;
  }
  Rat inv = 1 / coeffs[size_t(piv)];
  for (auto& x : coeffs) x *= inv;
  rhs *= inv;
  // keep reduced form: eliminate the new pivot from all stored rows
  for (auto& [p, row] : rows_) {
    Rat f = row.c[size_t(piv)];
    if (f == 0) continue;
    axpy(row.c, -f, coeffs);
    row.c[size_t(piv)] = 0;
    row.rhs -= f * rhs;
  }
  rows_.emplace(piv, Row{std::move(coeffs), std::move(rhs)});
  return RowResult::Added;
}

RVec EchelonSolver::particular_solution() const {
  if (infeasible_) throw InternalInvariantViolation("solution of infeasible system requested");
  RVec x = zero_vec(n_);
  // reduced form: each row reads  x[piv] + sum_{free} c_j x_j = rhs, free vars = 0
  for (const auto& [piv, row] : rows_) x[size_t(piv)] = row.rhs;
  return x;
}

std::vector<RVec> orthogonalize(const std::vector<RVec>& vecs,
                                const std::function<Rat(const RVec&, const RVec&)>& form) {
  std::vector<RVec> out;
  std::vector<Rat> norms;
  for (const auto& v : vecs) {
    RVec w = v;
    for (size_t i = 0; i < out.size(); ++i) {
      Rat c = form(w, out[i]) / norms[i];
      axpy(w, -c, out[i]);
    }
    Rat n = form(w, w);
    if (n <= 0) throw NotPositiveDefinite("orthogonalize: form not positive definite on span");
    norms.push_back(n);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace golab::lin
