#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "golab/rational.hpp"

namespace golab::lin {

/// Dense rational matrix, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  RVec row(int r) const {
    return RVec(a_.begin() + size_t(r) * cols_, a_.begin() + size_t(r + 1) * cols_);
  }
  RVec col(int c) const {
    RVec v(rows_);
    for (int r = 0; r < rows_; ++r) v[size_t(r)] = at(r, c);
    return v;
  }
  void set_row(int r, const RVec& v) {
    for (int c = 0; c < cols_; ++c) at(r, c) = v[size_t(c)];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

Mat mul(const Mat& a, const Mat& b);
RVec mul(const Mat& a, const RVec& x);
Mat transpose(const Mat& a);
Mat from_rows(const std::vector<RVec>& rows, int cols);

/// Reduces to reduced row-echelon form in place; returns rank.
/// Pivot column indices are appended to *pivots when non-null.
int rref(Mat& m, std::vector<int>* pivots = nullptr);

int rank(Mat m);

/// Basis of the right kernel {x : m x = 0}, one vector per row of the result,
/// in reduced echelon order (deterministic).
std::vector<RVec> kernel_basis(const Mat& m);

/// Any solution of m x = b, or nullopt when inconsistent.
std::optional<RVec> solve(const Mat& m, const RVec& b);

bool is_symmetric(const Mat& m);

/// Exact SPD test for a symmetric matrix (all elimination pivots positive).
bool is_positive_definite(const Mat& m);

/// Incremental exact feasibility solver for a sparse-ish linear system kept in
/// reduced echelon form. Rows carry an origin tag so infeasibility can be
/// traced back to the equation that caused it.
class EchelonSolver {
 public:
  explicit EchelonSolver(int n_unknowns) : n_(n_unknowns) {}

  enum class RowResult { Redundant, Added, Infeasible };

  RowResult add_row(RVec coeffs, Rat rhs, long origin_tag = -1);

  bool infeasible() const { return infeasible_; }
  long infeasible_tag() const { return infeasible_tag_; }
  int rank() const { return int(rows_.size()); }
  int unknowns() const { return n_; }

  /// Particular solution with all free variables set to zero.
  /// Must not be called when infeasible.
  RVec particular_solution() const;

 private:
  struct Row {
    RVec c;
    Rat rhs;
  };
  int n_;
  std::map<int, Row> rows_;  // keyed by pivot column
  bool infeasible_ = false;
  long infeasible_tag_ = -1;
};

/// B-orthogonalizes a list of vectors with respect to the exact symmetric
/// bilinear form `form` (Gram-Schmidt without normalization). The input must
/// be linearly independent and the form positive definite on its span.
std::vector<RVec> orthogonalize(const std::vector<RVec>& vecs,
                                const std::function<Rat(const RVec&, const RVec&)>& form);

}  // namespace golab::lin
