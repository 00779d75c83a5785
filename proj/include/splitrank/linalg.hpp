#pragma once

#include <Eigen/Core>

#include <numeric>
#include <vector>

#include "splitrank/rational.hpp"

namespace splitrank {

/// Incrementally maintained integer row space with exact membership tests.
/// Rows are kept in echelon form over Z; reduction uses cross-multiplication
/// (fraction-free) followed by a gcd normalization, so no entry ever leaves
/// the integers.
class IntRowSpan {
 public:
  IntRowSpan() = default;
  explicit IntRowSpan(Eigen::Index cols) : cols_(cols) {}

  Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

  /// Reduces v against the stored echelon rows. Returns the residue (zero
  /// vector iff v lies in the span).
  IntVec reduce(IntVec v) const {
    for (const auto& row : rows_) {
      Eigen::Index p = pivot_of(row);
      if (v[p] == 0) continue;
      IntScalar a = row[p], b = v[p];
      v = a * v - b * row;
      gcd_normalize(v);
    }
    return v;
  }

  bool contains(const IntVec& v) const { return reduce(v).isZero(); }

  /// Inserts v; returns true when the rank grew.
  bool insert(const IntVec& v) {
    IntVec res = reduce(v);
    if (res.isZero()) return false;
    gcd_normalize(res);
    rows_.push_back(std::move(res));
    // keep rows sorted by pivot so reduce() sweeps each pivot once
    for (std::size_t i = rows_.size(); i > 1; --i) {
      if (pivot_of(rows_[i - 1]) < pivot_of(rows_[i - 2]))
        std::swap(rows_[i - 1], rows_[i - 2]);
      else
        break;
    }
    back_substitute();
    return true;
  }

 private:
  static Eigen::Index pivot_of(const IntVec& row) {
    for (Eigen::Index i = 0; i < row.size(); ++i)
      if (row[i] != 0) return i;
    return row.size();
  }

  static void gcd_normalize(IntVec& v) {
    IntScalar g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v[i] < 0 ? -v[i] : v[i]);
    if (g > 1)
      for (Eigen::Index i = 0; i < v.size(); ++i) v[i] /= g;
    Eigen::Index p = pivot_of(v);
    if (p < v.size() && v[p] < 0) v = -v;
  }

  void back_substitute() {
    for (std::size_t i = rows_.size(); i > 0; --i) {
      Eigen::Index p = pivot_of(rows_[i - 1]);
      for (std::size_t j = 0; j + 1 < i; ++j) {
        if (rows_[j][p] == 0) continue;
        rows_[j] = rows_[i - 1][p] * rows_[j] - rows_[j][p] * rows_[i - 1];
        gcd_normalize(rows_[j]);
      }
    }
  }

  Eigen::Index cols_ = 0;
  std::vector<IntVec> rows_;
};

/// Rank of the row space of an integer matrix expression, computed exactly.
template <typename Derived>
Eigen::Index row_space_rank(const Eigen::MatrixBase<Derived>& m) {
  IntRowSpan span(m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) span.insert(m.row(r).transpose());
  return span.rank();
}

/// Rank of a rational matrix via plain Gaussian elimination over Q.
inline Eigen::Index rational_rank(RatMat m) {
  Eigen::Index rank = 0;
  Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (!m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (m(r, c).is_zero()) continue;
      Rational f = m(r, c) / m(rank, c);
      for (Eigen::Index k = c; k < cols; ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace splitrank
