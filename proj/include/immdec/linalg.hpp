#pragma once

#include <vector>

#include "immdec/rational.hpp"

namespace immdec {

// Dense matrix over Q, row-major. Desk-scale sizes; no pivoting heuristics
// beyond first-nonzero (exact arithmetic needs none).
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  void swap_rows(int i, int j);
  QVec row(int i) const;
  QVec apply(const QVec& x) const;  // matrix * column vector

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Reduced row echelon form (unique). pivot_cols, when non-null, receives the
// pivot column indices in row order.
RationalMatrix rref(const RationalMatrix& a, std::vector<int>* pivot_cols = nullptr);

int rank(const RationalMatrix& a);

// Affine subspace of Q^n: either empty or point + span(directions) with the
// directions linearly independent (validated on construction).
class AffineSubspaceQ {
 public:
  static AffineSubspaceQ empty_space(int ambient_dim);
  static AffineSubspaceQ full_space(int ambient_dim);
  static AffineSubspaceQ single_point(QVec point);
  static AffineSubspaceQ from_point_and_directions(QVec point,
                                                   std::vector<QVec> directions);

  int ambient_dim() const { return ambient_dim_; }
  bool empty() const { return empty_; }
  // Dimension as an affine space; -1 when empty.
  int dim() const { return empty_ ? -1 : static_cast<int>(directions_.size()); }

  const QVec& point() const;
  const std::vector<QVec>& directions() const;

  bool contains(const QVec& x) const;
  // point + sum coeffs[i] * directions[i]; coeffs.size() must equal dim().
  QVec offset_point(const QVec& coeffs) const;

 private:
  AffineSubspaceQ() = default;
  int ambient_dim_ = 0;
  bool empty_ = true;
  QVec point_;
  std::vector<QVec> directions_;
};

// Solution set of A x = b in canonical form: particular solution with free
// variables set to 0, kernel basis with one vector per free column.
AffineSubspaceQ solve_affine(const RationalMatrix& a, const QVec& b);

AffineSubspaceQ intersect_affine(const AffineSubspaceQ& s, const AffineSubspaceQ& t);

// Set equality (representation-independent).
bool same_subspace(const AffineSubspaceQ& s, const AffineSubspaceQ& t);

// Canonical basis (rref rows) of the span of the given vectors.
std::vector<QVec> canonical_span_basis(const std::vector<QVec>& vectors,
                                       int ambient_dim);

}  // namespace immdec
