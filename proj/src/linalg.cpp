#include "immdec/linalg.hpp"

#include <utility>

#include "immdec/errors.hpp"

namespace immdec {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be nonnegative");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
            Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void RationalMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

QVec RationalMatrix::row(int i) const {
  QVec r(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) r[static_cast<std::size_t>(c)] = at(i, c);
  return r;
}

QVec RationalMatrix::apply(const QVec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw input_error("matrix-vector size mismatch");
  QVec y = zero_vec(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (int j = 0; j < cols_; ++j) acc += at(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

RationalMatrix rref(const RationalMatrix& a, std::vector<int>* pivot_cols) {
  RationalMatrix r = a;
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < r.cols() && pr < r.rows(); ++c) {
    int p = -1;
    for (int i = pr; i < r.rows(); ++i) {
      if (r.at(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    r.swap_rows(pr, p);
    const Rational lead = r.at(pr, c);
    for (int j = c; j < r.cols(); ++j) r.at(pr, j) /= lead;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == pr || r.at(i, c) == 0) continue;
      const Rational f = r.at(i, c);
      for (int j = c; j < r.cols(); ++j) r.at(i, j) -= f * r.at(pr, j);
    }
    pivots.push_back(c);
    ++pr;
  }
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return r;
}

int rank(const RationalMatrix& a) {
  std::vector<int> pivots;
  rref(a, &pivots);
  return static_cast<int>(pivots.size());
}

AffineSubspaceQ AffineSubspaceQ::empty_space(int ambient_dim) {
  AffineSubspaceQ s;
  s.ambient_dim_ = ambient_dim;
  s.empty_ = true;
  return s;
}

AffineSubspaceQ AffineSubspaceQ::full_space(int ambient_dim) {
  QVec p = zero_vec(ambient_dim);
  std::vector<QVec> dirs;
  for (int i = 0; i < ambient_dim; ++i) {
    QVec d = zero_vec(ambient_dim);
    d[static_cast<std::size_t>(i)] = 1;
    dirs.push_back(std::move(d));
  }
  return from_point_and_directions(std::move(p), std::move(dirs));
}

AffineSubspaceQ AffineSubspaceQ::single_point(QVec point) {
  return from_point_and_directions(std::move(point), {});
}

AffineSubspaceQ AffineSubspaceQ::from_point_and_directions(
    QVec point, std::vector<QVec> directions) {
  AffineSubspaceQ s;
  s.ambient_dim_ = static_cast<int>(point.size());
  s.empty_ = false;
  for (const auto& d : directions)
    if (static_cast<int>(d.size()) != s.ambient_dim_)
      throw input_error("direction vector has wrong ambient dimension");
  if (!directions.empty()) {
    RationalMatrix m(static_cast<int>(directions.size()), s.ambient_dim_);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = directions[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (rank(m) != static_cast<int>(directions.size()))
      throw input_error("direction vectors are linearly dependent");
  }
  s.point_ = std::move(point);
  s.directions_ = std::move(directions);
  return s;
}

const QVec& AffineSubspaceQ::point() const {
  if (empty_) throw std::logic_error("point() on empty affine subspace");
  return point_;
}

const std::vector<QVec>& AffineSubspaceQ::directions() const {
  if (empty_) throw std::logic_error("directions() on empty affine subspace");
  return directions_;
}

bool AffineSubspaceQ::contains(const QVec& x) const {
  if (static_cast<int>(x.size()) != ambient_dim_)
    throw input_error("membership test in wrong ambient dimension");
  if (empty_) return false;
  // Solve directions^T c = x - point.
  RationalMatrix m(ambient_dim_, static_cast<int>(directions_.size()));
  for (int i = 0; i < ambient_dim_; ++i)
    for (int j = 0; j < m.cols(); ++j)
      m.at(i, j) = directions_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  QVec rhs(static_cast<std::size_t>(ambient_dim_));
  for (int i = 0; i < ambient_dim_; ++i)
    rhs[static_cast<std::size_t>(i)] =
        x[static_cast<std::size_t>(i)] - point_[static_cast<std::size_t>(i)];
  return !solve_affine(m, rhs).empty();
}

QVec AffineSubspaceQ::offset_point(const QVec& coeffs) const {
  if (empty_) throw std::logic_error("offset_point() on empty affine subspace");
  if (coeffs.size() != directions_.size())
    throw input_error("coefficient count does not match direction count");
  QVec x = point_;
  for (std::size_t j = 0; j < directions_.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] += coeffs[j] * directions_[j][i];
  return x;
}

AffineSubspaceQ solve_affine(const RationalMatrix& a, const QVec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw input_error("right-hand side length does not match row count");
  const int n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivots;
  const RationalMatrix r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == n)
    return AffineSubspaceQ::empty_space(n);

  std::vector<int> pivot_row_of_col(static_cast<std::size_t>(n), -1);
  for (std::size_t t = 0; t < pivots.size(); ++t)
    pivot_row_of_col[static_cast<std::size_t>(pivots[t])] = static_cast<int>(t);

  QVec point = zero_vec(n);
  for (std::size_t t = 0; t < pivots.size(); ++t)
    point[static_cast<std::size_t>(pivots[t])] = r.at(static_cast<int>(t), n);

  std::vector<QVec> dirs;
  for (int f = 0; f < n; ++f) {
    if (pivot_row_of_col[static_cast<std::size_t>(f)] >= 0) continue;
    QVec d = zero_vec(n);
    d[static_cast<std::size_t>(f)] = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t)
      d[static_cast<std::size_t>(pivots[t])] = -r.at(static_cast<int>(t), f);
    dirs.push_back(std::move(d));
  }
  return AffineSubspaceQ::from_point_and_directions(std::move(point), std::move(dirs));
}

std::vector<QVec> canonical_span_basis(const std::vector<QVec>& vectors,
                                       int ambient_dim) {
  if (vectors.empty()) return {};
  RationalMatrix m(static_cast<int>(vectors.size()), ambient_dim);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(vectors[static_cast<std::size_t>(i)].size()) != ambient_dim)
      throw input_error("span vector has wrong ambient dimension");
    for (int j = 0; j < ambient_dim; ++j)
      m.at(i, j) = vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const RationalMatrix r = rref(m);
  std::vector<QVec> basis;
  for (int i = 0; i < r.rows(); ++i) {
    QVec row = r.row(i);
    if (!is_zero_vec(row)) basis.push_back(std::move(row));
  }
  return basis;
}

AffineSubspaceQ intersect_affine(const AffineSubspaceQ& s, const AffineSubspaceQ& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw input_error("intersection of subspaces in different ambient spaces");
  const int n = s.ambient_dim();
  if (s.empty() || t.empty()) return AffineSubspaceQ::empty_space(n);

  // Solve point_s + S c = point_t + T d, unknowns (c, d).
  const int ks = s.dim();
  const int kt = t.dim();
  RationalMatrix m(n, ks + kt);
  QVec rhs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < ks; ++j)
      m.at(i, j) = s.directions()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    for (int j = 0; j < kt; ++j)
      m.at(i, ks + j) =
          -t.directions()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    rhs[static_cast<std::size_t>(i)] =
        t.point()[static_cast<std::size_t>(i)] - s.point()[static_cast<std::size_t>(i)];
  }
  const AffineSubspaceQ sol = solve_affine(m, rhs);
  if (sol.empty()) return AffineSubspaceQ::empty_space(n);

  QVec c0(sol.point().begin(), sol.point().begin() + ks);
  QVec point = s.offset_point(c0);
  std::vector<QVec> candidates;
  for (const auto& k : sol.directions()) {
    QVec kc(k.begin(), k.begin() + ks);
    QVec dir = zero_vec(n);
    for (int j = 0; j < ks; ++j)
      for (int i = 0; i < n; ++i)
        dir[static_cast<std::size_t>(i)] +=
            kc[static_cast<std::size_t>(j)] *
            s.directions()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    if (!is_zero_vec(dir)) candidates.push_back(std::move(dir));
  }
  return AffineSubspaceQ::from_point_and_directions(std::move(point),
                                                    canonical_span_basis(candidates, n));
}

bool same_subspace(const AffineSubspaceQ& s, const AffineSubspaceQ& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw input_error("comparing subspaces in different ambient spaces");
  if (s.empty() || t.empty()) return s.empty() == t.empty();
  if (s.dim() != t.dim()) return false;
  if (!t.contains(s.point())) return false;
  for (const auto& d : s.directions()) {
    QVec x = s.point();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += d[i];
    if (!t.contains(x)) return false;
  }
  return true;
}

}  // namespace immdec
