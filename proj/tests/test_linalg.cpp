// Exact row reduction and affine solution sets.

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "immdec/errors.hpp"
#include "immdec/linalg.hpp"
#include "support/generators.hpp"

using namespace immdec;
using testsupport::Rng;

namespace {

RationalMatrix make(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

QVec qv(const std::vector<int>& v) {
  QVec out;
  for (int x : v) out.push_back(Rational(x));
  return out;
}

}  // namespace

TEST_CASE("rref of a rank-one matrix") {
  std::vector<int> pivots;
  const RationalMatrix r = rref(make({{2, 4}, {1, 2}}), &pivots);
  CHECK(r == make({{1, 2}, {0, 0}}));
  CHECK(pivots == std::vector<int>{0});
  CHECK(rank(make({{2, 4}, {1, 2}})) == 1);
}

TEST_CASE("rref fixes identity and kills zero") {
  CHECK(rref(RationalMatrix::identity(3)) == RationalMatrix::identity(3));
  CHECK(rref(RationalMatrix(2, 3)) == RationalMatrix(2, 3));
}

TEST_CASE("rref with fractional pivots") {
  RationalMatrix a(2, 2);
  a.at(0, 0) = Rational(1, 2);
  a.at(0, 1) = Rational(3);
  a.at(1, 0) = Rational(1, 3);
  a.at(1, 1) = Rational(1);
  // Determinant 1/2 - 1 = -1/2, so full rank.
  CHECK(rref(a) == RationalMatrix::identity(2));
}

TEST_CASE("rref is idempotent and preserves the row space") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int r = rng.uniform(1, 5), c = rng.uniform(1, 5);
    RationalMatrix a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a.at(i, j) = rng.rational(4);
    const RationalMatrix e = rref(a);
    CHECK(rref(e) == e);
    std::vector<QVec> arows, erows;
    for (int i = 0; i < r; ++i) {
      arows.push_back(a.row(i));
      erows.push_back(e.row(i));
    }
    CHECK(canonical_span_basis(arows, c) == canonical_span_basis(erows, c));
    CHECK(rank(a) <= std::min(r, c));
  }
}

TEST_CASE("solve_affine with an invertible matrix") {
  const auto s = solve_affine(RationalMatrix::identity(3), qv({1, 2, 3}));
  REQUIRE(!s.empty());
  CHECK(s.dim() == 0);
  CHECK(s.point() == qv({1, 2, 3}));
}

TEST_CASE("solve_affine parametrises a hyperplane") {
  const auto s = solve_affine(make({{1, 1}}), qv({0}));
  REQUIRE(!s.empty());
  CHECK(s.dim() == 1);
  // Canonical representative: free variables pinned to zero.
  CHECK(s.point() == qv({0, 0}));
  CHECK(s.contains(qv({1, -1})));
  CHECK(s.contains(qv({-7, 7})));
  CHECK(!s.contains(qv({1, 1})));
  CHECK(same_subspace(
      s, AffineSubspaceQ::from_point_and_directions(qv({2, -2}), {qv({-3, 3})})));

  const auto t = solve_affine(make({{1, 1}}), qv({3}));
  CHECK(t.point() == qv({3, 0}));
}

TEST_CASE("solve_affine detects inconsistency") {
  RationalMatrix a(2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  CHECK(solve_affine(a, qv({0, 1})).empty());
  CHECK(!solve_affine(a, qv({1, 1})).empty());
}

TEST_CASE("solve_affine ignores redundant rows") {
  const auto s = solve_affine(make({{1, 1}, {2, 2}}), qv({1, 2}));
  const auto t = solve_affine(make({{1, 1}}), qv({1}));
  CHECK(same_subspace(s, t));
}

TEST_CASE("solve_affine solutions verify against random witnesses") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = rng.uniform(1, 4), c = rng.uniform(1, 4);
    RationalMatrix a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) a.at(i, j) = rng.rational(3);
    QVec x0;
    for (int j = 0; j < c; ++j) x0.push_back(rng.rational(3));
    const QVec b = a.apply(x0);
    const auto s = solve_affine(a, b);
    REQUIRE(!s.empty());
    CHECK(s.contains(x0));
    CHECK(a.apply(s.point()) == b);
    for (const QVec& d : s.directions()) CHECK(is_zero_vec(a.apply(d)));
  }
}

TEST_CASE("affine subspaces validate their directions") {
  CHECK_THROWS_AS(AffineSubspaceQ::from_point_and_directions(
                      qv({0, 0}), {qv({1, 2}), qv({2, 4})}),
                  input_error);
  CHECK_THROWS_AS(AffineSubspaceQ::empty_space(2).point(), std::logic_error);
}

TEST_CASE("intersect_affine meets two lines in a point") {
  // x + y = 1 intersected with x - y = 1 is the point (1, 0).
  const auto s = solve_affine(make({{1, 1}}), qv({1}));
  const auto t = solve_affine(make({{1, -1}}), qv({1}));
  const auto meet = intersect_affine(s, t);
  REQUIRE(!meet.empty());
  CHECK(meet.dim() == 0);
  CHECK(meet.point() == qv({1, 0}));
  CHECK(same_subspace(meet, intersect_affine(t, s)));
}

TEST_CASE("intersect_affine of parallel lines is empty") {
  const auto s = solve_affine(make({{1, 1}}), qv({0}));
  const auto t = solve_affine(make({{1, 1}}), qv({1}));
  CHECK(intersect_affine(s, t).empty());
  CHECK(intersect_affine(AffineSubspaceQ::empty_space(2), s).empty());
}

TEST_CASE("intersect_affine with the full space changes nothing") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int c = rng.uniform(1, 4);
    RationalMatrix a(rng.uniform(1, 3), c);
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < c; ++j) a.at(i, j) = rng.rational(2);
    QVec b;
    for (int i = 0; i < a.rows(); ++i) b.push_back(rng.rational(2));
    const auto s = solve_affine(a, b);
    const auto full = AffineSubspaceQ::full_space(c);
    if (s.empty()) {
      CHECK(intersect_affine(s, full).empty());
    } else {
      CHECK(same_subspace(intersect_affine(s, full), s));
      CHECK(same_subspace(intersect_affine(full, s), s));
      // Every offset point stays inside.
      if (s.dim() > 0) {
        QVec coeffs;
        for (int i = 0; i < s.dim(); ++i) coeffs.push_back(rng.rational(2));
        CHECK(s.contains(s.offset_point(coeffs)));
      }
    }
  }
}

TEST_CASE("canonical_span_basis collapses dependent spans") {
  const auto b = canonical_span_basis({qv({2, 4}), qv({1, 2}), qv({0, 0})}, 2);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == qv({1, 2}));
  CHECK(canonical_span_basis({}, 3).empty());
}
