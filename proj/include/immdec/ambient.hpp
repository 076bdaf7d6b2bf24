#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "immdec/cdga.hpp"
#include "immdec/linalg.hpp"
#include "immdec/rational.hpp"

namespace immdec {

/* A graded algebra carrier whose degree pieces are finite dimensional Q
 * vector spaces with chosen bases. Elements travel as coordinate vectors
 * tagged by degree. Two implementations: a degree-capped view of a FreeCDGA,
 * and FinitePresentation (cohomology given directly by basis, product table
 * and optional differential matrices). */
class Ambient {
 public:
  virtual ~Ambient() = default;

  // Highest degree with an enumerated basis.
  virtual int top_degree() const = 0;
  // True when every piece above top_degree() is genuinely zero (finite
  // presentations); false when the cap is only an enumeration bound.
  virtual bool vanishes_above_top() const = 0;

  virtual int dim(int k) const = 0;
  virtual std::string basis_label(int k, int i) const = 0;

  // Product of a (degree ka) and b (degree kb); result in degree ka + kb.
  virtual QVec mul(int ka, const QVec& a, int kb, const QVec& b) const = 0;
  // Differential of a (degree k); result in degree k + 1.
  virtual QVec diff(int k, const QVec& a) const = 0;

  bool zero_differential_through(int k) const;

  QVec zero(int k) const { return zero_vec(dim(k)); }
  QVec unit() const;

  RationalMatrix diff_matrix_at(int k) const;
  // Matrix of left multiplication by a (degree ka) from degree kb.
  RationalMatrix mul_matrix(int ka, const QVec& a, int kb) const;

  std::string describe(int k, const QVec& v) const;
};

// Degree k is enumerable when k <= top or the algebra vanishes there.
bool degree_enumerable(const Ambient& a, int k);
// dim with a loud error when the degree exceeds the enumeration cap.
int checked_dim(const Ambient& a, int k);

// Witness w with d(w) = v (degree k) when one exists; requires v closed.
std::optional<QVec> is_exact(const Ambient& a, int k, const QVec& v);

// Coordinate view of a FreeCDGA with bases enumerated through max_degree.
class FreeCdgaAmbient : public Ambient {
 public:
  FreeCdgaAmbient(const FreeCDGA& algebra, int max_degree);

  int top_degree() const override { return max_degree_; }
  bool vanishes_above_top() const override { return false; }
  int dim(int k) const override;
  std::string basis_label(int k, int i) const override;
  QVec mul(int ka, const QVec& a, int kb, const QVec& b) const override;
  QVec diff(int k, const QVec& a) const override;

  const FreeCDGA& algebra() const { return *algebra_; }
  const std::vector<Monomial>& basis(int k) const;
  Element to_element(int k, const QVec& v) const;
  QVec to_coords(const Element& e, int expected_degree) const;

 private:
  const FreeCDGA* algebra_;
  int max_degree_;
  std::vector<std::vector<Monomial>> bases_;  // degree 0..max_degree+1
};

// Finite graded algebra given by per-degree bases, a product table and
// optional differential matrices. Pieces above the top listed degree are
// zero. Validated on construction: unit, graded commutativity, associativity,
// d^2 = 0 and the Leibniz rule on basis pairs.
class FinitePresentation : public Ambient {
 public:
  struct ProductEntry {
    std::string left, right;
    QVec value;
  };
  struct Data {
    std::map<int, std::vector<std::string>> basis;  // positive degrees only
    std::string unit_name = "1";
    std::vector<ProductEntry> products;
    std::map<int, RationalMatrix> differential;  // source degree -> matrix
  };

  explicit FinitePresentation(Data data);

  int top_degree() const override { return top_; }
  bool vanishes_above_top() const override { return true; }
  int dim(int k) const override;
  std::string basis_label(int k, int i) const override;
  QVec mul(int ka, const QVec& a, int kb, const QVec& b) const override;
  QVec diff(int k, const QVec& a) const override;

  bool has_zero_differential() const { return zero_diff_; }
  int cohomology_dim(int k) const;
  // (degree, index) of a named basis element; throws input_error if unknown.
  std::pair<int, int> locate(const std::string& name) const;

  const Data& data() const { return data_; }

 private:
  int global_id(int degree, int index) const;

  Data data_;
  int top_ = 0;
  bool zero_diff_ = true;
  std::vector<int> dims_;                      // by degree 0..top
  std::vector<int> gid_offset_;                // by degree
  std::map<std::string, std::pair<int, int>> by_name_;
  std::map<std::pair<int, int>, QVec> table_;  // (gid_l <= gid_r) -> coords
  std::map<int, RationalMatrix> diffs_;
};

}  // namespace immdec
