#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "immdec/ambient.hpp"
#include "immdec/cdga.hpp"
#include "immdec/linalg.hpp"
#include "immdec/morphism.hpp"

namespace immdec {

// Element of an ambient carrier as a degree-tagged coordinate vector.
struct GradedVec {
  int degree = 0;
  QVec coords;
};

/* System of equations d(x_i) = a_i + sum_j a^i_j x_j with x_i ranging over
 * the degree-n_i piece of the ambient. Solving rewrites it as the single
 * affine equation (D - T) v = C over the concatenated coordinate space and
 * row-reduces exactly; the solution set is empty or an affine subspace. */
struct LinearDgaSystem {
  const Ambient* ambient = nullptr;
  std::vector<int> degrees;              // n_i, sorted ascending, each >= 2
  std::vector<GradedVec> constants;      // a_i, degree n_i + 1
  // coeffs[i][j] = a^i_j of degree n_i + 1 - n_j; disengaged means zero.
  std::vector<std::vector<std::optional<GradedVec>>> coeffs;
};

AffineSubspaceQ solve_linear_dga_system(const LinearDgaSystem& s);

/* Relative model: base CDGA tensor a free algebra on fiber generators, with
 * a differential that is affine-linear in the fiber generators through the
 * stated degree (d w = m + sum m_l w_l, coefficients from the base). */
class RelativeModel {
 public:
  RelativeModel(FreeCDGA base, std::vector<Generator> fiber_gens,
                std::map<std::string, Element> fiber_diffs /* over total gens */,
                int linear_through);

  const FreeCDGA& base() const { return base_; }
  const FreeCDGA& total() const { return total_; }
  int linear_through() const { return linear_through_; }

  int fiber_count() const { return static_cast<int>(fiber_.size()); }
  const Generator& fiber_gen(int i) const { return fiber_[static_cast<std::size_t>(i)]; }
  int total_index_of_fiber(int i) const { return base_.generators().size() + i; }
  const Element& fiber_diff_of(int i) const;  // element of the total algebra

  struct LinearParts {
    bool linear = true;
    Element constant;                          // base element, degree |w|+1
    std::vector<std::pair<int, Element>> cross;  // (fiber index, base coefficient)
    LinearParts(const GenSetPtr& base_gens) : constant(base_gens) {}
  };
  // Splits d(w_i) into base-constant and fiber-linear parts; linear = false
  // when a monomial involves two or more fiber letters.
  LinearParts linear_parts(int fiber_index) const;

  // Re-express a fiber-free element of the total algebra over the base set.
  Element to_base_element(const Element& total_elem) const;
  // Embed a base element into the total algebra.
  Element to_total_element(const Element& base_elem) const;

 private:
  FreeCDGA base_;
  std::vector<Generator> fiber_;
  FreeCDGA total_;
  int linear_through_;
};

struct LiftObstruction {
  std::string generator;      // fiber generator name
  int generator_degree = 0;
  int obstruction_degree = 0; // generator degree + 1
  QVec class_coords;          // image of the constant part in the carrier
  bool exact = false;
  std::optional<QVec> witness;  // degree generator_degree, when exact
};

struct LiftVerdict {
  bool exists = false;
  // (fiber generator name, image coordinates); filled when exists.
  std::vector<std::pair<std::string, QVec>> witness;
  // Per-generator certificates; filled when the fiber differentials carry no
  // cross terms and no constraint triple is present.
  std::vector<LiftObstruction> obstructions;
  std::string failure;  // diagnostic when exists is false
};

/* Decides whether the identity of the base extends to a dga map of the whole
 * relative model into mx, optionally constrained to agree with f_star after
 * composing with i_star (all three of ma / f_star / i_star or none).
 * Fiber generators above max_degree are left unconstrained; when exists, the
 * returned witness is re-validated against the defining equations before it
 * is handed back. */
LiftVerdict decide_dga_lift(const RelativeModel& r, const Ambient& mx,
                            const CdgaMorphism& phi, const Ambient* ma,
                            const CdgaMorphism* f_star, const AlgebraMap* i_star,
                            int max_degree);

}  // namespace immdec
