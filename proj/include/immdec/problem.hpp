#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "immdec/ambient.hpp"
#include "immdec/lift.hpp"
#include "immdec/mono_model.hpp"
#include "immdec/morphism.hpp"
#include "immdec/serialize.hpp"

namespace immdec {

/* Characteristic-class input for the immersion decision: dimensions, a
 * finite carrier for the rational cohomology of the source manifold, and
 * the class vectors in that carrier's bases. */
struct ImmersionProblem {
  int m = 0;
  int n = 0;
  // Exactly one of the two carriers is set.
  std::shared_ptr<const FinitePresentation> presentation;
  std::optional<FreeCDGA> model;

  std::map<int, QVec> tangent_pontrjagin;   // degree 4j -> p_j of the source
  std::map<int, QVec> pullback_pontrjagin;  // degree 4i -> pulled-back p_i
  std::optional<QVec> pullback_euler;       // degree n (n even)
  std::optional<QVec> euler_tangent;        // degree m (m even)

  int carrier_dim(int k) const;
};

/* Parses and fully validates a problem document: dimensions in scope,
 * carrier well formed, trivial cohomology in degree 1 and above m, class
 * degrees legal for (m, n), vectors of the right length and closed. Throws
 * input_error or scope_error with a diagnostic naming the violated rule. */
ImmersionProblem parse_problem(const std::string& text);

// Degree-capped coordinate view of the carrier. The view may keep a
// reference into p; p must outlive it.
std::shared_ptr<const Ambient> carrier_view(const ImmersionProblem& p,
                                            int max_degree);

/* Images of the base generators: alpha_i from pullback_pontrjagin, beta_j
 * from tangent_pontrjagin, the Euler generator from pullback_euler (n even)
 * or euler_tangent (m even). A missing class is an input error naming the
 * generator when its degree piece is nonzero, and the zero vector
 * otherwise. */
CdgaMorphism assemble_phi(const ImmersionProblem& p, const RelativeModel& r,
                          const Ambient& carrier);

struct ObstructionReport {
  std::string name;  // fiber generator
  int degree = 0;    // degree of the obstruction class
  QVec class_coords;
  bool exact = false;
  std::optional<QVec> witness;  // one degree down, present iff exact
};

struct Verdict {
  bool immersible = false;
  DifferentialMode mode = DifferentialMode::dual_class;
  std::vector<ObstructionReport> obstructions;  // ordered by degree
};

// The enumeration cap decide_immersion uses: the requested cap (default
// m + 1), raised to one past the highest fiber generator degree so that
// every obstruction is computed, and to every base generator degree so the
// comparison morphism stays checkable.
int decision_cutoff(const RelativeModel& r, int m, std::optional<int> max_degree);

/* End-to-end decision: build the model for (m, n), assemble the morphism,
 * decide the lift. max_degree raises the enumeration cap when given; see
 * decision_cutoff. */
Verdict decide_immersion(const ImmersionProblem& p, DifferentialMode mode,
                         std::optional<int> max_degree);

// Text report: one row per fiber generator with its obstruction class
// rendered in the carrier's basis, and the witness when exact.
std::string explain(const Verdict& v, const Ambient& carrier);

// {"format_version": 1, "immersible", "mode", "obstructions": [{"name",
//  "degree", "class", "exact", "witness"}]}; rationals as "p/q" strings.
Json verdict_to_json(const Verdict& v);

}  // namespace immdec
