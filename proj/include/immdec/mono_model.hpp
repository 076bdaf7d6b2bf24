#pragma once

#include <string>
#include <vector>

#include "immdec/cdga.hpp"
#include "immdec/lift.hpp"

namespace immdec {

enum class DifferentialMode { dual_class, paper_literal };

// "dual-class" / "paper-literal", as used in reports and verdicts.
std::string mode_name(DifferentialMode mode);

/* Generator inventory of the relative model attached to a pair (m, n) with
 * n - m odd: base generators alpha_i (degree 4i), beta_j (degree 4j) and one
 * Euler generator (degree n when n is even, degree m when m is even; the
 * parity constraint means exactly one of the two occurs), fiber generators
 * gamma_k (degree 4k - 1) and sigma (degree n - 1, n even only). */
struct MonoLayout {
  int m = 0;
  int n = 0;
  int alpha_count = 0;
  int beta_count = 0;
  int euler_degree = 0;            // n or m, whichever is even
  int gamma_lo = 0, gamma_hi = 0;  // index range of gamma_k; empty when lo > hi
  bool has_sigma = false;

  int gamma_count() const { return gamma_hi >= gamma_lo ? gamma_hi - gamma_lo + 1 : 0; }
};

// scope_error when m < 1, n <= m, n - m is even, or n < 3 (the last case
// would force a fiber generator below degree 2).
MonoLayout mono_layout(int m, int n);

/* Degree-4k term of the series quotient
 *   (1 + alpha_1 + alpha_2 + ...) / (1 + beta_1 + beta_2 + ...),
 * by the recursion pbar_k = alpha_k - sum_{i+j=k, i>=1} beta_i * pbar_j with
 * pbar_0 = 1. Entries past the end of either list count as zero. */
Element dual_class(int k, const std::vector<Element>& alphas,
                   const std::vector<Element>& betas);

/* The relative model for (m, n). Base differential is zero; the fiber
 * differential sends gamma_k to the dual class pbar_k (default mode) or to
 * its linear part with the opposite sign, beta_k - alpha_k for k <= (m-1)/2
 * and alpha_k beyond (paper-literal mode); sigma goes to the Euler
 * generator. In the dual-class recursion the beta list is extended by the
 * square of the degree-m Euler generator in slot m/2 when m is even. */
RelativeModel build_mono_model(int m, int n, DifferentialMode mode);

// Degrees in which the lifting equations meet their obstructions: 4k for
// each gamma_k, plus n when n is even. Sorted, deduplicated.
std::vector<int> obstruction_degrees(int m, int n);

}  // namespace immdec
