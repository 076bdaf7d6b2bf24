#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "immdec/linalg.hpp"
#include "immdec/rational.hpp"

namespace immdec {

struct Generator {
  std::string name;
  int degree = 0;
  bool operator==(const Generator&) const = default;
};

// Ordered set of generators for a free graded-commutative algebra over Q.
// Degrees >= 2 only (simply connected models); names are unique identifiers.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& operator[](int i) const { return gens_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& name) const;  // -1 when absent
  bool operator==(const GeneratorSet& o) const { return gens_ == o.gens_; }

 private:
  std::vector<Generator> gens_;
};

using GenSetPtr = std::shared_ptr<const GeneratorSet>;

GenSetPtr make_generator_set(std::vector<Generator> gens);

// Exponent vector over a GeneratorSet. Odd-degree generators may only carry
// exponent 0 or 1; arithmetic enforces this.
struct Monomial {
  std::vector<std::uint32_t> exps;
  bool operator==(const Monomial&) const = default;
};

// Canonical order: lexicographically decreasing exponent vectors, so for
// x, y of degree 2 the degree-4 basis reads x^2, x y, y^2.
struct MonomialLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exps > b.exps; }
};

int monomial_degree(const GeneratorSet& gens, const Monomial& m);
std::string monomial_to_string(const GeneratorSet& gens, const Monomial& m);

// Q-linear combination of monomials over a fixed generator set. Zero
// coefficients are never stored.
class Element {
 public:
  explicit Element(GenSetPtr gens);
  static Element zero(GenSetPtr gens) { return Element(std::move(gens)); }
  static Element unit(GenSetPtr gens, const Rational& c = Rational(1));
  static Element generator(GenSetPtr gens, int index);
  static Element from_monomial(GenSetPtr gens, Monomial m, const Rational& c);

  const GeneratorSet& gens() const { return *gens_; }
  const GenSetPtr& gens_ptr() const { return gens_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<Monomial, Rational, MonomialLexGreater>& terms() const { return terms_; }

  // Degree when every monomial has the same one; nullopt for 0 and for
  // inhomogeneous elements.
  std::optional<int> homogeneous_degree() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element scaled(const Rational& c) const;
  bool operator==(const Element& o) const;

  void add_term(const Monomial& m, const Rational& c);

  std::string to_string() const;

 private:
  GenSetPtr gens_;
  std::map<Monomial, Rational, MonomialLexGreater> terms_;
};

// Graded-commutative product with Koszul signs: moving an odd-degree letter
// of b past each later-indexed odd letter of a contributes a factor -1, and
// the square of any odd letter is 0.
Element mul(const Element& a, const Element& b);

// All monomials of the given total degree, in canonical order. Degree 0
// yields the unit monomial; negative degrees yield nothing.
std::vector<Monomial> basis_of_degree(const GeneratorSet& gens, int k);

// Coordinates of a homogeneous element in the canonical degree basis.
QVec coordinates(const Element& a, const std::vector<Monomial>& basis);
Element element_from_coordinates(const GenSetPtr& gens,
                                 const std::vector<Monomial>& basis, const QVec& v);

// Free CDGA: generator set plus a degree +1 differential given on
// generators and extended by the graded Leibniz rule. Construction checks
// the degree of every image and d(d(g)) = 0.
class FreeCDGA {
 public:
  FreeCDGA(GenSetPtr gens, std::vector<Element> gen_diffs);

  const GeneratorSet& generators() const { return *gens_; }
  const GenSetPtr& generators_ptr() const { return gens_; }
  const Element& diff_of_generator(int index) const {
    return diffs_[static_cast<std::size_t>(index)];
  }
  bool has_zero_differential() const;

  Element apply_diff(const Element& a) const;

 private:
  GenSetPtr gens_;
  std::vector<Element> diffs_;
};

// Matrix of d from degree k to degree k+1 in canonical bases.
RationalMatrix diff_matrix(const FreeCDGA& a, int k);

// Kernel of d in degree k as a linear subspace (point 0) in coordinates of
// basis_of_degree(k).
AffineSubspaceQ cocycles(const FreeCDGA& a, int k);

// Witness b with d(b) = a when one exists; nullopt otherwise. Requires a
// closed and homogeneous; the zero element gets the zero witness.
std::optional<Element> is_exact(const FreeCDGA& a, const Element& x);

int cohomology_dim(const FreeCDGA& a, int k);

}  // namespace immdec
