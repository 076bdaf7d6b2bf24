#pragma once

#include <vector>

#include "immdec/ambient.hpp"
#include "immdec/cdga.hpp"

namespace immdec {

// Morphism of differential graded algebras from a free CDGA into an ambient
// carrier, determined by generator images (coordinate vectors in the
// generator's degree). Construction validates degrees and the chain
// condition phi(d g) = d(phi g) on every generator; multiplicativity then
// extends it to all elements.
class CdgaMorphism {
 public:
  CdgaMorphism(const FreeCDGA& source, const Ambient& target,
               std::vector<QVec> generator_images);

  const FreeCDGA& source() const { return *source_; }
  const Ambient& target() const { return *target_; }
  const QVec& image_of(int generator_index) const {
    return images_[static_cast<std::size_t>(generator_index)];
  }

  // Push a homogeneous element through; expected_degree disambiguates 0.
  QVec apply(const Element& a, int expected_degree) const;

 private:
  const FreeCDGA* source_;
  const Ambient* target_;
  std::vector<QVec> images_;
};

// Degreewise linear map between ambient carriers, one matrix per degree
// 0..bound. Validated to preserve the unit, commute with the differentials
// and respect products on basis pairs (within the bound).
class AlgebraMap {
 public:
  AlgebraMap(const Ambient& source, const Ambient& target,
             std::vector<RationalMatrix> matrices);
  static AlgebraMap identity(const Ambient& a, int bound);

  const Ambient& source() const { return *source_; }
  const Ambient& target() const { return *target_; }
  int bound() const { return static_cast<int>(matrices_.size()) - 1; }
  const RationalMatrix& matrix(int k) const;
  QVec apply(int k, const QVec& v) const;

 private:
  const Ambient* source_;
  const Ambient* target_;
  std::vector<RationalMatrix> matrices_;
};

}  // namespace immdec
