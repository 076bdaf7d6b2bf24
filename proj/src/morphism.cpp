#include "immdec/morphism.hpp"

#include "immdec/errors.hpp"

namespace immdec {

CdgaMorphism::CdgaMorphism(const FreeCDGA& source, const Ambient& target,
                           std::vector<QVec> generator_images)
    : source_(&source), target_(&target), images_(std::move(generator_images)) {
  const GeneratorSet& gens = source.generators();
  if (static_cast<int>(images_.size()) != gens.size())
    throw input_error("morphism must assign one image per source generator");
  for (int i = 0; i < gens.size(); ++i) {
    const int d = gens[i].degree;
    if (static_cast<int>(images_[static_cast<std::size_t>(i)].size()) !=
        checked_dim(target, d))
      throw input_error("image of generator '" + gens[i].name +
                        "' does not lie in the degree-" + std::to_string(d) +
                        " piece of the target");
  }
  for (int i = 0; i < gens.size(); ++i) {
    const int d = gens[i].degree;
    const QVec lhs = apply(source.diff_of_generator(i), d + 1);
    const QVec rhs = target.diff(d, images_[static_cast<std::size_t>(i)]);
    if (lhs != rhs)
      throw input_error("morphism does not commute with the differentials at "
                        "generator '" + gens[i].name + "'");
  }
}

QVec CdgaMorphism::apply(const Element& a, int expected_degree) const {
  const int out_dim = checked_dim(*target_, expected_degree);
  QVec out = zero_vec(out_dim);
  if (a.is_zero()) return out;
  if (!(a.gens_ptr() == source_->generators_ptr() || a.gens() == source_->generators()))
    throw input_error("morphism applied to an element over a different generator set");
  const auto deg = a.homogeneous_degree();
  if (!deg || *deg != expected_degree)
    throw input_error("morphism applied to an element that is not homogeneous of "
                      "degree " + std::to_string(expected_degree));
  const GeneratorSet& gens = source_->generators();
  for (const auto& [m, c] : a.terms()) {
    // Images multiply left to right in generator order, matching the
    // canonical written form of the monomial.
    QVec acc = target_->unit();
    int acc_deg = 0;
    acc[0] *= c;
    for (int i = 0; i < gens.size(); ++i) {
      for (std::uint32_t e = 0; e < m.exps[static_cast<std::size_t>(i)]; ++e) {
        acc = target_->mul(acc_deg, acc, gens[i].degree,
                           images_[static_cast<std::size_t>(i)]);
        acc_deg += gens[i].degree;
      }
    }
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += acc[t];
  }
  return out;
}

AlgebraMap::AlgebraMap(const Ambient& source, const Ambient& target,
                       std::vector<RationalMatrix> matrices)
    : source_(&source), target_(&target), matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw input_error("degreewise map needs at least degree 0");
  const int bound = static_cast<int>(matrices_.size()) - 1;
  for (int k = 0; k <= bound; ++k) {
    const RationalMatrix& m = matrices_[static_cast<std::size_t>(k)];
    if (m.rows() != checked_dim(target, k) || m.cols() != checked_dim(source, k))
      throw input_error("degreewise map matrix at degree " + std::to_string(k) +
                        " has the wrong shape");
  }
  if (apply(0, source.unit()) != target.unit())
    throw input_error("degreewise map does not preserve the unit");
  for (int k = 0; k < bound; ++k) {
    // target d . f_k = f_{k+1} . source d
    const int n = source.dim(k);
    for (int j = 0; j < n; ++j) {
      QVec e = zero_vec(n);
      e[static_cast<std::size_t>(j)] = 1;
      const QVec via_target = target.diff(k, apply(k, e));
      const QVec via_source = apply(k + 1, source.diff(k, e));
      if (via_target != via_source)
        throw input_error("degreewise map does not commute with the differentials "
                          "at degree " + std::to_string(k));
    }
  }
  for (int ka = 1; ka <= bound; ++ka) {
    for (int kb = ka; ka + kb <= bound; ++kb) {
      const int na = source.dim(ka), nb = source.dim(kb);
      for (int i = 0; i < na; ++i) {
        QVec ea = zero_vec(na);
        ea[static_cast<std::size_t>(i)] = 1;
        for (int j = 0; j < nb; ++j) {
          QVec eb = zero_vec(nb);
          eb[static_cast<std::size_t>(j)] = 1;
          const QVec lhs = apply(ka + kb, source.mul(ka, ea, kb, eb));
          const QVec rhs = target.mul(ka, apply(ka, ea), kb, apply(kb, eb));
          if (lhs != rhs)
            throw input_error("degreewise map is not multiplicative on basis pair "
                              "(" + std::to_string(ka) + "," + std::to_string(kb) + ")");
        }
      }
    }
  }
}

AlgebraMap AlgebraMap::identity(const Ambient& a, int bound) {
  std::vector<RationalMatrix> mats;
  for (int k = 0; k <= bound; ++k) mats.push_back(RationalMatrix::identity(a.dim(k)));
  return AlgebraMap(a, a, std::move(mats));
}

const RationalMatrix& AlgebraMap::matrix(int k) const {
  if (k < 0 || k > bound())
    throw input_error("degreewise map queried outside its bound at degree " +
                      std::to_string(k));
  return matrices_[static_cast<std::size_t>(k)];
}

QVec AlgebraMap::apply(int k, const QVec& v) const { return matrix(k).apply(v); }

}  // namespace immdec
