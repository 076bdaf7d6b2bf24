#include "immdec/lift.hpp"

#include <algorithm>

#include "immdec/errors.hpp"

namespace immdec {

namespace {

std::vector<Generator> concat_generators(const GeneratorSet& base,
                                         const std::vector<Generator>& fiber) {
  std::vector<Generator> all;
  for (int i = 0; i < base.size(); ++i) all.push_back(base[i]);
  for (const auto& g : fiber) all.push_back(g);
  return all;
}

}  // namespace

RelativeModel::RelativeModel(FreeCDGA base, std::vector<Generator> fiber_gens,
                             std::map<std::string, Element> fiber_diffs,
                             int linear_through)
    : base_(std::move(base)),
      fiber_(std::move(fiber_gens)),
      total_(
          [&]() -> FreeCDGA {
            GenSetPtr total_gens =
                make_generator_set(concat_generators(base_.generators(), fiber_));
            std::vector<Element> diffs;
            const int nb = base_.generators().size();
            for (int i = 0; i < nb; ++i) {
              // Base differential, re-expressed over the total generator set.
              Element d(total_gens);
              for (const auto& [m, c] : base_.diff_of_generator(i).terms()) {
                Monomial ext = m;
                ext.exps.resize(static_cast<std::size_t>(total_gens->size()), 0);
                d.add_term(ext, c);
              }
              diffs.push_back(std::move(d));
            }
            for (const auto& g : fiber_) {
              auto it = fiber_diffs.find(g.name);
              if (it == fiber_diffs.end()) {
                diffs.push_back(Element::zero(total_gens));
                continue;
              }
              const Element& e = it->second;
              if (!(e.gens() == *total_gens))
                throw input_error("fiber differential of '" + g.name +
                                  "' must be written over the combined generators");
              diffs.push_back(e);
            }
            for (const auto& [name, e] : fiber_diffs) {
              bool known = false;
              for (const auto& g : fiber_)
                if (g.name == name) known = true;
              if (!known)
                throw input_error("fiber differential given for unknown generator '" +
                                  name + "'");
            }
            return FreeCDGA(total_gens, std::move(diffs));
          }()),
      linear_through_(linear_through) {
  for (int i = 0; i < fiber_count(); ++i) {
    if (fiber_gen(i).degree <= linear_through_ && !linear_parts(i).linear)
      throw unsupported_error(
          "differential of fiber generator '" + fiber_gen(i).name +
          "' is not affine-linear in the fiber generators (required through "
          "degree " + std::to_string(linear_through_) + ")");
  }
}

const Element& RelativeModel::fiber_diff_of(int i) const {
  return total_.diff_of_generator(total_index_of_fiber(i));
}

RelativeModel::LinearParts RelativeModel::linear_parts(int fiber_index) const {
  const int nb = base_.generators().size();
  LinearParts parts(base_.generators_ptr());
  std::map<int, Element> cross;  // fiber index -> base coefficient
  for (const auto& [m, c] : fiber_diff_of(fiber_index).terms()) {
    int fiber_letters = 0;
    int single = -1;
    for (int f = 0; f < fiber_count(); ++f) {
      const auto e = m.exps[static_cast<std::size_t>(nb + f)];
      fiber_letters += static_cast<int>(e);
      if (e > 0) single = f;
    }
    if (fiber_letters == 0) {
      Monomial bm;
      bm.exps.assign(m.exps.begin(), m.exps.begin() + nb);
      parts.constant.add_term(bm, c);
    } else if (fiber_letters == 1) {
      Monomial bm;
      bm.exps.assign(m.exps.begin(), m.exps.begin() + nb);
      auto it = cross.try_emplace(single, base_.generators_ptr()).first;
      it->second.add_term(bm, c);
    } else {
      parts.linear = false;
    }
  }
  for (auto& [f, e] : cross)
    if (!e.is_zero()) parts.cross.emplace_back(f, std::move(e));
  return parts;
}

Element RelativeModel::to_base_element(const Element& total_elem) const {
  const int nb = base_.generators().size();
  Element out(base_.generators_ptr());
  for (const auto& [m, c] : total_elem.terms()) {
    for (std::size_t i = static_cast<std::size_t>(nb); i < m.exps.size(); ++i)
      if (m.exps[i] != 0)
        throw input_error("element involves fiber generators where a base element "
                          "is required");
    Monomial bm;
    bm.exps.assign(m.exps.begin(), m.exps.begin() + nb);
    out.add_term(bm, c);
  }
  return out;
}

Element RelativeModel::to_total_element(const Element& base_elem) const {
  Element out(total_.generators_ptr());
  for (const auto& [m, c] : base_elem.terms()) {
    Monomial ext = m;
    ext.exps.resize(static_cast<std::size_t>(total_.generators().size()), 0);
    out.add_term(ext, c);
  }
  return out;
}

AffineSubspaceQ solve_linear_dga_system(const LinearDgaSystem& s) {
  if (!s.ambient) throw input_error("linear dga system without an ambient carrier");
  const Ambient& amb = *s.ambient;
  const int k = static_cast<int>(s.degrees.size());
  if (static_cast<int>(s.constants.size()) != k ||
      static_cast<int>(s.coeffs.size()) != k)
    throw input_error("linear dga system with mismatched field lengths");
  for (int i = 0; i + 1 < k; ++i)
    if (s.degrees[static_cast<std::size_t>(i)] > s.degrees[static_cast<std::size_t>(i) + 1])
      throw input_error("ill-graded system: unknown degrees must be sorted ascending");
  for (int i = 0; i < k; ++i) {
    if (s.degrees[static_cast<std::size_t>(i)] < 2)
      throw input_error("ill-graded system: unknown degrees must be >= 2");
    if (static_cast<int>(s.coeffs[static_cast<std::size_t>(i)].size()) != k)
      throw input_error("linear dga system with mismatched coefficient row");
  }

  std::vector<int> col_off(static_cast<std::size_t>(k), 0), row_off(static_cast<std::size_t>(k), 0);
  int cols = 0, rows = 0;
  for (int i = 0; i < k; ++i) {
    col_off[static_cast<std::size_t>(i)] = cols;
    cols += checked_dim(amb, s.degrees[static_cast<std::size_t>(i)]);
    row_off[static_cast<std::size_t>(i)] = rows;
    rows += checked_dim(amb, s.degrees[static_cast<std::size_t>(i)] + 1);
  }

  RationalMatrix m(rows, cols);
  QVec rhs = zero_vec(rows);

  for (int i = 0; i < k; ++i) {
    const int ni = s.degrees[static_cast<std::size_t>(i)];
    const GradedVec& c = s.constants[static_cast<std::size_t>(i)];
    if (c.degree != ni + 1 || static_cast<int>(c.coords.size()) != amb.dim(ni + 1))
      throw input_error("ill-graded system: constant of equation " +
                        std::to_string(i + 1) + " must be of degree " +
                        std::to_string(ni + 1));
    for (int t = 0; t < static_cast<int>(c.coords.size()); ++t)
      rhs[static_cast<std::size_t>(row_off[static_cast<std::size_t>(i)] + t)] =
          c.coords[static_cast<std::size_t>(t)];

    const RationalMatrix d = amb.diff_matrix_at(ni);
    for (int r = 0; r < d.rows(); ++r)
      for (int cc = 0; cc < d.cols(); ++cc)
        m.at(row_off[static_cast<std::size_t>(i)] + r,
             col_off[static_cast<std::size_t>(i)] + cc) = d.at(r, cc);

    for (int j = 0; j < k; ++j) {
      const auto& a = s.coeffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!a) continue;
      const int nj = s.degrees[static_cast<std::size_t>(j)];
      const int want = ni + 1 - nj;
      if (is_zero_vec(a->coords)) continue;
      if (a->degree != want)
        throw input_error("ill-graded system: coefficient (" + std::to_string(i + 1) +
                          "," + std::to_string(j + 1) + ") must be of degree " +
                          std::to_string(want));
      if (want < 0)
        throw input_error("ill-graded system: coefficient (" + std::to_string(i + 1) +
                          "," + std::to_string(j + 1) + ") would have negative degree");
      if (static_cast<int>(a->coords.size()) != amb.dim(want))
        throw input_error("ill-graded system: coefficient (" + std::to_string(i + 1) +
                          "," + std::to_string(j + 1) + ") has the wrong length");
      const RationalMatrix t = amb.mul_matrix(want, a->coords, nj);
      for (int r = 0; r < t.rows(); ++r)
        for (int cc = 0; cc < t.cols(); ++cc)
          m.at(row_off[static_cast<std::size_t>(i)] + r,
               col_off[static_cast<std::size_t>(j)] + cc) -= t.at(r, cc);
    }
  }
  return solve_affine(m, rhs);
}

namespace {

void require_matching_algebra(const FreeCDGA& a, const FreeCDGA& b, const char* what) {
  if (&a == &b) return;
  if (!(a.generators() == b.generators()))
    throw input_error(std::string(what) + ": generator sets differ");
  for (int i = 0; i < a.generators().size(); ++i)
    if (!(a.diff_of_generator(i) == b.diff_of_generator(i)))
      throw input_error(std::string(what) + ": differentials differ");
}

}  // namespace

LiftVerdict decide_dga_lift(const RelativeModel& r, const Ambient& mx,
                            const CdgaMorphism& phi, const Ambient* ma,
                            const CdgaMorphism* f_star, const AlgebraMap* i_star,
                            int max_degree) {
  const bool with_constraint = (ma != nullptr);
  if ((f_star != nullptr) != with_constraint || (i_star != nullptr) != with_constraint)
    throw input_error("constraint data must be given as a full triple "
                      "(target, morphism, comparison map) or not at all");
  require_matching_algebra(phi.source(), r.base(), "base morphism");
  if (&phi.target() != &mx)
    throw input_error("base morphism must land in the given carrier");
  if (with_constraint) {
    require_matching_algebra(f_star->source(), r.total(), "constraint morphism");
    if (&f_star->target() != ma)
      throw input_error("constraint morphism must land in the constraint carrier");
    if (&i_star->source() != &mx || &i_star->target() != ma)
      throw input_error("comparison map must go from the carrier to the "
                        "constraint carrier");
  }

  LiftVerdict verdict;

  // Unknowns: fiber generators within the degree cap, ordered by degree.
  std::vector<int> unknowns;
  for (int i = 0; i < r.fiber_count(); ++i)
    if (r.fiber_gen(i).degree <= max_degree) unknowns.push_back(i);
  std::stable_sort(unknowns.begin(), unknowns.end(), [&](int a, int b) {
    return r.fiber_gen(a).degree < r.fiber_gen(b).degree;
  });
  std::map<int, int> slot_of;  // fiber index -> unknown slot
  for (std::size_t s = 0; s < unknowns.size(); ++s)
    slot_of[unknowns[s]] = static_cast<int>(s);

  const int k = static_cast<int>(unknowns.size());
  std::vector<RelativeModel::LinearParts> parts;
  parts.reserve(static_cast<std::size_t>(k));
  bool decoupled = true;
  for (int s = 0; s < k; ++s) {
    const int fi = unknowns[static_cast<std::size_t>(s)];
    auto p = r.linear_parts(fi);
    if (!p.linear)
      throw unsupported_error("differential of fiber generator '" +
                              r.fiber_gen(fi).name +
                              "' is not affine-linear in the fiber generators");
    for (const auto& [partner, coeff] : p.cross) {
      if (!slot_of.count(partner))
        throw unsupported_error(
            "differential of fiber generator '" + r.fiber_gen(fi).name +
            "' references '" + r.fiber_gen(partner).name +
            "', which lies above the degree cap " + std::to_string(max_degree));
      (void)coeff;
    }
    if (!p.cross.empty()) decoupled = false;
    parts.push_back(std::move(p));
  }

  LinearDgaSystem sys;
  sys.ambient = &mx;
  for (int s = 0; s < k; ++s)
    sys.degrees.push_back(r.fiber_gen(unknowns[static_cast<std::size_t>(s)]).degree);
  sys.coeffs.assign(static_cast<std::size_t>(k),
                    std::vector<std::optional<GradedVec>>(static_cast<std::size_t>(k)));
  for (int s = 0; s < k; ++s) {
    const int deg = sys.degrees[static_cast<std::size_t>(s)];
    GradedVec c;
    c.degree = deg + 1;
    c.coords = phi.apply(parts[static_cast<std::size_t>(s)].constant, deg + 1);
    sys.constants.push_back(std::move(c));
    for (const auto& [partner, coeff] : parts[static_cast<std::size_t>(s)].cross) {
      const int t = slot_of.at(partner);
      const int cdeg = deg + 1 - r.fiber_gen(partner).degree;
      GradedVec g;
      g.degree = cdeg;
      g.coords = phi.apply(coeff, cdeg);
      sys.coeffs[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = std::move(g);
    }
  }

  const AffineSubspaceQ solutions = solve_linear_dga_system(sys);

  // Per-generator certificates in the decoupled, unconstrained case.
  if (decoupled && !with_constraint) {
    for (int s = 0; s < k; ++s) {
      const int fi = unknowns[static_cast<std::size_t>(s)];
      LiftObstruction o;
      o.generator = r.fiber_gen(fi).name;
      o.generator_degree = r.fiber_gen(fi).degree;
      o.obstruction_degree = o.generator_degree + 1;
      o.class_coords = sys.constants[static_cast<std::size_t>(s)].coords;
      o.witness = is_exact(mx, o.obstruction_degree, o.class_coords);
      o.exact = o.witness.has_value();
      verdict.obstructions.push_back(std::move(o));
    }
    bool all_exact = true;
    for (const auto& o : verdict.obstructions) all_exact &= o.exact;
    if (all_exact == solutions.empty())
      throw std::logic_error("internal: per-generator exactness disagrees with the "
                             "assembled system");
  }

  AffineSubspaceQ feasible = solutions;
  std::vector<QVec> constraint_targets;  // per unknown, image required under i
  if (with_constraint && !solutions.empty()) {
    // Constraint space: product over unknowns of the preimages i^{-1}(f(w)).
    QVec point;
    std::vector<QVec> dirs;
    std::vector<int> offsets;
    int total_dim = 0;
    for (int s = 0; s < k; ++s) {
      offsets.push_back(total_dim);
      total_dim += mx.dim(sys.degrees[static_cast<std::size_t>(s)]);
    }
    bool empty_constraint = false;
    std::string empty_reason;
    for (int s = 0; s < k && !empty_constraint; ++s) {
      const int fi = unknowns[static_cast<std::size_t>(s)];
      const int deg = sys.degrees[static_cast<std::size_t>(s)];
      const QVec target = f_star->image_of(r.total_index_of_fiber(fi));
      constraint_targets.push_back(target);
      const AffineSubspaceQ pre = solve_affine(i_star->matrix(deg), target);
      if (pre.empty()) {
        empty_constraint = true;
        empty_reason = "the required image of '" + r.fiber_gen(fi).name +
                       "' has no preimage under the comparison map";
        break;
      }
      for (const auto& x : pre.point()) point.push_back(x);
      for (const auto& d : pre.directions()) {
        QVec dir = zero_vec(total_dim);
        for (std::size_t t = 0; t < d.size(); ++t)
          dir[static_cast<std::size_t>(offsets[static_cast<std::size_t>(s)]) + t] = d[t];
        dirs.push_back(std::move(dir));
      }
    }
    if (empty_constraint) {
      verdict.exists = false;
      verdict.failure = empty_reason;
      return verdict;
    }
    const AffineSubspaceQ vtilde =
        AffineSubspaceQ::from_point_and_directions(std::move(point), std::move(dirs));
    feasible = intersect_affine(solutions, vtilde);
    if (feasible.empty()) {
      verdict.exists = false;
      verdict.failure =
          "the solution space of the defining equations does not meet the "
          "constraint space";
      return verdict;
    }
  }

  if (feasible.empty()) {
    verdict.exists = false;
    verdict.failure = "the defining equations have no solution";
    if (decoupled && !with_constraint) {
      for (const auto& o : verdict.obstructions)
        if (!o.exact)
          verdict.failure += "; the class of '" + o.generator + "' in degree " +
                             std::to_string(o.obstruction_degree) + " is not exact";
    }
    return verdict;
  }

  // Canonical witness, then an independent check of every defining equation.
  verdict.exists = true;
  const QVec& w = feasible.point();
  int off = 0;
  std::vector<QVec> images;
  for (int s = 0; s < k; ++s) {
    const int deg = sys.degrees[static_cast<std::size_t>(s)];
    const int d = mx.dim(deg);
    QVec img(w.begin() + off, w.begin() + off + d);
    off += d;
    images.push_back(img);
    verdict.witness.emplace_back(r.fiber_gen(unknowns[static_cast<std::size_t>(s)]).name,
                                 std::move(img));
  }
  for (int s = 0; s < k; ++s) {
    const int deg = sys.degrees[static_cast<std::size_t>(s)];
    const QVec lhs = mx.diff(deg, images[static_cast<std::size_t>(s)]);
    QVec rhs = sys.constants[static_cast<std::size_t>(s)].coords;
    for (const auto& [partner, coeff] : parts[static_cast<std::size_t>(s)].cross) {
      const int t = slot_of.at(partner);
      const int cdeg = deg + 1 - r.fiber_gen(partner).degree;
      const QVec term = mx.mul(cdeg, phi.apply(coeff, cdeg),
                               r.fiber_gen(partner).degree,
                               images[static_cast<std::size_t>(t)]);
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += term[i];
    }
    if (lhs != rhs)
      throw std::logic_error("internal: witness fails its defining equation");
    if (with_constraint) {
      const QVec via = i_star->apply(deg, images[static_cast<std::size_t>(s)]);
      if (via != constraint_targets[static_cast<std::size_t>(s)])
        throw std::logic_error("internal: witness fails the constraint equation");
    }
  }
  return verdict;
}

}  // namespace immdec
