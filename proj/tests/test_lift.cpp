// Linear differential systems and the lift decision over relative models.

#include <algorithm>
#include <climits>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "immdec/errors.hpp"
#include "immdec/lift.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace immdec;
using testsupport::Rng;

namespace {

QVec qv(const std::vector<int>& v) {
  QVec out;
  for (int x : v) out.push_back(Rational(x));
  return out;
}

FreeCDGA x2_y3() {
  GenSetPtr g = make_generator_set({{"x", 2}, {"y", 3}});
  return FreeCDGA(
      g, {Element::zero(g), Element::from_monomial(g, Monomial{{2, 0}}, Rational(1))});
}

// Base on one closed degree-4 generator "a", one fiber generator "w" of
// degree 3 with d w = a.
RelativeModel one_step_model() {
  GenSetPtr bs = make_generator_set({{"a", 4}});
  FreeCDGA base(bs, {Element::zero(bs)});
  GenSetPtr total = make_generator_set({{"a", 4}, {"w", 3}});
  std::map<std::string, Element> fd;
  fd.emplace("w", Element::generator(total, 0));
  return RelativeModel(std::move(base), {{"w", 3}}, std::move(fd), INT_MAX);
}

}  // namespace

TEST_CASE("linear system with a unique solution") {
  const FreeCDGA alg = x2_y3();
  const FreeCdgaAmbient view(alg, 6);
  LinearDgaSystem s;
  s.ambient = &view;
  s.degrees = {3};
  s.constants = {{4, qv({1})}};  // x^2
  s.coeffs = {{std::nullopt}};
  const auto sol = solve_linear_dga_system(s);
  REQUIRE(!sol.empty());
  CHECK(sol.dim() == 0);
  CHECK(sol.point() == qv({1}));  // y
  CHECK(same_subspace(sol, testsupport::naive_linear_solve(s)));
}

TEST_CASE("linear system with no solution") {
  const FreeCDGA alg = x2_y3();
  const FreeCdgaAmbient view(alg, 6);
  LinearDgaSystem s;
  s.ambient = &view;
  s.degrees = {2};
  s.constants = {{3, qv({1})}};  // y is not in the image of d
  s.coeffs = {{std::nullopt}};
  CHECK(solve_linear_dga_system(s).empty());
  CHECK(testsupport::naive_linear_solve(s).empty());

  s.constants = {{3, qv({0})}};
  const auto sol = solve_linear_dga_system(s);
  REQUIRE(!sol.empty());
  CHECK(sol.dim() == 1);  // all of the degree-2 piece is closed
}

TEST_CASE("coupled equations tie the unknowns together") {
  const FreeCDGA alg = x2_y3();
  const FreeCdgaAmbient view(alg, 6);
  // d u = 0, d w = x^2 + x u with u in degree 2, w in degree 3.
  LinearDgaSystem s;
  s.ambient = &view;
  s.degrees = {2, 3};
  s.constants = {{3, qv({0})}, {4, qv({1})}};
  s.coeffs.assign(2, {std::nullopt, std::nullopt});
  s.coeffs[1][0] = GradedVec{2, qv({1})};  // x
  const auto sol = solve_linear_dga_system(s);
  REQUIRE(!sol.empty());
  // u = t x forces w = (1 + t) y.
  CHECK(sol.dim() == 1);
  CHECK(sol.contains(qv({0, 1})));
  CHECK(sol.contains(qv({1, 2})));
  CHECK(!sol.contains(qv({1, 1})));
  CHECK(same_subspace(sol, testsupport::naive_linear_solve(s)));
}

TEST_CASE("linear systems agree with the independent solver on random input") {
  Rng rng(515);
  for (int trial = 0; trial < 30; ++trial) {
    const FreeCDGA alg = testsupport::random_cdga(rng, 3, 5);
    const FreeCdgaAmbient view(alg, 6);
    const LinearDgaSystem s = testsupport::random_system(rng, view);
    const auto a = solve_linear_dga_system(s);
    const auto b = testsupport::naive_linear_solve(s);
    CHECK(a.empty() == b.empty());
    if (!a.empty()) CHECK(same_subspace(a, b));
  }
}

TEST_CASE("ill-graded systems are rejected") {
  const FreeCDGA alg = x2_y3();
  const FreeCdgaAmbient view(alg, 6);
  LinearDgaSystem s;
  s.ambient = &view;
  s.degrees = {3, 2};  // unsorted
  s.constants = {{4, qv({1})}, {3, qv({1})}};
  s.coeffs.assign(2, {std::nullopt, std::nullopt});
  CHECK_THROWS_WITH_AS(solve_linear_dga_system(s), doctest::Contains("sorted"),
                       input_error);

  s.degrees = {2, 3};
  s.constants = {{3, qv({1})}, {4, qv({1})}};
  // Coupling the degree-3 equation to the degree-2 unknown needs a degree-2
  // coefficient; a degree-3 one is ill graded.
  s.coeffs[1][0] = GradedVec{3, qv({1})};
  CHECK_THROWS_WITH_AS(solve_linear_dga_system(s), doctest::Contains("coefficient"),
                       input_error);
  s.coeffs[1][0] = std::nullopt;

  s.constants[0].coords = qv({1, 2});  // wrong length for the degree-3 piece
  CHECK_THROWS_AS(solve_linear_dga_system(s), input_error);

  s.ambient = nullptr;
  CHECK_THROWS_AS(solve_linear_dga_system(s), input_error);
}

TEST_CASE("relative model splits differentials into parts") {
  GenSetPtr bs = make_generator_set({{"a", 4}});
  FreeCDGA base(bs, {Element::zero(bs)});
  GenSetPtr total =
      make_generator_set({{"a", 4}, {"w0", 3}, {"w1", 3}, {"w2", 6}});
  std::map<std::string, Element> fd;
  fd.emplace("w1", Element::generator(total, 0));
  // d w2 = a * w0 has one cross term with base coefficient a; it squares to
  // zero because w0 is closed.
  fd.emplace("w2", mul(Element::generator(total, 0), Element::generator(total, 1)));
  RelativeModel r(std::move(base), {{"w0", 3}, {"w1", 3}, {"w2", 6}},
                  std::move(fd), INT_MAX);

  CHECK(r.fiber_count() == 3);
  CHECK(r.total().generators().size() == 4);
  CHECK(r.linear_parts(0).constant.is_zero());
  auto p1 = r.linear_parts(1);
  CHECK(p1.linear);
  CHECK(p1.cross.empty());
  CHECK(p1.constant.to_string() == "a");
  auto p2 = r.linear_parts(2);
  CHECK(p2.linear);
  CHECK(p2.constant.is_zero());
  REQUIRE(p2.cross.size() == 1);
  CHECK(p2.cross[0].first == 0);
  CHECK(p2.cross[0].second.to_string() == "a");

  // Round trip between base and total expressions.
  const Element a_base = Element::generator(bs, 0);
  CHECK(r.to_base_element(r.to_total_element(a_base)) == a_base);
  CHECK_THROWS_AS(r.to_base_element(Element::generator(r.total().generators_ptr(), 1)),
                  input_error);
}

TEST_CASE("relative model rejects malformed fiber data") {
  GenSetPtr bs = make_generator_set({{"a", 4}});
  GenSetPtr total = make_generator_set({{"a", 4}, {"w", 3}});

  {
    // Differential written over the base set only.
    FreeCDGA base(bs, {Element::zero(bs)});
    std::map<std::string, Element> fd;
    fd.emplace("w", Element::generator(bs, 0));
    CHECK_THROWS_WITH_AS(
        RelativeModel(std::move(base), {{"w", 3}}, std::move(fd), INT_MAX),
        doctest::Contains("combined"), input_error);
  }
  {
    // Entry for a generator that does not exist.
    FreeCDGA base(bs, {Element::zero(bs)});
    std::map<std::string, Element> fd;
    fd.emplace("v", Element::zero(total));
    CHECK_THROWS_AS(RelativeModel(std::move(base), {{"w", 3}}, std::move(fd), INT_MAX),
                    input_error);
  }
  {
    // Missing entries default to zero.
    FreeCDGA base(bs, {Element::zero(bs)});
    RelativeModel r(std::move(base), {{"w", 3}}, {}, INT_MAX);
    CHECK(r.fiber_diff_of(0).is_zero());
  }
  {
    // Quadratic fiber term (w1 even, so the square survives): construction
    // passes when the generator sits above the stated linearity bound, and
    // the split then reports it as nonlinear.
    GenSetPtr t2 = make_generator_set({{"a", 4}, {"w1", 4}, {"w2", 7}});
    FreeCDGA base(bs, {Element::zero(bs)});
    std::map<std::string, Element> fd;
    fd.emplace("w2", mul(Element::generator(t2, 1), Element::generator(t2, 1)));
    CHECK_THROWS_AS(RelativeModel(FreeCDGA(base), {{"w1", 4}, {"w2", 7}},
                                  std::map<std::string, Element>(fd), INT_MAX),
                    unsupported_error);
    RelativeModel r(std::move(base), {{"w1", 4}, {"w2", 7}}, std::move(fd), 2);
    CHECK(!r.linear_parts(1).linear);
  }
}

TEST_CASE("lift with no fiber generators always exists") {
  GenSetPtr bs = make_generator_set({{"a", 4}});
  FreeCDGA base(bs, {Element::zero(bs)});
  RelativeModel r(std::move(base), {}, {}, INT_MAX);
  const FreeCDGA alg = x2_y3();
  const FreeCdgaAmbient view(alg, 5);
  const CdgaMorphism phi(r.base(), view, {view.to_coords(
      mul(Element::generator(alg.generators_ptr(), 0),
          Element::generator(alg.generators_ptr(), 0)), 4)});
  const auto v = decide_dga_lift(r, view, phi, nullptr, nullptr, nullptr, 10);
  CHECK(v.exists);
  CHECK(v.witness.empty());
  CHECK(v.obstructions.empty());
}

TEST_CASE("decoupled lift reports per-generator certificates") {
  const RelativeModel r = one_step_model();

  // Target with x^2 exact: d w = a maps to d(psi w) = x^2, witness y.
  const FreeCDGA alg = x2_y3();
  const FreeCdgaAmbient view(alg, 5);
  const QVec x2 = view.to_coords(
      mul(Element::generator(alg.generators_ptr(), 0),
          Element::generator(alg.generators_ptr(), 0)),
      4);
  {
    const CdgaMorphism phi(r.base(), view, {x2});
    const auto v = decide_dga_lift(r, view, phi, nullptr, nullptr, nullptr, 4);
    REQUIRE(v.exists);
    REQUIRE(v.witness.size() == 1);
    CHECK(v.witness[0].first == "w");
    CHECK(view.to_element(3, v.witness[0].second).to_string() == "y");
    REQUIRE(v.obstructions.size() == 1);
    CHECK(v.obstructions[0].exact);
    CHECK(v.obstructions[0].obstruction_degree == 4);
  }

  // Target where the class survives: zero differential, phi(a) = 3 x^2.
  GenSetPtr zg = make_generator_set({{"x", 2}});
  const FreeCDGA zalg(zg, {Element::zero(zg)});
  const FreeCdgaAmbient zview(zalg, 5);
  {
    QVec c = zview.zero(4);
    c[0] = Rational(3);
    const CdgaMorphism phi(r.base(), zview, {c});
    const auto v = decide_dga_lift(r, zview, phi, nullptr, nullptr, nullptr, 4);
    CHECK(!v.exists);
    REQUIRE(v.obstructions.size() == 1);
    CHECK(!v.obstructions[0].exact);
    CHECK(v.obstructions[0].class_coords == c);
    CHECK(v.obstructions[0].generator == "w");
    CHECK(v.failure ==
          "the defining equations have no solution; the class of 'w' in degree "
          "4 is not exact");
  }
  {
    // Zero image: lift exists with the zero witness.
    const CdgaMorphism phi(r.base(), zview, {zview.zero(4)});
    const auto v = decide_dga_lift(r, zview, phi, nullptr, nullptr, nullptr, 4);
    REQUIRE(v.exists);
    CHECK(is_zero_vec(v.witness[0].second));
  }
}

TEST_CASE("fiber generators above the cap are left out") {
  const RelativeModel r = one_step_model();
  GenSetPtr zg = make_generator_set({{"x", 2}});
  const FreeCDGA zalg(zg, {Element::zero(zg)});
  const FreeCdgaAmbient zview(zalg, 5);
  QVec c = zview.zero(4);
  c[0] = Rational(3);
  const CdgaMorphism phi(r.base(), zview, {c});
  // Cap 2 excludes the degree-3 generator, so nothing obstructs.
  const auto v = decide_dga_lift(r, zview, phi, nullptr, nullptr, nullptr, 2);
  CHECK(v.exists);
  CHECK(v.witness.empty());
}

TEST_CASE("scalar cross references respect the degree cap") {
  // d w2 = w1 with w1 one degree up; the system is solvable when both are in
  // range and unsupported when the cap cuts w1 off.
  GenSetPtr bs = make_generator_set({{"a", 4}});
  GenSetPtr total = make_generator_set({{"a", 4}, {"w2", 3}, {"w1", 4}});
  std::map<std::string, Element> fd;
  fd.emplace("w2", Element::generator(total, 2));
  FreeCDGA base(bs, {Element::zero(bs)});
  RelativeModel r(std::move(base), {{"w2", 3}, {"w1", 4}}, std::move(fd), INT_MAX);

  const FreeCDGA alg = x2_y3();
  const FreeCdgaAmbient view(alg, 6);
  QVec x2 = view.to_coords(
      mul(Element::generator(alg.generators_ptr(), 0),
          Element::generator(alg.generators_ptr(), 0)),
      4);
  const CdgaMorphism phi(r.base(), view, {x2});

  CHECK_THROWS_WITH_AS(decide_dga_lift(r, view, phi, nullptr, nullptr, nullptr, 3),
                       doctest::Contains("degree cap"), unsupported_error);
  const auto v = decide_dga_lift(r, view, phi, nullptr, nullptr, nullptr, 4);
  CHECK(v.exists);
  // d(psi w2) = psi w1 forces the w1 image to be exact.
  REQUIRE(v.witness.size() == 2);
}

TEST_CASE("constraint triple must be all or nothing") {
  const RelativeModel r = one_step_model();
  const FreeCDGA alg = x2_y3();
  const FreeCdgaAmbient view(alg, 5);
  QVec c = view.zero(4);
  const CdgaMorphism phi(r.base(), view, {c});
  const CdgaMorphism f(r.total(), view, {c, view.zero(3)});
  CHECK_THROWS_WITH_AS(decide_dga_lift(r, view, phi, nullptr, &f, nullptr, 4),
                       doctest::Contains("triple"), input_error);
}

namespace {

// Carrier with d a = c, d b = 0; comparison target with the differential
// collapsed and only the image of a surviving.
struct ConstrainedSetup {
  FinitePresentation mx;
  FinitePresentation ma;
  ConstrainedSetup() : mx(mx_data()), ma(ma_data()) {}
  static FinitePresentation::Data mx_data() {
    FinitePresentation::Data d;
    d.basis[2] = {"a", "b"};
    d.basis[3] = {"c"};
    RationalMatrix m(1, 2);
    m.at(0, 0) = 1;
    d.differential[2] = m;
    return d;
  }
  static FinitePresentation::Data ma_data() {
    FinitePresentation::Data d;
    d.basis[2] = {"A", "B"};
    return d;
  }
  AlgebraMap comparison() const {
    // a maps to A, everything else dies.
    std::vector<RationalMatrix> ms;
    ms.push_back(RationalMatrix::identity(1));
    ms.emplace_back(0, 0);
    RationalMatrix m2(2, 2);
    m2.at(0, 0) = 1;
    ms.push_back(m2);
    ms.emplace_back(0, 1);
    return AlgebraMap(mx, ma, std::move(ms));
  }
};

RelativeModel free_fiber_model() {
  GenSetPtr bs = make_generator_set(std::vector<Generator>{});
  FreeCDGA base(bs, {});
  GenSetPtr total = make_generator_set({{"w", 2}});
  std::map<std::string, Element> fd;
  fd.emplace("w", Element::zero(total));
  return RelativeModel(std::move(base), {{"w", 2}}, std::move(fd), INT_MAX);
}

}  // namespace

TEST_CASE("constrained lift meets or misses the comparison data") {
  const ConstrainedSetup s;
  RelativeModel r = free_fiber_model();
  const CdgaMorphism phi(r.base(), s.mx, {});
  const AlgebraMap i = s.comparison();

  {
    // f w = B has no preimage: i kills b and c entirely.
    const CdgaMorphism f(r.total(), s.ma, {qv({0, 1})});
    const auto v = decide_dga_lift(r, s.mx, phi, &s.ma, &f, &i, 2);
    CHECK(!v.exists);
    CHECK(v.failure.find("no preimage") != std::string::npos);
  }
  {
    // f w = A pins the a-coordinate to 1, but d(psi w) = 0 forces it to 0.
    const CdgaMorphism f(r.total(), s.ma, {qv({1, 0})});
    const auto v = decide_dga_lift(r, s.mx, phi, &s.ma, &f, &i, 2);
    CHECK(!v.exists);
    CHECK(v.failure.find("does not meet the constraint space") != std::string::npos);
  }
  {
    // f w = 0 is hit by the closed element b (and by 0 itself).
    const CdgaMorphism f(r.total(), s.ma, {qv({0, 0})});
    const auto v = decide_dga_lift(r, s.mx, phi, &s.ma, &f, &i, 2);
    REQUIRE(v.exists);
    REQUIRE(v.witness.size() == 1);
    const QVec w = v.witness[0].second;
    CHECK(is_zero_vec(s.mx.diff(2, w)));
    CHECK(is_zero_vec(i.apply(2, w)));
  }
}

TEST_CASE("identity-constrained lifts agree with their own witnesses") {
  Rng rng(616);
  int yes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = testsupport::random_lift_instance(rng, trial % 2 == 0);
    const FreeCdgaAmbient mx(inst.carrier, inst.cutoff);
    const CdgaMorphism phi(inst.model.base(), mx, inst.phi_images);
    const auto v =
        decide_dga_lift(inst.model, mx, phi, nullptr, nullptr, nullptr, inst.cutoff);
    if (!v.exists) continue;
    ++yes;

    // The witness extends phi to a chain map on the whole model; the
    // morphism constructor re-derives the chain condition independently.
    // Witness pairs arrive sorted by degree, so match them up by name.
    std::vector<QVec> images = inst.phi_images;
    for (int g = 0; g < inst.model.fiber_count(); ++g) {
      const std::string& want = inst.model.fiber_gen(g).name;
      const auto it = std::find_if(v.witness.begin(), v.witness.end(),
                                   [&](const auto& p) { return p.first == want; });
      REQUIRE(it != v.witness.end());
      images.push_back(it->second);
    }
    const CdgaMorphism f(inst.model.total(), mx, images);

    // Pinning every fiber image to the found witness via the identity
    // comparison map must reproduce exactly that witness.
    const AlgebraMap id = AlgebraMap::identity(mx, inst.cutoff + 1);
    const auto w =
        decide_dga_lift(inst.model, mx, phi, &mx, &f, &id, inst.cutoff);
    REQUIRE(w.exists);
    REQUIRE(w.witness.size() == v.witness.size());
    for (std::size_t t = 0; t < w.witness.size(); ++t)
      CHECK(w.witness[t].second == v.witness[t].second);
  }
  CHECK(yes > 0);
}
