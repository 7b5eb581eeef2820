#include "generators.hpp"

#include "conekit/error.hpp"
#include "conekit/hyperbolic.hpp"

#include <doctest.h>

using namespace conekit;
using namespace conekit::testing;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("cosh squared distance") {
  const LorentzLattice l(diag_lorentz(2), vec({1, 0}));
  CHECK(cosh_sq_distance(l, vec({2, 1}), vec({2, 1})) == 1);
  // <x,y> = 2, x^2 = 1, y^2 = 3.
  CHECK(cosh_sq_distance(l, vec({1, 0}), vec({2, 1})) == Rational(4, 3));
  const LorentzLattice l3(diag_lorentz(3), vec({1, 0, 0}));
  VectorQ y(3);
  y << Rational(3, 2), Rational(1, 2), Rational(1);
  // <x,y> = 3/2 and y^2 = 9/4 - 1/4 - 1 = 1.
  CHECK(cosh_sq_distance(l3, vec({1, 0, 0}), y) == Rational(9, 4));
  CHECK(code_of([&] { cosh_sq_distance(l, vec({1, 1}), vec({1, 0})); }) == ErrorCode::BoundaryInput);
}

TEST_CASE("isotropic pair inequality examples") {
  const LorentzLattice l(diag_lorentz(2), vec({1, 0}));
  CHECK(lemma_ineq_holds(l, vec({1, 0}), vec({1, 1}), vec({1, -1})));
  const LorentzLattice l3(diag_lorentz(3), vec({1, 0, 0}));
  CHECK(lemma_ineq_holds(l3, vec({1, 0, 0}), vec({1, 1, 0}), vec({1, 0, 1})));
  CHECK(lemma_ineq_holds(l3, vec({3, 1, 1}), vec({1, 1, 0}), vec({1, 1, 0})));
  CHECK(code_of([&] { lemma_ineq_holds(l, vec({1, 0}), vec({2, 1}), vec({1, 1})); }) == ErrorCode::NotIsotropic);
}

TEST_CASE("isotropic pair inequality is an equality for (1,1), (1,-1)") {
  // 2 x^2 = 2 and 2 <x,e1><x,e2> = 2.
  const LorentzLattice l(diag_lorentz(2), vec({1, 0}));
  const VectorQ x = vec({1, 0}), e1 = vec({1, 1}), e2 = vec({1, -1});
  CHECK(l.pairing(e1, e2) * l.norm(x) == 2 * l.pairing(x, e1) * l.pairing(x, e2));
}

TEST_CASE("horoball membership") {
  const LorentzLattice l(diag_lorentz(2), vec({1, 0}));
  const Horoball u = make_horoball(l, vec({1, 1}));
  CHECK_FALSE(horoball_contains(l, u, vec({2, 1})));
  CHECK(horoball_contains(l, u, vec({5, 4})));
  CHECK(horoball_contains(l, make_horoball(l, vec({1, 1}), Rational(2, 3)), vec({5, 4})));
  CHECK_FALSE(horoball_contains(l, make_horoball(l, vec({1, 1}), Rational(1, 2)), vec({5, 4})));
}

TEST_CASE("horoball disjointness") {
  const LorentzLattice l(diag_lorentz(2), vec({1, 0}));
  CHECK(l.pairing(vec({1, 1}), vec({1, -1})) == 2);
  CHECK(horoballs_disjoint(l, make_horoball(l, vec({1, 1})), make_horoball(l, vec({1, -1}))));
  const LorentzLattice l3(diag_lorentz(3), vec({1, 0, 0}));
  CHECK(horoballs_disjoint(l3, make_horoball(l3, vec({1, 1, 0})), make_horoball(l3, vec({1, 0, 1}))));
  CHECK(code_of([&] { horoballs_disjoint(l, make_horoball(l, vec({1, 1})), make_horoball(l, vec({1, 1}))); }) ==
        ErrorCode::EqualCenters);
  Rng rng(3);
  const Horoball a = make_horoball(l3, vec({1, 1, 0})), b = make_horoball(l3, vec({1, 0, 1}));
  for (int t = 0; t < 200; ++t) {
    const VectorQ x = random_interior(l3, rng, 30);
    CHECK_FALSE((horoball_contains(l3, a, x) && horoball_contains(l3, b, x)));
  }
}

TEST_CASE("bisector halfspace") {
  const LorentzLattice l(diag_lorentz(2), vec({1, 0}));
  const VectorQ f = bisector_halfspace(l, vec({2, 1}), vec({2, -1}));
  // <x, z - y> = <x, (0, -2)> = 2 x_2, so f = (0, 2) in dual coordinates.
  CHECK(f == vec({0, 2}));
  CHECK(f.dot(vec({1, 0})) == 0);
  CHECK(f.dot(vec({2, -1})) < 0);
  CHECK(f.dot(vec({2, 1})) > 0);
  CHECK(code_of([&] { bisector_halfspace(l, vec({2, 1}), vec({2, 1})); }) == ErrorCode::ProportionalInputs);
  CHECK(code_of([&] { bisector_halfspace(l, vec({2, 1}), vec({4, 2})); }) == ErrorCode::ProportionalInputs);

  const LorentzLattice pell(mat({{1, 0}, {0, -2}}), vec({1, 0}));
  const VectorQ y = vec({2, 1}), gy = mat({{3, 4}, {2, 3}}) * y;
  CHECK(bisector_halfspace(pell, y, gy) == VectorQ(pell.gram() * (gy - y)));
}

TEST_CASE("random properties on small lattices") {
  Rng rng(77);
  for (const auto& il : isotropic_lattices()) {
    const auto& l = il.lattice;
    for (int t = 0; t < 60; ++t) {
      const VectorQ x = random_interior(l, rng), y = random_interior(l, rng);
      const Rational c = cosh_sq_distance(l, x, y);
      CHECK(c >= 1);
      CHECK((c == 1) == same_ray(x, y));
      const VectorQ e1 = random_isotropic(l, il.e0, rng), e2 = random_isotropic(l, il.e0, rng);
      CHECK(lemma_ineq_holds(l, x, e1, e2));
      // Nesting of horoballs in the scale.
      const Rational c1 = Rational(uniform(rng, 1, 5), 4), c2 = c1 + Rational(uniform(rng, 1, 5), 4);
      if (horoball_contains(l, make_horoball(l, e1, c1), x)) CHECK(horoball_contains(l, make_horoball(l, e1, c2), x));
      if (!same_ray(x, y) && l.norm(x) == l.norm(y)) {
        const VectorQ f = bisector_halfspace(l, x, y);
        CHECK(f.dot(x) > 0);
        CHECK(f.dot(y) < 0);
      }
      const VectorQ z = random_interior(l, rng);
      CHECK(closer_to_first(l, z, x, y) == (cosh_sq_distance(l, z, x) <= cosh_sq_distance(l, z, y)));
    }
  }
}
