#include "generators.hpp"

#include "conekit/error.hpp"
#include "conekit/fixtures.hpp"
#include "conekit/surface.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

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

std::vector<Rational> divisor(const SurfaceData& s, std::initializer_list<std::pair<const char*, long>> terms) {
  std::vector<Rational> d(s.curves().size(), Rational(0));
  for (const auto& [name, c] : terms) d[*s.curve_index(name)] += c;
  return d;
}

VectorQ unit(int rank, int i) {
  VectorQ v = VectorQ::Zero(rank);
  v[i] = 1;
  return v;
}

// All four decomposition invariants plus D = P + N.
void check_decomposition(const SurfaceData& s, const std::vector<Rational>& d, const ZariskiDecomp& z) {
  VectorQ D = VectorQ::Zero(s.rank());
  for (std::size_t i = 0; i < d.size(); ++i) D += d[i] * s.curves()[i].cls;
  CHECK(z.P + z.N == D);
  for (const auto& c : s.curves()) CHECK(s.lattice().pairing(z.P, c.cls) >= 0);
  MatrixQ m(static_cast<Index>(z.support.size()), static_cast<Index>(z.support.size()));
  for (std::size_t i = 0; i < z.support.size(); ++i) {
    CHECK(s.lattice().pairing(z.P, s.curves()[z.support[i]].cls) == 0);
    CHECK(z.coeffs[i] > 0);
    for (std::size_t j = 0; j < z.support.size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) =
          s.lattice().pairing(s.curves()[z.support[i]].cls, s.curves()[z.support[j]].cls);
  }
  CHECK(is_negative_definite(m));
}

}  // namespace

TEST_CASE("Riemann-Roch and effectivity") {
  const SurfaceData e1 = *fixture_e1().surface;
  const SurfaceData dp8 = *fixture_del_pezzo(8).surface;
  CHECK(riemann_roch_chi(e1, VectorQ::Zero(10)) == 1);
  CHECK(riemann_roch_chi(e1, VectorQ(-e1.K())) == 1);
  CHECK(riemann_roch_chi(dp8, unit(9, 0)) == 3);
  const auto w = nef_is_effective(dp8, unit(9, 0));
  CHECK(w.effective);
  CHECK(w.chi == 3);
  CHECK(nef_is_effective(e1, VectorQ(-e1.K())).chi == 1);
  CHECK(nef_is_effective(e1, VectorQ::Zero(10)).effective);
  CHECK(code_of([&] { nef_is_effective(dp8, unit(9, 1)); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("negativity solve examples") {
  const auto a = negativity_solve(mat({{-2, 1}, {1, -2}}), {Rational(-1), Rational(-1)});
  CHECK(a.coeffs == std::vector<Rational>{Rational(1), Rational(1)});
  CHECK(a.nonnegative);
  CHECK(negativity_solve(mat({{-2}}), {Rational(-2)}).coeffs == std::vector<Rational>{Rational(1)});
  const auto z = negativity_solve(mat({{-2, 1}, {1, -2}}), {Rational(0), Rational(0)});
  CHECK(z.coeffs == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(code_of([] { negativity_solve(mat({{-2, 2}, {2, -2}}), {Rational(-1), Rational(-1)}); }) ==
        ErrorCode::NotNegativeDefinite);
  // Two components: only the first is forced positive.
  const auto c = negativity_solve(mat({{-2, 1, 0}, {1, -2, 0}, {0, 0, -3}}), {Rational(-1), Rational(0), Rational(0)});
  CHECK(c.components.size() == 2);
  CHECK(c.coeffs[2] == 0);
  CHECK(c.coeffs[0] == Rational(2, 3));
  CHECK(c.coeffs[1] == Rational(1, 3));
  CHECK(c.support_is_union_of_components);
}

TEST_CASE("negativity lemma on random configurations") {
  Rng rng(404);
  for (int t = 0; t < 100; ++t) {
    const MatrixQ m = random_negative_configuration(rng, 6);
    std::vector<Rational> targets;
    for (Index i = 0; i < m.rows(); ++i) targets.push_back(Rational(-uniform(rng, 0, 3), uniform(rng, 1, 3)));
    const auto sol = negativity_solve(m, targets);
    CHECK(sol.nonnegative);
    CHECK(sol.support_is_union_of_components);
    for (Index j = 0; j < m.rows(); ++j) {
      Rational lhs = 0;
      for (Index i = 0; i < m.rows(); ++i) lhs += sol.coeffs[static_cast<std::size_t>(i)] * m(i, j);
      CHECK(lhs == targets[static_cast<std::size_t>(j)]);
    }
  }
}

TEST_CASE("Zariski decomposition examples") {
  const SurfaceData s = *fixture_hirzebruch2().surface;
  const VectorQ C = vec({1, 0}), F = vec({0, 1});
  const auto nef = zariski_decompose(s, divisor(s, {{"F1", 1}}));
  CHECK(nef.P == F);
  CHECK(nef.support.empty());

  const auto d = divisor(s, {{"C", 1}, {"F1", 1}});
  const auto z = zariski_decompose(s, d);
  CHECK(z.P == VectorQ(C / 2 + F));
  CHECK(z.N == VectorQ(C / 2));
  CHECK(s.lattice().pairing(z.P, C) == 0);
  CHECK(s.lattice().norm(z.P) == Rational(1, 2));
  check_decomposition(s, d, z);

  const auto only = zariski_decompose(s, divisor(s, {{"C", 1}}));
  CHECK(is_zero(only.P));
  CHECK(only.N == C);
}

TEST_CASE("Zariski decomposition on random effective divisors") {
  Rng rng(31);
  const std::vector<Fixture> fixtures{fixture_hirzebruch2(), fixture_del_pezzo(4), fixture_hesse_blowup()};
  for (const auto& f : fixtures) {
    const SurfaceData& s = *f.surface;
    std::vector<std::size_t> perm(s.curves().size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Curve> shuffled;
    for (auto i : perm) shuffled.push_back(s.curves()[i]);
    const SurfaceData t(s.lattice(), s.K(), shuffled, {}, Declarations{});
    for (int k = 0; k < 20; ++k) {
      const auto d = random_effective(s, rng);
      const auto z = zariski_decompose(s, d);
      check_decomposition(s, d, z);
      std::vector<Rational> dt;
      for (auto i : perm) dt.push_back(d[i]);
      const auto zt = zariski_decompose(t, dt);
      CHECK(zt.P == z.P);
      CHECK(zt.N == z.N);
    }
  }
}

TEST_CASE("Iitaka cases") {
  for (int r = 1; r <= 8; ++r) {
    const SurfaceData s = *fixture_del_pezzo(r).surface;
    const auto z = zariski_anticanonical(s);
    CHECK(s.lattice().norm(z.P) == 9 - r);
    CHECK(iitaka_case(s, z) == IitakaCase::Two);
  }
  const SurfaceData e1 = *fixture_e1().surface;
  CHECK(iitaka_case(e1, zariski_anticanonical(e1)) == IitakaCase::One);
  const SurfaceData hb = *fixture_hesse_blowup().surface;
  const auto zh = zariski_anticanonical(hb);
  CHECK(is_zero(zh.P));
  CHECK(iitaka_case(hb, zh) == IitakaCase::Zero);
}

TEST_CASE("(-1)-classes of del Pezzo lattices") {
  const std::size_t expected[] = {1, 3, 6, 10, 16, 27, 56};
  for (int r = 1; r <= 7; ++r) {
    const auto m = minus_one_classes(*fixture_del_pezzo(r).surface, 100);
    CHECK(m.complete);
    CHECK(m.classes.size() == expected[r - 1]);
    CHECK(m.classes.size() == brute_force_minus_one_count(r));
  }
}

TEST_CASE("(-1)-classes grow on the nine-point blow-up") {
  const SurfaceData s = *fixture_bl9().surface;
  const auto a = minus_one_classes(s, 1), b = minus_one_classes(s, 2);
  CHECK_FALSE(a.complete);
  CHECK(a.exhaustive_to_bound);
  CHECK(a.classes.size() == 9);
  CHECK(b.classes.size() == 9 + 36);
  for (const auto& e : b.classes) {
    CHECK(s.lattice().norm(e) == -1);
    CHECK(s.lattice().pairing(s.K(), e) == -1);
  }
}

TEST_CASE("curve types") {
  CHECK(curve_types({Rational(1, 2)}) == std::vector<std::vector<Integer>>{{Integer(2)}});
  CHECK(curve_types({Rational(1)}) == std::vector<std::vector<Integer>>{{Integer(1)}});
  // Stars and bars: solutions of l_1 + ... + l_9 = 3 number C(11, 8).
  const auto t = curve_types(std::vector<Rational>(9, Rational(1, 3)));
  CHECK(t.size() == 11 * 10 * 9 / 6);
  CHECK(std::is_sorted(t.begin(), t.end()));
  CHECK(code_of([] { curve_types(std::vector<Rational>{}); }) == ErrorCode::EmptySupport);

  const SurfaceData hb = *fixture_hesse_blowup().surface;
  const auto z = zariski_anticanonical(hb);
  for (int q = 1; q <= 12; ++q) {
    const auto lambda = curve_type_of(hb, z, hb.curves()[*hb.curve_index("e" + std::to_string(q))].cls);
    Rational sum = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) sum += z.coeffs[i] * Rational(lambda[i]);
    CHECK(sum == 1);
    CHECK(std::find(t.begin(), t.end(), lambda) != t.end());
  }
}

TEST_CASE("Mordell-Weil action") {
  const SurfaceData s = *fixture_e1().surface;
  CHECK(mordell_weil_action(s, VectorQ::Zero(10)).matrix() == MatrixQ::Identity(10, 10));
  const VectorQ x = unit(10, 1) - unit(10, 2), e9 = unit(10, 9);
  const Isometry phi = mordell_weil_action(s, x);
  const VectorQ image = phi.apply(e9);
  CHECK(image == vec({3, 0, -2, -1, -1, -1, -1, -1, -1, 0}));
  CHECK(s.lattice().norm(image) == -1);
  CHECK(s.lattice().pairing(image, VectorQ(-s.K())) == 1);
  CHECK(phi.apply(VectorQ(-s.K())) == VectorQ(-s.K()));
  CHECK(code_of([&] { mordell_weil_action(s, unit(10, 0)); }) == ErrorCode::PreconditionViolated);

  Rng rng(8);
  const VectorQ bP = -s.K();
  for (int t = 0; t < 20; ++t) {
    const VectorQ a = random_perp(s.lattice(), bP, rng, 3), b = random_perp(s.lattice(), bP, rng, 3);
    const Isometry pa = mordell_weil_action(s, a), pb = mordell_weil_action(s, b);
    CHECK((pa * pb).matrix() == mordell_weil_action(s, VectorQ(a + b)).matrix());
    CHECK(MatrixQ(pa.matrix().transpose() * s.lattice().gram() * pa.matrix()) == s.lattice().gram());
  }
}

TEST_CASE("(-1)-classes map to (-1)-classes under the Mordell-Weil action") {
  const SurfaceData s = *fixture_e1().surface;
  const auto m = minus_one_classes(s, 2);
  const auto data = mordell_weil_group_data(s);
  REQUIRE(data.action_basis.cols() == 8);
  for (Index j = 0; j < data.action_basis.cols(); ++j) {
    const Isometry phi = mordell_weil_action(s, to_rational(VectorZ(data.action_basis.col(j))));
    for (const auto& e : m.classes) {
      const VectorQ img = phi.apply(e);
      CHECK(s.lattice().norm(img) == -1);
      CHECK(s.lattice().pairing(s.K(), img) == -1);
      const Rational deg = s.lattice().pairing(s.lattice().ample(), img);
      if (deg > 0 && deg <= 2) CHECK(std::find(m.classes.begin(), m.classes.end(), img) != m.classes.end());
    }
  }
}

TEST_CASE("Mordell-Weil group data") {
  CHECK(mordell_weil_group_data(*fixture_e1().surface).rank == 8);
  CHECK(mordell_weil_group_data(*fixture_hirzebruch2().surface).rank == 0);
  const Fixture e1 = fixture_e1();
  const VectorQ P = -e1.surface->K();
  std::vector<VectorQ> comps;
  for (int i = 1; i <= 8; ++i) comps.push_back(unit(10, i) - unit(10, i + 1));
  const auto d = mordell_weil_group_data(e1.lattice, P, 1, comps);
  CHECK(d.rank == 0);
  const auto part = mordell_weil_group_data(e1.lattice, P, 1, {comps[0], comps[1]});
  CHECK(part.rank == 6);
  CHECK(code_of([&] { mordell_weil_group_data(e1.lattice, unit(10, 0), 1, {}); }) == ErrorCode::NotIsotropic);
}

TEST_CASE("Pi_E cones") {
  // Two-point blow-up: nef cone spanned by h, h - e1, h - e2.
  const SurfaceData s = *fixture_del_pezzo(2).surface;
  const PolyCone nef = s.nef_cone();
  CHECK(nef.rays() == std::vector<VectorQ>{vec({1, -1, 0}), vec({1, 0, -1}), vec({1, 0, 0})});
  const VectorQ P = vec({1, -1, 0});
  const PolyCone pi = pi_E_cone(s.lattice(), P, vec({0, 1, 0}), nef);
  CHECK(pi.rays() == nef.rays());
  CHECK(face(s.lattice(), nef, {vec({0, 1, 0})}).rays() == std::vector<VectorQ>{vec({1, 0, -1}), vec({1, 0, 0})});
  // h - e1 - e2 is orthogonal to both isotropic nef classes.
  CHECK(code_of([&] { pi_E_cone(s.lattice(), P, vec({1, -1, -1}), nef); }) == ErrorCode::PreconditionViolated);

  // Union check: sampled nef points lie in some Pi_E.
  Rng rng(6);
  const auto curves = minus_one_classes(s, 100).classes;
  for (int t = 0; t < 50; ++t) {
    VectorQ x = VectorQ::Zero(3);
    for (const auto& r : nef.rays()) x += Rational(uniform(rng, 0, 5)) * r;
    bool found = false;
    for (const auto& e : curves)
      if (s.lattice().pairing(e, P) > 0 && pi_E_cone(s.lattice(), P, e, nef).contains(x)) found = true;
    CHECK(found);
  }
}

TEST_CASE("classification") {
  const auto dp6 = classify_cone(*fixture_del_pezzo(6).surface, {1, 2, 3});
  CHECK(dp6.verdict == ConeVerdict::PolyhedralCertified);
  CHECK(dp6.facet_count == 27);
  CHECK(classify_cone(*fixture_hirzebruch2().surface, {1, 2, 3}).verdict == ConeVerdict::PolyhedralCertified);
}

TEST_CASE("surface validation") {
  const Fixture f = fixture_hirzebruch2();
  const auto& s = *f.surface;
  auto curves = s.curves();
  curves.push_back(curves[0]);
  CHECK(code_of([&] { SurfaceData(s.lattice(), s.K(), curves, {}, {}); }) == ErrorCode::InvalidFixture);
  CHECK(code_of([&] { SurfaceData(s.lattice(), s.K(), s.curves(), {{0, Rational(1)}}, {}); }) == ErrorCode::InvalidFixture);
  Declarations cy;
  cy.calabi_yau = true;
  CHECK(code_of([&] { SurfaceData(s.lattice(), s.K(), s.curves(), {}, cy); }) == ErrorCode::InvalidFixture);
}
