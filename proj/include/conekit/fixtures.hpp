#pragma once

#include "conekit/dirichlet.hpp"
#include "conekit/surface.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conekit {

struct Fixture {
  std::string name;
  std::string description;
  LorentzLattice lattice;
  std::optional<SurfaceData> surface;
  std::optional<GroupGens> group;
  std::optional<VectorQ> basepoint;
  std::optional<DirichletOptions> dirichlet;
  /// Known answers checked by `self_test`, keyed by quantity.
  std::map<std::string, std::string> expected;
};

/// diag(1, -1 x r), K = (-3, 1 x r), A = -K; curves are all (-1)-classes plus two
/// anticanonical curves carrying coefficient 1/2 each.
Fixture fixture_del_pezzo(int r);
/// Rational elliptic surface: nine points, fibration P = -K with a = b = 1, two fibers in the
/// boundary and the 45 sections of degree at most 2.
Fixture fixture_e1();
/// Blow-up of nine very general points: the cubic through them and the 45 (-1)-curves of
/// degree at most 2; not Calabi-Yau.
Fixture fixture_bl9();
/// Hermitian 2x2 matrices over the Eisenstein integers with twice the determinant form,
/// basis (E11, E22, B1, B2) where B1, B2 have off-diagonal entry 1, zeta. The group is the
/// image of GL(2, Z[zeta]) acting by M -> g M g^*; the factor of Aut acting trivially on the
/// lattice is not represented.
Fixture fixture_hesse();
/// P^2 blown up at the 12 points of the dual Hesse configuration; the 9 lines through four
/// of the points become disjoint (-3)-curves and Delta = (1/3) sum of them, so -K = N.
Fixture fixture_hesse_blowup();
/// The Hirzebruch surface F_2 in the basis (C, F): Picard number two, with a ruling.
Fixture fixture_hirzebruch2();
/// diag(1, -2) with the Pell automorph [[3,4],[2,3]] and basepoint (1, 0).
Fixture fixture_pell();

std::vector<std::string> fixture_names();
/// Built-in fixture by name ("del-pezzo-6", "e1", ...). Throws InvalidFixture.
Fixture load_builtin_fixture(const std::string& name);

/// Compares every expected answer with a fresh computation; returns the mismatches.
std::vector<std::string> self_test(const Fixture& f);

/// Arithmetic in Z[zeta], zeta = exp(2 pi i / 3): the pair (x, y) stands for x + y zeta.
struct Eisenstein {
  Integer x = 0;
  Integer y = 0;

  Eisenstein operator+(const Eisenstein& o) const { return {x + o.x, y + o.y}; }
  Eisenstein operator-(const Eisenstein& o) const { return {x - o.x, y - o.y}; }
  Eisenstein operator*(const Eisenstein& o) const { return {x * o.x - y * o.y, x * o.y + y * o.x - y * o.y}; }
  Eisenstein conj() const { return {x - y, -y}; }
  Integer norm() const { return x * x - x * y + y * y; }
  bool operator==(const Eisenstein&) const = default;
};

using EisensteinMatrix = std::array<std::array<Eisenstein, 2>, 2>;

/// Matrix of M -> g M g^* on the Hesse lattice coordinates (a, d, u, v) of
/// [[a, u + v zeta], [conj, d]].
MatrixQ hermitian_action(const EisensteinMatrix& g);

}  // namespace conekit
