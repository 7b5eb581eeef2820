#pragma once

// Hyperbolic space as the positive cone modulo positive scalars. Every predicate is written
// in squared, cross-multiplied form so that no square roots are needed.

#include "conekit/lorentz_lattice.hpp"

namespace conekit {

struct Horoball {
  VectorQ center;          // primitive integral isotropic vector in the closed positive cone
  Rational scale = 1;      // c; the unit horoball is {x : <x,e> <= (1/2) sqrt(x^2)}
};

/// Validates center and scale.
Horoball make_horoball(const LorentzLattice& lattice, const VectorQ& center, const Rational& scale = 1);

/// <x,y>^2 / (x^2 y^2), the squared hyperbolic cosine of the distance. Throws
/// BoundaryInput unless both points have positive norm.
Rational cosh_sq_distance(const LorentzLattice& lattice, const VectorQ& x, const VectorQ& y);

/// <e1,e2> x^2 <= 2 <x,e1><x,e2> for interior x and isotropic e1, e2 in the closed cone.
bool lemma_ineq_holds(const LorentzLattice& lattice, const VectorQ& x, const VectorQ& e1, const VectorQ& e2);

/// 4 <x,e>^2 <= c^2 x^2.
bool horoball_contains(const LorentzLattice& lattice, const Horoball& ball, const VectorQ& x);

/// True when <e1,e2> >= 1, which rules out a common point of the two unit horoballs.
bool horoballs_disjoint(const LorentzLattice& lattice, const Horoball& a, const Horoball& b);

/// Dual-coordinate functional f with f.x = <x, z - y>; nonnegative on the points at least as
/// close to y as to z, given y^2 = z^2. When the norms differ, the exact side test is
/// `closer_to_first`.
VectorQ bisector_halfspace(const LorentzLattice& lattice, const VectorQ& y, const VectorQ& z);

/// <x,y>^2 z^2 >= <x,z>^2 y^2, i.e. d(x,y) <= d(x,z), for arbitrary interior y, z.
bool closer_to_first(const LorentzLattice& lattice, const VectorQ& x, const VectorQ& y, const VectorQ& z);

}  // namespace conekit
