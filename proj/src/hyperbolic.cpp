#include "conekit/hyperbolic.hpp"

#include "conekit/error.hpp"

namespace conekit {

namespace {

void require_interior(const LorentzLattice& lattice, const VectorQ& x, const char* what) {
  if (!in_positive_cone(lattice, x))
    fail(ErrorCode::BoundaryInput, std::string(what) + " is not an interior point: " + to_string(x));
}

void require_isotropic(const LorentzLattice& lattice, const VectorQ& e) {
  if (is_zero(e)) fail(ErrorCode::ZeroVector, "isotropic vector is zero");
  if (lattice.norm(e) != 0) fail(ErrorCode::NotIsotropic, "vector is not isotropic: " + to_string(e));
  if (lattice.pairing(lattice.ample(), e) < 0)
    fail(ErrorCode::WrongConeComponent, "isotropic vector lies in the negative cone: " + to_string(e));
}

}  // namespace

Horoball make_horoball(const LorentzLattice& lattice, const VectorQ& center, const Rational& scale) {
  require_isotropic(lattice, center);
  if (!is_integral(center) || content(center) != 1)
    fail(ErrorCode::PreconditionViolated, "horoball center must be primitive integral");
  if (scale <= 0) fail(ErrorCode::NotPositive, "horoball scale must be positive");
  return {center, scale};
}

Rational cosh_sq_distance(const LorentzLattice& lattice, const VectorQ& x, const VectorQ& y) {
  require_interior(lattice, x, "x");
  require_interior(lattice, y, "y");
  const Rational p = lattice.pairing(x, y);
  return p * p / (lattice.norm(x) * lattice.norm(y));
}

bool lemma_ineq_holds(const LorentzLattice& lattice, const VectorQ& x, const VectorQ& e1, const VectorQ& e2) {
  require_interior(lattice, x, "x");
  require_isotropic(lattice, e1);
  require_isotropic(lattice, e2);
  return lattice.pairing(e1, e2) * lattice.norm(x) <= 2 * lattice.pairing(x, e1) * lattice.pairing(x, e2);
}

bool horoball_contains(const LorentzLattice& lattice, const Horoball& ball, const VectorQ& x) {
  require_interior(lattice, x, "x");
  const Rational p = lattice.pairing(x, ball.center);
  return 4 * p * p <= ball.scale * ball.scale * lattice.norm(x);
}

bool horoballs_disjoint(const LorentzLattice& lattice, const Horoball& a, const Horoball& b) {
  if (a.center == b.center || a.center == -b.center)
    fail(ErrorCode::EqualCenters, "horoballs share the center " + to_string(a.center));
  return lattice.pairing(a.center, b.center) >= 1;
}

VectorQ bisector_halfspace(const LorentzLattice& lattice, const VectorQ& y, const VectorQ& z) {
  require_interior(lattice, y, "y");
  require_interior(lattice, z, "z");
  if (same_ray(y, z)) fail(ErrorCode::ProportionalInputs, "bisector of proportional points");
  // Rescale z to the norm of y when the ratio is a rational square; otherwise the
  // bisector is not a linear halfspace.
  const Rational ny = lattice.norm(y), nz = lattice.norm(z);
  VectorQ zz = z;
  if (ny != nz) {
    const Rational ratio = ny / nz;
    const Integer p = mp::sqrt(mp::numerator(ratio)), q = mp::sqrt(mp::denominator(ratio));
    if (p * p != mp::numerator(ratio) || q * q != mp::denominator(ratio))
      fail(ErrorCode::PreconditionViolated, "bisector of points whose norm ratio is not a rational square");
    zz = z * Rational(p, q);
  }
  return lattice.functional(VectorQ(zz - y));
}

bool closer_to_first(const LorentzLattice& lattice, const VectorQ& x, const VectorQ& y, const VectorQ& z) {
  const Rational py = lattice.pairing(x, y), pz = lattice.pairing(x, z);
  return py * py * lattice.norm(z) <= pz * pz * lattice.norm(y);
}

}  // namespace conekit
