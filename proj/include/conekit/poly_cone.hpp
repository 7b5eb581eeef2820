#pragma once

#include "conekit/lorentz_lattice.hpp"

#include <vector>

namespace conekit {

/// Generators of {x : A x >= 0}. The lineality space comes back as a basis; the rays are the
/// extreme rays of the cone's intersection with the row space of A, primitive integral and
/// sorted lexicographically. No constraints at all gives the whole space.
struct ExtremeRays {
  std::vector<VectorQ> lineality;
  std::vector<VectorQ> rays;
};

ExtremeRays extreme_rays(const std::vector<VectorQ>& constraints, Index dim);

/// A rational polyhedral cone held in both representations. Facets are dual-coordinate
/// functionals f (the halfspace f.x >= 0); an equation f.x = 0 appears as the pair f, -f.
/// For a pointed cone `rays` generates it; otherwise rays together with +/- lineality do.
class PolyCone {
 public:
  static PolyCone from_rays(const std::vector<VectorQ>& rays, Index dim);
  static PolyCone from_facets(const std::vector<VectorQ>& facets, Index dim);

  Index dim() const { return dim_; }
  const std::vector<VectorQ>& rays() const { return rays_; }
  const std::vector<VectorQ>& facets() const { return facets_; }
  const std::vector<VectorQ>& lineality() const { return lineality_; }
  bool pointed() const { return lineality_.empty(); }
  /// Dimension of the linear span of the cone.
  Index span_dim() const;

  bool contains(const VectorQ& x) const;
  /// Every facet that is not part of an equation pair is strictly positive at x.
  bool relative_interior_contains(const VectorQ& x) const;

  /// Facets that are genuine inequalities (not half of an equation pair).
  std::vector<VectorQ> inequality_facets() const;

  bool operator==(const PolyCone& other) const = default;

 private:
  PolyCone() = default;
  static PolyCone assemble(const ExtremeRays& primal, const ExtremeRays& dual, Index dim);

  Index dim_ = 0;
  std::vector<VectorQ> rays_;
  std::vector<VectorQ> facets_;
  std::vector<VectorQ> lineality_;
};

/// The face of C on which every functional vanishes. Throws NotSupporting when a functional
/// takes a negative value on C.
PolyCone face(const PolyCone& cone, const std::vector<VectorQ>& functionals);

/// Same, with lattice classes v standing for the functionals x -> <x, v>.
PolyCone face(const LorentzLattice& lattice, const PolyCone& cone, const std::vector<VectorQ>& classes);

/// Converts dual-coordinate facets to lattice classes (f = G v).
std::vector<VectorQ> facet_classes(const LorentzLattice& lattice, const PolyCone& cone);

}  // namespace conekit
