#pragma once

// Intersection theory on the Picard lattice of a surface. "Nef" always means nef against the
// declared curve list.

#include "conekit/isometry.hpp"
#include "conekit/lorentz_lattice.hpp"
#include "conekit/poly_cone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conekit {

struct Curve {
  std::string name;
  VectorQ cls;
  bool in_fiber = false;
};

struct DeltaTerm {
  std::size_t curve = 0;
  Rational coeff;
};

struct Fibration {
  VectorQ P;     // isotropic class of a fiber (up to the multiplicity a)
  Integer a = 1;
  Integer b = 1;
};

/// Geometric facts that the lattice alone cannot certify.
struct Declarations {
  bool rational_surface = false;
  bool anti_K_effective = false;
  bool calabi_yau = false;  // K + Delta is numerically trivial and the pair is klt
  std::optional<Fibration> fibration;
};

class SurfaceData {
 public:
  SurfaceData(LorentzLattice lattice, VectorQ K, std::vector<Curve> curves, std::vector<DeltaTerm> delta,
              Declarations declares);

  const LorentzLattice& lattice() const { return lattice_; }
  const VectorQ& K() const { return K_; }
  const std::vector<Curve>& curves() const { return curves_; }
  const std::vector<DeltaTerm>& delta() const { return delta_; }
  const Declarations& declares() const { return declares_; }

  Index rank() const { return lattice_.rank(); }
  std::optional<std::size_t> curve_index(const std::string& name) const;
  /// K + sum of coeff * curve.
  VectorQ log_canonical() const;
  /// Delta as coefficients over the curve list.
  std::vector<Rational> delta_coefficients() const;
  /// Functionals x -> <x, C> for every listed curve.
  std::vector<VectorQ> curve_functionals() const;
  /// P . C >= 0 for every listed curve.
  bool nef_against_list(const VectorQ& v) const;
  /// {x : x . C >= 0 for all listed curves}.
  PolyCone nef_cone() const;

 private:
  LorentzLattice lattice_;
  VectorQ K_;
  std::vector<Curve> curves_;
  std::vector<DeltaTerm> delta_;
  Declarations declares_;
};

/// (L^2 - L.K) / 2 + 1; needs a rational surface.
Rational riemann_roch_chi(const SurfaceData& s, const VectorQ& L);

struct EffectivityWitness {
  bool effective = false;
  Rational chi;
};

/// For L nef against the list on a rational surface with -K effective, chi(L) >= 1 and hence
/// h^0(L) >= 1.
EffectivityWitness nef_is_effective(const SurfaceData& s, const VectorQ& L);

struct NegativitySolution {
  std::vector<Rational> coeffs;                   // one per support curve
  std::vector<std::vector<std::size_t>> components;  // dual graph components, positions in the support
  bool nonnegative = false;
  bool support_is_union_of_components = false;
};

/// Solves sum_i a_i (N_i . N_j) = target_j for a negative definite intersection matrix. When
/// all targets are <= 0 the solution must be nonnegative with support a union of dual graph
/// components; a failure of either is reported as an Internal error.
NegativitySolution negativity_solve(const MatrixQ& intersections, const std::vector<Rational>& targets);
NegativitySolution negativity_solve(const SurfaceData& s, const std::vector<std::size_t>& support,
                                    const std::vector<Rational>& targets);

struct ZariskiDecomp {
  VectorQ P;
  std::vector<std::size_t> support;  // sorted curve indices
  std::vector<Rational> coeffs;      // strictly positive, aligned with support
  VectorQ N;                         // sum coeff * curve
};

/// D = sum d_i C_i with d_i >= 0 over the curve list. Grows the negative support by the
/// curves on which the current positive part is negative until it is nef against the list.
ZariskiDecomp zariski_decompose(const SurfaceData& s, const std::vector<Rational>& d);
/// Decomposition of -K, written as -K = sum of the Delta terms (requires K + Delta = 0).
ZariskiDecomp zariski_anticanonical(const SurfaceData& s);

enum class IitakaCase { Zero, One, Two };
std::string to_string(IitakaCase c);
IitakaCase iitaka_case(const SurfaceData& s, const ZariskiDecomp& z);

struct MinusOneResult {
  std::vector<VectorQ> classes;  // sorted by degree A.E, then lexicographically
  /// The list is every (-1)-class of the lattice (the search region was finite).
  bool complete = false;
  /// Every (-1)-class with 0 < A.E <= bound is listed.
  bool exhaustive_to_bound = false;
  std::string method;
};

/// Integral E with E^2 = -1, K.E = -1 and 0 < A.E <= degree_bound.
MinusOneResult minus_one_classes(const SurfaceData& s, long degree_bound);

/// All lambda in N^r with sum a_i lambda_i = 1, in lexicographic order.
std::vector<std::vector<Integer>> curve_types(const std::vector<Rational>& a);
std::vector<std::vector<Integer>> curve_types(const ZariskiDecomp& z);
/// (E . N_i) over the support of z.
std::vector<Integer> curve_type_of(const SurfaceData& s, const ZariskiDecomp& z, const VectorQ& E);

/// phi_x for the declared fibration: parabolic_map(e = bP, x) after checking x . bP = 0 and
/// x . C = 0 for every fiber curve.
Isometry mordell_weil_action(const SurfaceData& s, const VectorQ& x);

struct MordellWeilData {
  Index rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  MatrixZ action_basis;          // columns x with x . P = 0 = x . C_i, complementing Z P
};

MordellWeilData mordell_weil_group_data(const LorentzLattice& lattice, const VectorQ& P, const Integer& a,
                                        const std::vector<VectorQ>& fiber_components);
MordellWeilData mordell_weil_group_data(const SurfaceData& s);

/// Cone spanned by P and the face of the nef cone orthogonal to E. Needs P^2 = 0 and E.P > 0.
PolyCone pi_E_cone(const LorentzLattice& lattice, const VectorQ& P, const VectorQ& E, const PolyCone& nef_cone);
PolyCone pi_E_cone(const SurfaceData& s, const ZariskiDecomp& z, const VectorQ& E, const PolyCone& nef_cone);

enum class ConeVerdict { PolyhedralCertified, NotPolyhedralWithinBound, Inconclusive };
std::string to_string(ConeVerdict v);

struct ClassifyReport {
  ConeVerdict verdict = ConeVerdict::Inconclusive;
  std::string condition;
  bool calabi_yau_declared = false;
  std::vector<long> bounds;
  std::vector<std::size_t> counts;  // (-1)-classes up to each bound
  std::optional<std::size_t> facet_count;
};

/// Semi-decision for rational polyhedrality of the nef cone.
ClassifyReport classify_cone(const SurfaceData& s, const std::vector<long>& bounds);

}  // namespace conekit
