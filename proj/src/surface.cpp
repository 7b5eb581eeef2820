#include "conekit/surface.hpp"

#include "conekit/enumeration.hpp"
#include "conekit/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace conekit {

SurfaceData::SurfaceData(LorentzLattice lattice, VectorQ K, std::vector<Curve> curves, std::vector<DeltaTerm> delta,
                         Declarations declares)
    : lattice_(std::move(lattice)), K_(std::move(K)), curves_(std::move(curves)), delta_(std::move(delta)),
      declares_(std::move(declares)) {
  lattice_.check_dim(K_);
  if (!is_integral(K_)) fail(ErrorCode::InvalidFixture, "canonical class must be integral");
  std::set<std::string> names;
  for (const auto& c : curves_) {
    lattice_.check_dim(c.cls);
    if (!is_integral(c.cls)) fail(ErrorCode::InvalidFixture, "curve " + c.name + " has a non-integral class");
    if (is_zero(c.cls)) fail(ErrorCode::InvalidFixture, "curve " + c.name + " has the zero class");
    if (!names.insert(c.name).second) fail(ErrorCode::InvalidFixture, "duplicate curve name " + c.name);
  }
  std::set<std::size_t> used;
  for (const auto& d : delta_) {
    if (d.curve >= curves_.size()) fail(ErrorCode::InvalidFixture, "boundary term refers to a missing curve");
    if (!used.insert(d.curve).second) fail(ErrorCode::InvalidFixture, "boundary curve listed twice");
    if (d.coeff < 0 || d.coeff >= 1) fail(ErrorCode::InvalidFixture, "boundary coefficients must lie in [0,1)");
  }
  if (declares_.calabi_yau && !is_zero(log_canonical()))
    fail(ErrorCode::InvalidFixture, "declared Calabi-Yau but K + Delta = " + to_string(log_canonical()));
  if (declares_.fibration) {
    const auto& f = *declares_.fibration;
    lattice_.check_dim(f.P);
    if (is_zero(f.P) || lattice_.norm(f.P) != 0) fail(ErrorCode::InvalidFixture, "fibration class must be isotropic");
    if (lattice_.pairing(lattice_.ample(), f.P) <= 0) fail(ErrorCode::InvalidFixture, "fibration class must be positive");
    if (f.a <= 0 || f.b <= 0) fail(ErrorCode::InvalidFixture, "fibration constants a, b must be positive");
    for (const auto& c : curves_)
      if (c.in_fiber && lattice_.pairing(c.cls, f.P) != 0)
        fail(ErrorCode::InvalidFixture, "fiber curve " + c.name + " meets the fiber class");
  }
}

std::optional<std::size_t> SurfaceData::curve_index(const std::string& name) const {
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (curves_[i].name == name) return i;
  return std::nullopt;
}

VectorQ SurfaceData::log_canonical() const {
  VectorQ v = K_;
  for (const auto& d : delta_) v += d.coeff * curves_[d.curve].cls;
  return v;
}

std::vector<Rational> SurfaceData::delta_coefficients() const {
  std::vector<Rational> out(curves_.size(), Rational(0));
  for (const auto& d : delta_) out[d.curve] = d.coeff;
  return out;
}

std::vector<VectorQ> SurfaceData::curve_functionals() const {
  std::vector<VectorQ> out;
  for (const auto& c : curves_) out.push_back(lattice_.functional(c.cls));
  return out;
}

bool SurfaceData::nef_against_list(const VectorQ& v) const {
  return std::all_of(curves_.begin(), curves_.end(), [&](const Curve& c) { return lattice_.pairing(v, c.cls) >= 0; });
}

PolyCone SurfaceData::nef_cone() const { return PolyCone::from_facets(curve_functionals(), rank()); }

Rational riemann_roch_chi(const SurfaceData& s, const VectorQ& L) {
  if (!s.declares().rational_surface)
    fail(ErrorCode::PreconditionViolated, "Riemann-Roch with chi(O) = 1 needs a rational surface");
  const auto& lat = s.lattice();
  return (lat.norm(L) - lat.pairing(L, s.K())) / 2 + 1;
}

EffectivityWitness nef_is_effective(const SurfaceData& s, const VectorQ& L) {
  if (!is_integral(L)) fail(ErrorCode::PreconditionViolated, "nef_is_effective: class is not integral");
  if (!s.nef_against_list(L)) fail(ErrorCode::PreconditionViolated, "nef_is_effective: class is not nef against the list");
  if (!s.declares().anti_K_effective) fail(ErrorCode::PreconditionViolated, "nef_is_effective: -K is not declared effective");
  const Rational chi = riemann_roch_chi(s, L);
  return {chi >= 1, chi};
}

NegativitySolution negativity_solve(const MatrixQ& m, const std::vector<Rational>& targets) {
  const Index n = m.rows();
  if (m.cols() != n || static_cast<Index>(targets.size()) != n)
    fail(ErrorCode::DimensionMismatch, "negativity_solve: one target per support curve");
  if (!is_negative_definite(m)) fail(ErrorCode::NotNegativeDefinite, "negativity_solve: intersection matrix is not negative definite");
  NegativitySolution out;
  if (n > 0) {
    const auto sol = solve(m, from_std(targets));
    if (!sol) fail(ErrorCode::Internal, "negativity_solve: singular negative definite system");
    out.coeffs = to_std(*sol);
  }
  // Dual graph components.
  std::vector<std::size_t> comp(static_cast<std::size_t>(n), static_cast<std::size_t>(-1));
  for (Index start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] != static_cast<std::size_t>(-1)) continue;
    std::vector<std::size_t> members{static_cast<std::size_t>(start)};
    comp[static_cast<std::size_t>(start)] = out.components.size();
    for (std::size_t k = 0; k < members.size(); ++k)
      for (Index j = 0; j < n; ++j)
        if (j != static_cast<Index>(members[k]) && m(static_cast<Index>(members[k]), j) != 0 &&
            comp[static_cast<std::size_t>(j)] == static_cast<std::size_t>(-1)) {
          comp[static_cast<std::size_t>(j)] = out.components.size();
          members.push_back(static_cast<std::size_t>(j));
        }
    std::sort(members.begin(), members.end());
    out.components.push_back(std::move(members));
  }
  out.nonnegative = std::all_of(out.coeffs.begin(), out.coeffs.end(), [](const Rational& a) { return a >= 0; });
  out.support_is_union_of_components = std::all_of(out.components.begin(), out.components.end(), [&](const auto& c) {
    const bool first = out.coeffs[c.front()] != 0;
    return std::all_of(c.begin(), c.end(), [&](std::size_t i) { return (out.coeffs[i] != 0) == first; });
  });
  const bool nonpositive = std::all_of(targets.begin(), targets.end(), [](const Rational& t) { return t <= 0; });
  if (nonpositive && !(out.nonnegative && out.support_is_union_of_components))
    fail(ErrorCode::Internal, "negativity_solve: solution contradicts the negativity lemma");
  return out;
}

NegativitySolution negativity_solve(const SurfaceData& s, const std::vector<std::size_t>& support,
                                    const std::vector<Rational>& targets) {
  const Index n = static_cast<Index>(support.size());
  MatrixQ m(n, n);
  for (Index i = 0; i < n; ++i) {
    if (support[static_cast<std::size_t>(i)] >= s.curves().size())
      fail(ErrorCode::PreconditionViolated, "negativity_solve: support index out of range");
    for (Index j = 0; j < n; ++j)
      m(i, j) = s.lattice().pairing(s.curves()[support[static_cast<std::size_t>(i)]].cls,
                                    s.curves()[support[static_cast<std::size_t>(j)]].cls);
  }
  return negativity_solve(m, targets);
}

ZariskiDecomp zariski_decompose(const SurfaceData& s, const std::vector<Rational>& d) {
  const auto& curves = s.curves();
  const auto& lat = s.lattice();
  if (d.size() != curves.size()) fail(ErrorCode::DimensionMismatch, "zariski_decompose: one coefficient per curve");
  VectorQ D = VectorQ::Zero(s.rank());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) fail(ErrorCode::PreconditionViolated, "zariski_decompose: divisor must be effective");
    D += d[i] * curves[i].cls;
  }
  std::vector<std::size_t> support;
  std::vector<Rational> coeffs;
  VectorQ P = D;
  for (;;) {
    std::vector<std::size_t> grow;
    for (std::size_t i = 0; i < curves.size(); ++i)
      if (lat.pairing(P, curves[i].cls) < 0) grow.push_back(i);
    if (grow.empty()) break;
    for (std::size_t i : grow)
      if (std::find(support.begin(), support.end(), i) != support.end())
        fail(ErrorCode::Internal, "zariski_decompose: support curve became negative again");
    support.insert(support.end(), grow.begin(), grow.end());
    std::sort(support.begin(), support.end());
    std::vector<Rational> targets;
    for (std::size_t i : support) targets.push_back(lat.pairing(D, curves[i].cls));
    coeffs = negativity_solve(s, support, targets).coeffs;
    P = D;
    for (std::size_t k = 0; k < support.size(); ++k) P -= coeffs[k] * curves[support[k]].cls;
  }
  ZariskiDecomp z{P, {}, {}, VectorQ::Zero(s.rank())};
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (coeffs[k] < 0) fail(ErrorCode::Internal, "zariski_decompose: negative coefficient in N");
    if (coeffs[k] == 0) continue;
    z.support.push_back(support[k]);
    z.coeffs.push_back(coeffs[k]);
    z.N += coeffs[k] * curves[support[k]].cls;
  }
  return z;
}

ZariskiDecomp zariski_anticanonical(const SurfaceData& s) {
  if (!is_zero(s.log_canonical()))
    fail(ErrorCode::PreconditionViolated, "zariski_anticanonical: -K is not the boundary (K + Delta != 0)");
  return zariski_decompose(s, s.delta_coefficients());
}

std::string to_string(IitakaCase c) {
  switch (c) {
    case IitakaCase::Zero: return "zero";
    case IitakaCase::One: return "one";
    case IitakaCase::Two: return "two";
  }
  return "unknown";
}

IitakaCase iitaka_case(const SurfaceData& s, const ZariskiDecomp& z) {
  const Rational p2 = s.lattice().norm(z.P);
  if (p2 > 0) return IitakaCase::Two;
  if (is_zero(z.P)) return IitakaCase::Zero;
  return IitakaCase::One;
}

MinusOneResult minus_one_classes(const SurfaceData& s, long degree_bound) {
  const auto& lat = s.lattice();
  const VectorQ& A = lat.ample();
  const VectorQ gk = lat.functional(s.K());
  const VectorQ ga = lat.functional(A);
  MinusOneResult out;
  auto by_degree = [&](const VectorQ& a, const VectorQ& b) {
    const Rational da = ga.dot(a), db = ga.dot(b);
    if (da != db) return da < db;
    return lex_less(a, b);
  };
  if (lat.norm(s.K()) > 0) {
    // K-perp is negative definite, so the whole solution set is finite.
    const auto all = enumerate_norm_slice(lat.gram(), {gk}, {Rational(-1)}, Rational(-1));
    if (all.truncated) fail(ErrorCode::BudgetExceeded, "minus_one_classes: enumeration cap reached");
    bool dropped = false;
    for (const auto& e : all.points) {
      const Rational deg = ga.dot(e);
      if (deg > 0 && deg <= degree_bound) out.classes.push_back(e);
      else dropped = true;
    }
    out.complete = !dropped;
    out.exhaustive_to_bound = true;
    out.method = "finite search on K.E = -1 (K-perp negative definite)";
  } else {
    for (long d = 1; d <= degree_bound; ++d) {
      const auto slice = enumerate_norm_slice(lat.gram(), {ga, gk}, {Rational(d), Rational(-1)}, Rational(-1));
      if (slice.truncated) fail(ErrorCode::BudgetExceeded, "minus_one_classes: enumeration cap reached");
      out.classes.insert(out.classes.end(), slice.points.begin(), slice.points.end());
    }
    out.complete = false;
    out.exhaustive_to_bound = true;
    out.method = "degree slices A.E = d for d = 1.." + std::to_string(degree_bound);
  }
  std::sort(out.classes.begin(), out.classes.end(), by_degree);
  return out;
}

namespace {

void types_rec(const std::vector<Rational>& a, std::size_t i, const Rational& remaining, std::vector<Integer>& cur,
               std::vector<std::vector<Integer>>& out) {
  if (i == a.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (Integer l = 0; Rational(l) * a[i] <= remaining; ++l) {
    cur[i] = l;
    types_rec(a, i + 1, remaining - Rational(l) * a[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<std::vector<Integer>> curve_types(const std::vector<Rational>& a) {
  if (a.empty()) fail(ErrorCode::EmptySupport, "curve_types: the negative part is empty");
  for (const auto& x : a)
    if (x <= 0) fail(ErrorCode::PreconditionViolated, "curve_types: coefficients must be positive");
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> cur(a.size(), Integer(0));
  types_rec(a, 0, Rational(1), cur, out);
  return out;
}

std::vector<std::vector<Integer>> curve_types(const ZariskiDecomp& z) { return curve_types(z.coeffs); }

std::vector<Integer> curve_type_of(const SurfaceData& s, const ZariskiDecomp& z, const VectorQ& E) {
  std::vector<Integer> out;
  for (std::size_t i : z.support) {
    const Rational v = s.lattice().pairing(E, s.curves()[i].cls);
    if (!is_integer(v)) fail(ErrorCode::PreconditionViolated, "curve_type_of: non-integral intersection");
    out.push_back(mp::numerator(v));
  }
  return out;
}

Isometry mordell_weil_action(const SurfaceData& s, const VectorQ& x) {
  if (!s.declares().fibration) fail(ErrorCode::PreconditionViolated, "mordell_weil_action: no fibration declared");
  const auto& f = *s.declares().fibration;
  const VectorQ bP = f.P * Rational(f.b);
  if (s.lattice().pairing(x, bP) != 0) fail(ErrorCode::PreconditionViolated, "mordell_weil_action: x . bP != 0");
  for (const auto& c : s.curves())
    if (c.in_fiber && s.lattice().pairing(x, c.cls) != 0)
      fail(ErrorCode::PreconditionViolated, "mordell_weil_action: x meets the fiber curve " + c.name);
  return parabolic_map(s.lattice(), bP, x);
}

MordellWeilData mordell_weil_group_data(const LorentzLattice& lattice, const VectorQ& P, const Integer& a,
                                        const std::vector<VectorQ>& fiber_components) {
  lattice.check_dim(P);
  if (is_zero(P) || lattice.norm(P) != 0) fail(ErrorCode::NotIsotropic, "mordell_weil_group_data: P is not isotropic");
  const Index n = lattice.rank();
  const VectorQ gp = primitive_integral(lattice.functional(P));
  MatrixZ row(1, n);
  row.row(0) = to_integer(gp).transpose();
  const MatrixZ perp = integer_kernel(row);

  std::vector<VectorQ> relations{VectorQ(P * Rational(a))};
  relations.insert(relations.end(), fiber_components.begin(), fiber_components.end());
  MatrixZ rel(perp.cols(), static_cast<Index>(relations.size()));
  for (std::size_t j = 0; j < relations.size(); ++j) {
    if (!is_integral(relations[j])) fail(ErrorCode::PreconditionViolated, "mordell_weil_group_data: relation is not integral");
    const auto c = integer_coordinates(perp, to_integer(relations[j]));
    if (!c) fail(ErrorCode::PreconditionViolated, "mordell_weil_group_data: relation is not orthogonal to P");
    rel.col(static_cast<Index>(j)) = *c;
  }
  MordellWeilData out;
  const auto inv = smith_invariants(rel);
  out.rank = perp.cols() - static_cast<Index>(inv.size());
  for (const auto& d : inv)
    if (d > 1) out.torsion.push_back(d);

  // Translations: integral x orthogonal to P and to every fiber component, modulo Z P.
  MatrixZ rows(1 + static_cast<Index>(fiber_components.size()), n);
  rows.row(0) = row.row(0);
  for (std::size_t j = 0; j < fiber_components.size(); ++j)
    rows.row(1 + static_cast<Index>(j)) = to_integer(primitive_integral(lattice.functional(fiber_components[j]))).transpose();
  const MatrixZ w = integer_kernel(rows);
  const auto pc = integer_coordinates(w, to_integer(primitive_integral(P)));
  if (!pc) fail(ErrorCode::Internal, "mordell_weil_group_data: P is not in its own orthogonal lattice");
  const MatrixZ u = extend_to_unimodular(*pc);
  const auto ch = column_hermite(MatrixZ(w * u.rightCols(u.cols() - 1)));
  out.action_basis = ch.h.leftCols(ch.rank);
  return out;
}

MordellWeilData mordell_weil_group_data(const SurfaceData& s) {
  if (!s.declares().fibration) fail(ErrorCode::PreconditionViolated, "mordell_weil_group_data: no fibration declared");
  std::vector<VectorQ> fiber;
  for (const auto& c : s.curves())
    if (c.in_fiber) fiber.push_back(c.cls);
  return mordell_weil_group_data(s.lattice(), s.declares().fibration->P, s.declares().fibration->a, fiber);
}

PolyCone pi_E_cone(const LorentzLattice& lattice, const VectorQ& P, const VectorQ& E, const PolyCone& nef_cone) {
  if (lattice.norm(P) != 0 || is_zero(P)) fail(ErrorCode::PreconditionViolated, "pi_E_cone: P must be nonzero with P^2 = 0");
  if (lattice.pairing(E, P) <= 0) fail(ErrorCode::PreconditionViolated, "pi_E_cone: E lies in a fiber (E.P = 0)");
  const PolyCone f = face(lattice, nef_cone, {E});
  std::vector<VectorQ> gens = f.rays();
  for (const auto& l : f.lineality()) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  gens.push_back(primitive_integral(P));
  return PolyCone::from_rays(gens, lattice.rank());
}

PolyCone pi_E_cone(const SurfaceData& s, const ZariskiDecomp& z, const VectorQ& E, const PolyCone& nef_cone) {
  return pi_E_cone(s.lattice(), z.P, E, nef_cone);
}

std::string to_string(ConeVerdict v) {
  switch (v) {
    case ConeVerdict::PolyhedralCertified: return "PolyhedralCertified";
    case ConeVerdict::NotPolyhedralWithinBound: return "NotPolyhedralWithinBound";
    case ConeVerdict::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

ClassifyReport classify_cone(const SurfaceData& s, const std::vector<long>& bounds) {
  ClassifyReport out;
  out.calabi_yau_declared = s.declares().calabi_yau;
  const auto& lat = s.lattice();
  if (lat.rank() <= 2) {
    out.verdict = ConeVerdict::PolyhedralCertified;
    out.condition = "Picard number at most 2: the nef cone is spanned by two rays";
    out.facet_count = s.nef_cone().facets().size();
    return out;
  }
  const VectorQ minus_k = -s.K();
  if (lat.norm(s.K()) > 0 && lat.pairing(lat.ample(), minus_k) > 0) {
    const auto all = minus_one_classes(s, std::numeric_limits<long>::max());
    out.counts = {all.classes.size()};
    std::vector<VectorQ> functionals;
    for (const auto& e : all.classes) functionals.push_back(lat.functional(e));
    for (const auto& f : s.curve_functionals()) functionals.push_back(f);
    const PolyCone nef = PolyCone::from_facets(functionals, lat.rank());
    out.facet_count = nef.facets().size();
    out.condition = "-K big and nef: the (-1)-classes form a complete finite list and the nef cone is their dual";
    out.verdict = all.complete && nef.pointed() ? ConeVerdict::PolyhedralCertified : ConeVerdict::Inconclusive;
    return out;
  }
  out.condition = "count of (-1)-classes by degree bound (each extremal K-negative ray needs one)";
  out.bounds = bounds;
  for (long b : bounds) out.counts.push_back(minus_one_classes(s, b).classes.size());
  bool increasing = out.counts.size() >= 3;
  for (std::size_t i = 1; i < out.counts.size(); ++i) increasing = increasing && out.counts[i] > out.counts[i - 1];
  out.verdict = increasing ? ConeVerdict::NotPolyhedralWithinBound : ConeVerdict::Inconclusive;
  return out;
}

}  // namespace conekit
