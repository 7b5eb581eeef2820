#include "conekit/dirichlet.hpp"

#include "conekit/enumeration.hpp"
#include "conekit/error.hpp"
#include "conekit/hyperbolic.hpp"

#include <map>

namespace conekit {

namespace {

struct LexLess {
  bool operator()(const VectorQ& a, const VectorQ& b) const { return lex_less(a, b); }
};


// Every g that cuts the ball domain at a point x satisfies d(y, gy) < 2 d(y, x); for a
// compact domain the farthest points are vertices. An ideal vertex e is handled in the
// upper half space model with e at infinity, measuring heights by <x, e>:
//  - no orbit point is higher than y (no integral isotropic f has 0 < <f, y> < <e, y>),
//  - orbit points at the height of y cut out a polygon around y; those within twice its
//    radius are in the ball,
//  - orbit points below y cannot reach the cusp above a height fixed by the polygon radius
//    and the spacing of heights; the cusp is truncated there by a linear halfspace
//    <x, e> >= s <x, y>, and the truncated domain is compact.
void certify_vertices(const LorentzLattice& lattice, const GroupGens& group, const DirichletOptions& options,
                      const DirichletResult& out, std::vector<std::string>& reasons) {
  const VectorQ& y = out.basepoint;
  const Rational n = lattice.norm(y);
  const Rational& bound = options.cosh_sq_bound;
  std::vector<VectorQ> truncations;
  if (!out.boundary_rational_rays.empty()) {
    for (const auto& g : group.gens)
      if (!is_integral(g.matrix()) || !is_integral(g.inverse_matrix())) {
        reasons.push_back("ideal vertices with non-integral generators");
        return;
      }
    Integer den_y = 1;
    for (Index i = 0; i < y.size(); ++i) den_y = lcm(den_y, mp::denominator(y[i]));
    const VectorQ gy = lattice.functional(y);
    Integer den_gy = 1;
    for (Index i = 0; i < gy.size(); ++i) den_gy = lcm(den_gy, mp::denominator(gy[i]));
    for (const auto& e : out.boundary_rational_rays) {
      const Rational h = lattice.pairing(e, y);
      for (Integer k = 1; Rational(k, den_gy) < h; ++k) {
        const auto slice = enumerate_norm_slice(lattice.gram(), {gy}, {Rational(k, den_gy)}, Rational(0), 1);
        if (!slice.points.empty()) {
          reasons.push_back("the isotropic class " + to_string(slice.points.front()) + " is closer to the basepoint than the ideal vertex " + to_string(e));
          break;
        }
      }
      const Rational step(content(lattice.functional(e)), den_y);
      const Rational lambda = h / (h + step);
      Rational radius_sq = 0;
      for (const auto& v : out.domain.rays()) {
        if (v == e) continue;
        const VectorQ offset = v * (h / lattice.pairing(v, e)) - y;
        radius_sq = std::max(radius_sq, -lattice.norm(offset) / n);
      }
      const Rational cross = (1 + 2 * radius_sq) * (1 + 2 * radius_sq);
      if (bound < cross)
        reasons.push_back("orbit ball bound " + to_string(bound) + " is below " + to_string(cross) +
                          " required by the cusp section at " + to_string(e));
      const Rational k = (radius_sq + 1 - lambda) * lambda / (1 - lambda);
      const Rational s = 2 * h / (n * (1 + radius_sq + k));
      truncations.push_back(primitive_integral(VectorQ(lattice.functional(e) - s * gy)));
    }
  }
  std::vector<VectorQ> facets = out.domain.facets();
  facets.insert(facets.end(), truncations.begin(), truncations.end());
  const PolyCone compact = truncations.empty() ? out.domain : PolyCone::from_facets(facets, lattice.rank());
  for (const auto& r : compact.rays()) {
    if (lattice.norm(r) <= 0 || lattice.pairing(lattice.ample(), r) <= 0) {
      reasons.push_back("truncated domain has the non-interior vertex " + to_string(r));
      continue;
    }
    const Rational c = cosh_sq_distance(lattice, y, r);
    const Rational needed = (2 * c - 1) * (2 * c - 1);  // cosh(2d) = 2 cosh^2(d) - 1
    if (bound < needed)
      reasons.push_back("orbit ball bound " + to_string(bound) + " is below " + to_string(needed) +
                        " required by the vertex " + to_string(r));
  }
}

}  // namespace

DirichletResult dirichlet_domain(const LorentzLattice& lattice, const std::optional<PolyCone>& ambient,
                                 const GroupGens& group, const VectorQ& y, const DirichletOptions& options) {
  lattice.check_dim(y);
  if (!in_positive_cone(lattice, y)) fail(ErrorCode::BoundaryInput, "dirichlet_domain: basepoint is not interior");
  if (ambient) {
    if (ambient->dim() != lattice.rank()) fail(ErrorCode::DimensionMismatch, "dirichlet_domain: ambient cone dimension");
    if (!ambient->relative_interior_contains(y) || ambient->span_dim() != lattice.rank())
      fail(ErrorCode::PreconditionViolated, "dirichlet_domain: basepoint is not in the interior of the ambient cone");
  }
  const OrbitBall ball = orbit_ball(lattice, group, y, options.cosh_sq_bound, options.max_elements);
  if (ball.stabilizer_witness)
    fail(ErrorCode::StabilizerNontrivial,
         "dirichlet_domain: the element " + word_to_string(*ball.stabilizer_witness) + " fixes the basepoint");

  std::map<VectorQ, DirichletFacet, LexLess> halfspaces;
  for (const auto& p : ball.points) {
    if (p.word.empty()) continue;
    VectorQ f = primitive_integral(bisector_halfspace(lattice, y, p.image));
    auto& entry = halfspaces[f];
    entry.functional = f;
    entry.words.push_back(p.word);
    entry.elements.push_back(p.element);
  }
  if (ambient)
    for (const auto& f : ambient->facets()) {
      auto& entry = halfspaces[f];
      entry.functional = f;
      entry.from_ambient = true;
    }

  std::vector<VectorQ> constraints;
  for (const auto& [f, entry] : halfspaces) constraints.push_back(f);
  DirichletResult out{
      .domain = PolyCone::from_facets(constraints, lattice.rank()),
      .basepoint = y,
      .orbit_used = ball.points.size(),
      .cosh_sq_bound = options.cosh_sq_bound,
      .ball_complete = ball.complete,
      .certified = false,
      .uncertified_reasons = {},
      .boundary_rational_rays = {},
      .facet_data = {},
  };
  for (const auto& f : out.domain.facets()) {
    const auto it = halfspaces.find(f);
    if (it != halfspaces.end()) out.facet_data.push_back(it->second);
    else out.facet_data.push_back({f, false, {}, {}});
  }

  auto& reasons = out.uncertified_reasons;
  if (!ball.complete) reasons.push_back("orbit ball truncated at " + std::to_string(options.max_elements) + " elements");
  if (!out.domain.pointed()) reasons.push_back("domain is not pointed");
  if (!out.domain.relative_interior_contains(y) || out.domain.span_dim() != lattice.rank())
    reasons.push_back("basepoint is not strictly inside the domain");
  const VectorQ& a = lattice.ample();
  bool in_closed_cone = true;
  for (const auto& r : out.domain.rays()) {
    const Rational n = lattice.norm(r);
    if (n < 0 || lattice.pairing(a, r) <= 0) {
      reasons.push_back("ray " + to_string(r) + " lies outside the closed positive cone");
      in_closed_cone = false;
    } else if (n == 0) {
      out.boundary_rational_rays.push_back(r);
    }
  }
  if (reasons.empty() && in_closed_cone) certify_vertices(lattice, group, options, out, reasons);
  out.certified = reasons.empty();
  return out;
}

TileReport tile_check(const LorentzLattice& lattice, const DirichletResult& domain, const GroupGens& group,
                      const std::vector<VectorQ>& samples, const TileOptions& options) {
  const VectorQ& y = domain.basepoint;
  const OrbitBall check = orbit_ball(lattice, group, y, options.check_cosh_sq_bound, options.check_max_elements);
  TileReport report;
  report.check_ball_size = check.points.size();
  report.check_ball_complete = check.complete;

  struct Mover {
    const Word* word;
    const Isometry* element;
    VectorQ image;
  };
  std::vector<Mover> movers;
  for (const auto& f : domain.facet_data)
    for (std::size_t i = 0; i < f.elements.size(); ++i)
      movers.push_back({&f.words[i], &f.elements[i], f.elements[i].apply(y)});

  for (const auto& x : samples) {
    TileRecord rec;
    rec.sample = x;
    VectorQ cur = x;
    std::size_t steps = 0;
    for (;;) {
      const Rational here = lattice.pairing(cur, y);
      const Mover* best = nullptr;
      Rational best_value = here;
      for (const auto& m : movers) {
        const Rational v = lattice.pairing(cur, m.image);
        if (v < best_value) {
          best_value = v;
          best = &m;
        }
      }
      if (!best) break;
      if (++steps > options.word_budget) break;
      cur = best->element->inverse_matrix() * cur;
      rec.word.insert(rec.word.end(), best->word->begin(), best->word->end());
    }
    rec.reduced = cur;
    rec.located = steps <= options.word_budget && domain.domain.contains(cur);
    if (rec.located) {
      const Rational here = lattice.pairing(cur, y);
      for (const auto& p : check.points) {
        const Rational v = lattice.pairing(cur, p.image);
        if (v == here) ++rec.multiplicity;
        else if (v < here) rec.violation = true;
      }
      rec.interior = domain.domain.relative_interior_contains(cur);
      ++report.located;
      if (rec.violation) ++report.violations;
      if (rec.interior) {
        ++report.interior;
        if (rec.multiplicity == 1) ++report.interior_multiplicity_one;
      } else {
        ++report.boundary;
      }
    } else {
      ++report.failures;
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::vector<VectorQ> sample_positive_cone(const LorentzLattice& lattice, std::size_t count, std::mt19937_64& rng,
                                          long box, const PolyCone* inside) {
  std::uniform_int_distribution<long> coord(-box, box);
  std::vector<VectorQ> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 10000 * (count + 1)) fail(ErrorCode::BudgetExceeded, "sample_positive_cone: rejection sampling failed");
    VectorQ v(lattice.rank());
    for (Index i = 0; i < v.size(); ++i) v[i] = coord(rng);
    if (!in_positive_cone(lattice, v)) continue;
    if (inside && !inside->relative_interior_contains(v)) continue;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace conekit
