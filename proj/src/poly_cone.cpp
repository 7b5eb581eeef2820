#include "conekit/poly_cone.hpp"

#include "conekit/error.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

namespace conekit {

namespace {

using Bits = boost::dynamic_bitset<>;

void sort_unique(std::vector<VectorQ>& v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct Ray {
  VectorQ v;
  Bits zeros;
};

Bits zero_set(const MatrixQ& m, const std::vector<Index>& processed, const VectorQ& r) {
  Bits z(static_cast<std::size_t>(m.rows()));
  for (Index i : processed)
    if (m.row(i).dot(r) == 0) z.set(static_cast<std::size_t>(i));
  return z;
}

// Extreme rays of {t : m t >= 0} for m of full column rank (so the cone is pointed).
std::vector<VectorQ> pointed_double_description(const MatrixQ& m) {
  const Index k = m.cols();
  std::vector<Index> order, rest;
  MatrixQ chosen(0, k);
  for (Index i = 0; i < m.rows(); ++i) {
    if (chosen.rows() < k) {
      MatrixQ trial(chosen.rows() + 1, k);
      trial << chosen, m.row(i);
      if (rank(trial) == trial.rows()) {
        chosen = std::move(trial);
        order.push_back(i);
        continue;
      }
    }
    rest.push_back(i);
  }
  if (chosen.rows() != k) fail(ErrorCode::Internal, "double description: constraints do not have full rank");
  const auto inv = inverse(chosen);
  if (!inv) fail(ErrorCode::Internal, "double description: initial simplex is singular");

  std::vector<Ray> rays;
  for (Index j = 0; j < k; ++j) {
    VectorQ r = primitive_integral(VectorQ(inv->col(j)));
    rays.push_back({r, zero_set(m, order, r)});
  }
  std::vector<Index> processed = order;
  for (Index i : rest) {
    processed.push_back(i);
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = m.row(i).dot(rays[r].v);
      if (value[r] > 0) pos.push_back(r);
      else if (value[r] < 0) neg.push_back(r);
      else rays[r].zeros.set(static_cast<std::size_t>(i));
    }
    if (neg.empty()) continue;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (value[r] >= 0) next.push_back(rays[r]);
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        const Bits common = rays[p].zeros & rays[n].zeros;
        if (static_cast<Index>(common.count()) + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        VectorQ v = primitive_integral(VectorQ(value[p] * rays[n].v - value[n] * rays[p].v));
        Bits z = zero_set(m, processed, v);
        next.push_back({std::move(v), std::move(z)});
      }
    }
    rays = std::move(next);
  }
  std::vector<VectorQ> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

MatrixQ stack_rows(const std::vector<VectorQ>& rows, Index dim) {
  MatrixQ m(static_cast<Index>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) fail(ErrorCode::DimensionMismatch, "cone vector has the wrong length");
    m.row(static_cast<Index>(i)) = rows[i].transpose();
  }
  return m;
}

}  // namespace

ExtremeRays extreme_rays(const std::vector<VectorQ>& constraints, Index dim) {
  const MatrixQ a = stack_rows(constraints, dim);
  ExtremeRays out;
  const MatrixQ ker = kernel(a);
  for (Index j = 0; j < ker.cols(); ++j) out.lineality.push_back(primitive_integral(VectorQ(ker.col(j))));
  const MatrixQ basis = row_space_basis(a);
  if (basis.rows() == 0) return out;
  const MatrixQ reduced = a * basis.transpose();
  for (const auto& t : pointed_double_description(reduced))
    out.rays.push_back(primitive_integral(VectorQ(basis.transpose() * t)));
  sort_unique(out.rays);
  return out;
}

PolyCone PolyCone::assemble(const ExtremeRays& primal, const ExtremeRays& dual, Index dim) {
  PolyCone c;
  c.dim_ = dim;
  c.rays_ = primal.rays;
  c.lineality_ = primal.lineality;
  c.facets_ = dual.rays;
  for (const auto& l : dual.lineality) {
    c.facets_.push_back(l);
    c.facets_.push_back(-l);
  }
  sort_unique(c.facets_);
  return c;
}

PolyCone PolyCone::from_facets(const std::vector<VectorQ>& facets, Index dim) {
  if (dim <= 0) fail(ErrorCode::DimensionMismatch, "cone dimension must be positive");
  const ExtremeRays primal = extreme_rays(facets, dim);
  std::vector<VectorQ> gens = primal.rays;
  for (const auto& l : primal.lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return assemble(primal, extreme_rays(gens, dim), dim);
}

PolyCone PolyCone::from_rays(const std::vector<VectorQ>& rays, Index dim) {
  if (dim <= 0) fail(ErrorCode::DimensionMismatch, "cone dimension must be positive");
  const ExtremeRays dual = extreme_rays(rays, dim);
  std::vector<VectorQ> facets = dual.rays;
  for (const auto& l : dual.lineality) {
    facets.push_back(l);
    facets.push_back(-l);
  }
  return assemble(extreme_rays(facets, dim), dual, dim);
}

Index PolyCone::span_dim() const {
  std::vector<VectorQ> gens = rays_;
  gens.insert(gens.end(), lineality_.begin(), lineality_.end());
  if (gens.empty()) return 0;
  return rank(stack_rows(gens, dim_));
}

bool PolyCone::contains(const VectorQ& x) const {
  if (x.size() != dim_) fail(ErrorCode::DimensionMismatch, "point has the wrong length for this cone");
  return std::all_of(facets_.begin(), facets_.end(), [&](const VectorQ& f) { return f.dot(x) >= 0; });
}

std::vector<VectorQ> PolyCone::inequality_facets() const {
  std::vector<VectorQ> out;
  for (const auto& f : facets_)
    if (!std::binary_search(facets_.begin(), facets_.end(), VectorQ(-f), lex_less)) out.push_back(f);
  return out;
}

bool PolyCone::relative_interior_contains(const VectorQ& x) const {
  if (!contains(x)) return false;
  for (const auto& f : facets_) {
    const bool equation = std::binary_search(facets_.begin(), facets_.end(), VectorQ(-f), lex_less);
    if (equation ? f.dot(x) != 0 : f.dot(x) <= 0) return false;
  }
  return true;
}

PolyCone face(const PolyCone& cone, const std::vector<VectorQ>& functionals) {
  for (const auto& f : functionals) {
    if (f.size() != cone.dim()) fail(ErrorCode::DimensionMismatch, "face: functional has the wrong length");
    for (const auto& l : cone.lineality())
      if (f.dot(l) != 0) fail(ErrorCode::NotSupporting, "face: functional is not constant on the lineality space");
    for (const auto& r : cone.rays())
      if (f.dot(r) < 0) fail(ErrorCode::NotSupporting, "face: functional is negative on the ray " + to_string(r));
  }
  std::vector<VectorQ> gens;
  for (const auto& r : cone.rays())
    if (std::all_of(functionals.begin(), functionals.end(), [&](const VectorQ& f) { return f.dot(r) == 0; }))
      gens.push_back(r);
  for (const auto& l : cone.lineality()) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  return PolyCone::from_rays(gens, cone.dim());
}

PolyCone face(const LorentzLattice& lattice, const PolyCone& cone, const std::vector<VectorQ>& classes) {
  std::vector<VectorQ> functionals;
  for (const auto& v : classes) functionals.push_back(lattice.functional(v));
  return face(cone, functionals);
}

std::vector<VectorQ> facet_classes(const LorentzLattice& lattice, const PolyCone& cone) {
  const auto ginv = inverse(lattice.gram());
  if (!ginv) fail(ErrorCode::Internal, "gram matrix is singular");
  std::vector<VectorQ> out;
  for (const auto& f : cone.facets()) out.push_back(primitive_integral(VectorQ(*ginv * f)));
  return out;
}

}  // namespace conekit
