#pragma once

#include "conekit/isometry.hpp"
#include "conekit/poly_cone.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace conekit {

struct DirichletOptions {
  Rational cosh_sq_bound = 100;
  std::size_t max_elements = 5000;
};

/// A facet of the computed domain and where it came from.
struct DirichletFacet {
  VectorQ functional;
  bool from_ambient = false;
  std::vector<Word> words;         // every g whose bisector with y is this facet
  std::vector<Isometry> elements;  // matching group elements
};

struct DirichletResult {
  PolyCone domain;
  VectorQ basepoint;
  std::size_t orbit_used = 0;
  Rational cosh_sq_bound;
  bool ball_complete = false;
  bool certified = false;
  /// Why certification failed; empty when certified.
  std::vector<std::string> uncertified_reasons;
  std::vector<VectorQ> boundary_rational_rays;
  std::vector<DirichletFacet> facet_data;
};

/// {x in ambient : <x, gy - y> >= 0 for all gy in the orbit ball}. With no ambient cone the
/// closed positive cone is meant; the returned polyhedral cone then equals the domain only
/// when all of its rays lie in the closed positive cone, which is part of certification.
///
/// The result is certified when the orbit ball was exhausted, y is strictly inside, every ray
/// lies in the closed positive cone, and the ball reaches far enough that no orbit point
/// outside it can cut the domain: twice the distance to every finite vertex, and for ideal
/// vertices a horospherical argument (see dirichlet.cpp). "Exhausted" refers to the
/// breadth-first closure, so orbit points reachable only through elements outside the ball are
/// not accounted for.
DirichletResult dirichlet_domain(const LorentzLattice& lattice, const std::optional<PolyCone>& ambient,
                                 const GroupGens& group, const VectorQ& y, const DirichletOptions& options);

struct TileRecord {
  VectorQ sample;
  Word word;                  // g with g^{-1} sample in D
  VectorQ reduced;            // g^{-1} sample
  std::size_t multiplicity = 0;
  bool located = false;
  bool interior = false;      // reduced point strictly inside every facet
  bool violation = false;     // an orbit point of the check ball is strictly closer than y
};

struct TileReport {
  std::vector<TileRecord> records;
  std::size_t located = 0;
  std::size_t failures = 0;
  std::size_t interior = 0;
  std::size_t interior_multiplicity_one = 0;
  std::size_t boundary = 0;
  std::size_t violations = 0;
  std::size_t check_ball_size = 0;
  bool check_ball_complete = false;

  bool ok() const {
    return failures == 0 && violations == 0 && interior_multiplicity_one == interior;
  }
};

struct TileOptions {
  std::size_t word_budget = 200;
  Rational check_cosh_sq_bound = 400;
  std::size_t check_max_elements = 20000;
};

/// Moves each sample into D by repeatedly applying g^{-1} for the closest orbit point among
/// D's facets, then counts the orbit points of a check ball that are as close as y.
TileReport tile_check(const LorentzLattice& lattice, const DirichletResult& domain, const GroupGens& group,
                      const std::vector<VectorQ>& samples, const TileOptions& options);

/// Random integral points of the open positive cone (rejection sampling in a box), optionally
/// restricted to a cone.
std::vector<VectorQ> sample_positive_cone(const LorentzLattice& lattice, std::size_t count, std::mt19937_64& rng,
                                          long box = 50, const PolyCone* inside = nullptr);

}  // namespace conekit
