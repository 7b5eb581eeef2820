#pragma once

#include "conekit/lorentz_lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conekit {

/// An element of O+(S): preserves the form and the positive cone component. Only
/// `verify_isometry` and the constructors built on it produce values of this type.
class Isometry {
 public:
  const MatrixQ& matrix() const { return m_; }
  const MatrixQ& inverse_matrix() const { return inv_; }

  VectorQ apply(const VectorQ& v) const { return m_ * v; }
  Isometry inverse() const { return Isometry(inv_, m_); }
  Isometry operator*(const Isometry& other) const { return Isometry(m_ * other.m_, other.inv_ * inv_); }
  bool operator==(const Isometry& other) const { return m_ == other.m_; }

  static Isometry identity(Index rank) {
    return Isometry(MatrixQ::Identity(rank, rank), MatrixQ::Identity(rank, rank));
  }

 private:
  Isometry(MatrixQ m, MatrixQ inv) : m_(std::move(m)), inv_(std::move(inv)) {}
  friend Isometry verify_isometry(const LorentzLattice&, const MatrixQ&);

  MatrixQ m_;
  MatrixQ inv_;
};

/// Throws FormNotPreserved or WrongConeComponent.
Isometry verify_isometry(const LorentzLattice& lattice, const MatrixQ& m);

/// y -> y + <y,e> x - (<x,y> + x^2 <y,e> / 2) e, for isotropic e and x in e-perp.
Isometry parabolic_map(const LorentzLattice& lattice, const VectorQ& e, const VectorQ& x);

/// Integral basis x_1..x_{n-1} of a complement of Ze in the integral vectors of e-perp.
/// Columns of the returned matrix.
MatrixZ parabolic_translation_basis(const LorentzLattice& lattice, const VectorQ& e);

/// The strictly parabolic generators alpha_{x_i} for the basis above.
std::vector<Isometry> parabolic_basis(const LorentzLattice& lattice, const VectorQ& e);

struct GroupGens {
  std::vector<Isometry> gens;

  /// Generators followed by their inverses, with labels "g<i>" and "g<i>^-1".
  std::vector<std::pair<std::string, Isometry>> letters() const;
};

GroupGens make_group(const LorentzLattice& lattice, const std::vector<MatrixQ>& matrices);

/// A word in the letters of a GroupGens. The element is the product of letters in order,
/// so it acts on a vector by applying the rightmost letter first.
using Word = std::vector<std::string>;

std::string word_to_string(const Word& word);  // "e" for the empty word
Word invert_word(const Word& word);

struct OrbitPoint {
  Word word;
  Isometry element;
  VectorQ image;
  Rational cosh_sq;
};

struct OrbitBall {
  std::vector<OrbitPoint> points;  // sorted by cosh_sq, then lexicographically by image
  bool complete = false;           // frontier exhausted before the element cap
  /// A nontrivial element fixing y, when one was met.
  std::optional<Word> stabilizer_witness;
};

/// Breadth-first closure of y under the generators and their inverses, keeping images
/// with cosh^2 d(y, gy) <= bound and expanding only those.
OrbitBall orbit_ball(const LorentzLattice& lattice, const GroupGens& group, const VectorQ& y,
                     const Rational& cosh_sq_bound, std::size_t max_elements);

}  // namespace conekit
