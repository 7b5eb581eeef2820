#pragma once

#include "conekit/exact_linalg.hpp"
#include "conekit/types.hpp"

namespace conekit {

struct Signature {
  int positive = 0;
  int negative = 0;

  bool operator==(const Signature&) const = default;
};

/// Counts positive and negative squares of a symmetric form. For a degenerate form
/// positive + negative is smaller than the dimension.
Signature signature(const MatrixQ& gram);

/// An integral symmetric bilinear form of signature (1, n) together with a vector of
/// positive norm that fixes which component of the positive cone is "positive".
class LorentzLattice {
 public:
  /// Validates symmetry, integrality, nondegeneracy, signature (1, rank-1) and ample^2 > 0.
  LorentzLattice(MatrixQ gram, VectorQ ample);

  Index rank() const { return gram_.rows(); }
  const MatrixQ& gram() const { return gram_; }
  const VectorQ& ample() const { return ample_; }

  Rational pairing(const VectorQ& u, const VectorQ& v) const;
  Rational norm(const VectorQ& v) const { return pairing(v, v); }

  /// The linear functional x -> <v, x> in dual (plain dot product) coordinates.
  VectorQ functional(const VectorQ& v) const;

  void check_dim(const VectorQ& v) const;

 private:
  MatrixQ gram_;
  VectorQ ample_;
};

inline Rational pairing(const LorentzLattice& lattice, const VectorQ& u, const VectorQ& v) {
  return lattice.pairing(u, v);
}

Signature signature(const LorentzLattice& lattice);

/// v^2 > 0 and <ample, v> > 0.
bool in_positive_cone(const LorentzLattice& lattice, const VectorQ& v);

/// v != 0, v^2 >= 0 and <ample, v> >= 0 (closure of the positive cone).
bool in_closed_positive_cone(const LorentzLattice& lattice, const VectorQ& v);

/// Divides an integral vector by the gcd of its entries, choosing the sign so that the
/// result pairs nonnegatively with the ample class.
VectorQ primitive(const LorentzLattice& lattice, const VectorQ& v);

}  // namespace conekit
