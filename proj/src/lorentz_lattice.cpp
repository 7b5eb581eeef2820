#include "conekit/lorentz_lattice.hpp"

#include "conekit/error.hpp"

namespace conekit {

Signature signature(const MatrixQ& gram) {
  const auto in = inertia(gram);
  return {in.positive, in.negative};
}

LorentzLattice::LorentzLattice(MatrixQ gram, VectorQ ample) : gram_(std::move(gram)), ample_(std::move(ample)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
    fail(ErrorCode::DimensionMismatch, "gram matrix must be square and nonempty");
  if (ample_.size() != gram_.rows()) fail(ErrorCode::DimensionMismatch, "ample class has the wrong length");
  if (gram_ != gram_.transpose()) fail(ErrorCode::PreconditionViolated, "gram matrix is not symmetric");
  if (!is_integral(gram_)) fail(ErrorCode::PreconditionViolated, "gram matrix is not integral");
  const auto sig = conekit::signature(gram_);
  if (sig.positive + sig.negative < rank())
    fail(ErrorCode::Degenerate, "gram matrix is degenerate");
  if (sig.positive != 1)
    fail(ErrorCode::WrongSignature, "signature is (" + std::to_string(sig.positive) + "," +
                                        std::to_string(sig.negative) + "), expected (1," +
                                        std::to_string(rank() - 1) + ")");
  if (norm(ample_) <= 0) fail(ErrorCode::NotPositive, "ample class must have positive norm");
}

void LorentzLattice::check_dim(const VectorQ& v) const {
  if (v.size() != rank())
    fail(ErrorCode::DimensionMismatch,
         "vector of length " + std::to_string(v.size()) + " used with a lattice of rank " + std::to_string(rank()));
}

Rational LorentzLattice::pairing(const VectorQ& u, const VectorQ& v) const {
  check_dim(u);
  check_dim(v);
  return u.dot(gram_ * v);
}

VectorQ LorentzLattice::functional(const VectorQ& v) const {
  check_dim(v);
  return gram_ * v;
}

Signature signature(const LorentzLattice& lattice) { return signature(lattice.gram()); }

bool in_positive_cone(const LorentzLattice& lattice, const VectorQ& v) {
  return lattice.norm(v) > 0 && lattice.pairing(lattice.ample(), v) > 0;
}

bool in_closed_positive_cone(const LorentzLattice& lattice, const VectorQ& v) {
  if (is_zero(v)) return false;
  return lattice.norm(v) >= 0 && lattice.pairing(lattice.ample(), v) >= 0;
}

VectorQ primitive(const LorentzLattice& lattice, const VectorQ& v) {
  lattice.check_dim(v);
  if (is_zero(v)) fail(ErrorCode::ZeroVector, "primitive: zero vector");
  if (!is_integral(v)) fail(ErrorCode::PreconditionViolated, "primitive: vector is not integral");
  VectorQ p = primitive_integral(v);
  if (lattice.pairing(lattice.ample(), p) < 0) p = -p;
  return p;
}

}  // namespace conekit
