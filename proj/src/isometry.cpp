#include "conekit/isometry.hpp"

#include "conekit/error.hpp"
#include "conekit/hyperbolic.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace conekit {

Isometry verify_isometry(const LorentzLattice& lattice, const MatrixQ& m) {
  const Index n = lattice.rank();
  if (m.rows() != n || m.cols() != n)
    fail(ErrorCode::DimensionMismatch, "isometry matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  const MatrixQ& g = lattice.gram();
  if (MatrixQ(m.transpose() * g * m) != g) fail(ErrorCode::FormNotPreserved, "matrix does not preserve the form");
  if (lattice.pairing(lattice.ample(), m * lattice.ample()) <= 0)
    fail(ErrorCode::WrongConeComponent, "matrix swaps the two components of the positive cone");
  // M^T G M = G gives M^{-1} = G^{-1} M^T G.
  const auto ginv = inverse(g);
  if (!ginv) fail(ErrorCode::Internal, "gram matrix is singular");
  return Isometry(m, MatrixQ(*ginv * m.transpose() * g));
}

Isometry parabolic_map(const LorentzLattice& lattice, const VectorQ& e, const VectorQ& x) {
  lattice.check_dim(e);
  lattice.check_dim(x);
  if (is_zero(e)) fail(ErrorCode::ZeroVector, "parabolic_map: e is zero");
  if (lattice.norm(e) != 0) fail(ErrorCode::NotIsotropic, "parabolic_map: e is not isotropic");
  if (lattice.pairing(x, e) != 0) fail(ErrorCode::PreconditionViolated, "parabolic_map: x is not orthogonal to e");
  const VectorQ ge = lattice.functional(e);
  const VectorQ gx = lattice.functional(x);
  const Rational half_norm = lattice.norm(x) / 2;
  const Index n = lattice.rank();
  MatrixQ m = MatrixQ::Identity(n, n);
  m += x * ge.transpose();
  m -= e * gx.transpose();
  m -= half_norm * (e * ge.transpose());
  return verify_isometry(lattice, m);
}

MatrixZ parabolic_translation_basis(const LorentzLattice& lattice, const VectorQ& e) {
  lattice.check_dim(e);
  if (lattice.norm(e) != 0) fail(ErrorCode::NotIsotropic, "parabolic_basis: e is not isotropic");
  if (!is_integral(e) || content(e) != 1) fail(ErrorCode::PreconditionViolated, "parabolic_basis: e must be primitive");
  const Index n = lattice.rank();
  MatrixZ row(1, n);
  row.row(0) = to_integer(VectorQ(lattice.functional(e))).transpose();
  const MatrixZ perp = integer_kernel(row);  // n x (n-1)
  const auto coords = integer_coordinates(perp, to_integer(e));
  if (!coords) fail(ErrorCode::Internal, "parabolic_basis: e is not in its own orthogonal lattice");
  const MatrixZ u = extend_to_unimodular(*coords);
  MatrixZ complement = perp * u.rightCols(u.cols() - 1);
  // Column Hermite form spans the same sublattice and makes the basis independent of the
  // unimodular extension chosen above.
  const auto ch = column_hermite(complement);
  return ch.h.leftCols(ch.rank);
}

std::vector<Isometry> parabolic_basis(const LorentzLattice& lattice, const VectorQ& e) {
  const MatrixZ basis = parabolic_translation_basis(lattice, e);
  std::vector<Isometry> out;
  for (Index j = 0; j < basis.cols(); ++j) out.push_back(parabolic_map(lattice, e, to_rational(VectorZ(basis.col(j)))));
  return out;
}

std::vector<std::pair<std::string, Isometry>> GroupGens::letters() const {
  std::vector<std::pair<std::string, Isometry>> out;
  for (std::size_t i = 0; i < gens.size(); ++i) out.emplace_back("g" + std::to_string(i), gens[i]);
  for (std::size_t i = 0; i < gens.size(); ++i) out.emplace_back("g" + std::to_string(i) + "^-1", gens[i].inverse());
  return out;
}

GroupGens make_group(const LorentzLattice& lattice, const std::vector<MatrixQ>& matrices) {
  GroupGens g;
  for (const auto& m : matrices) g.gens.push_back(verify_isometry(lattice, m));
  return g;
}

std::string word_to_string(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (const auto& letter : word) {
    if (!out.empty()) out += ' ';
    out += letter;
  }
  return out;
}

namespace {

struct LexLess {
  bool operator()(const VectorQ& a, const VectorQ& b) const { return lex_less(a, b); }
};

}  // namespace

Word invert_word(const Word& word) {
  Word out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto& letter = *it;
    if (letter.size() > 3 && letter.compare(letter.size() - 3, 3, "^-1") == 0)
      out.push_back(letter.substr(0, letter.size() - 3));
    else
      out.push_back(letter + "^-1");
  }
  return out;
}

OrbitBall orbit_ball(const LorentzLattice& lattice, const GroupGens& group, const VectorQ& y,
                     const Rational& cosh_sq_bound, std::size_t max_elements) {
  if (!in_positive_cone(lattice, y)) fail(ErrorCode::BoundaryInput, "orbit_ball: basepoint is not interior");
  const auto letters = group.letters();
  OrbitBall ball;
  std::map<VectorQ, std::size_t, LexLess> seen;  // image -> index in points
  std::deque<std::size_t> queue;
  ball.points.push_back({{}, Isometry::identity(lattice.rank()), y, Rational(1)});
  seen.emplace(y, 0);
  queue.push_back(0);
  bool truncated = false;
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& [name, letter] : letters) {
      Isometry element = letter * ball.points[cur].element;
      VectorQ image = element.apply(y);
      const auto found = seen.find(image);
      if (found != seen.end()) {
        if (!(ball.points[found->second].element == element) && !ball.stabilizer_witness) {
          // known^{-1} * element fixes y.
          Word w = invert_word(ball.points[found->second].word);
          w.push_back(name);
          const Word& tail = ball.points[cur].word;
          w.insert(w.end(), tail.begin(), tail.end());
          ball.stabilizer_witness = w;
        }
        continue;
      }
      const Rational c = cosh_sq_distance(lattice, y, image);
      if (c > cosh_sq_bound) continue;
      if (ball.points.size() >= max_elements) {
        truncated = true;
        continue;
      }
      Word w = ball.points[cur].word;
      w.insert(w.begin(), name);
      seen.emplace(image, ball.points.size());
      ball.points.push_back({std::move(w), std::move(element), std::move(image), c});
      queue.push_back(ball.points.size() - 1);
    }
  }
  ball.complete = !truncated;
  std::sort(ball.points.begin(), ball.points.end(), [](const OrbitPoint& a, const OrbitPoint& b) {
    if (a.cosh_sq != b.cosh_sq) return a.cosh_sq < b.cosh_sq;
    return lex_less(a.image, b.image);
  });
  return ball;
}

}  // namespace conekit
