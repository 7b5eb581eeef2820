#include "generators.hpp"

#include "conekit/exact_linalg.hpp"

namespace conekit::testing {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational uniform_rational(Rng& rng, long max_num, long max_den) {
  return Rational(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
}

VectorQ vec(std::initializer_list<long> xs) {
  VectorQ v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v[i++] = Rational(x);
  return v;
}

MatrixQ mat(std::initializer_list<std::initializer_list<long>> rows) {
  MatrixQ m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long x : r) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

MatrixQ diag_lorentz(int rank) {
  MatrixQ g = -MatrixQ::Identity(rank, rank);
  g(0, 0) = 1;
  return g;
}

VectorQ random_vector(Rng& rng, Index n, long box) {
  VectorQ v(n);
  for (Index i = 0; i < n; ++i) v[i] = Rational(uniform(rng, -box, box));
  return v;
}

VectorQ random_interior(const LorentzLattice& lattice, Rng& rng, long box) {
  for (;;) {
    VectorQ v = random_vector(rng, lattice.rank(), box);
    if (lattice.norm(v) <= 0) continue;
    if (lattice.pairing(lattice.ample(), v) < 0) v = -v;
    return v;
  }
}

std::vector<IsotropicLattice> isotropic_lattices() {
  std::vector<IsotropicLattice> out;
  out.push_back({"hyperbolic-plane", LorentzLattice(mat({{0, 1}, {1, 0}}), vec({1, 1})), vec({1, 0})});
  out.push_back({"F2", LorentzLattice(mat({{-2, 1}, {1, 0}}), vec({1, 3})), vec({0, 1})});
  out.push_back({"I(1,2)", LorentzLattice(diag_lorentz(3), vec({1, 0, 0})), vec({1, 1, 0})});
  out.push_back({"hesse", LorentzLattice(mat({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 1}, {0, 0, 1, -2}}), vec({1, 1, 0, 0})),
                 vec({1, 0, 0, 0})});
  out.push_back({"I(1,3)", LorentzLattice(diag_lorentz(4), vec({2, 1, 0, 0})), vec({1, 0, 1, 0})});
  out.push_back({"I(1,4)", LorentzLattice(diag_lorentz(5), vec({3, 1, 1, 1, 1})), vec({1, 0, 0, 0, 1})});
  return out;
}

namespace {

VectorQ primitive_oriented(const LorentzLattice& lattice, VectorQ v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = mp::gcd(g, mp::numerator(v[i]));
  v /= Rational(g);
  if (lattice.pairing(lattice.ample(), v) < 0) v = -v;
  return v;
}

}  // namespace

VectorQ random_isotropic(const LorentzLattice& lattice, const VectorQ& e0, Rng& rng, long box) {
  // Zero, one or two reflection-like steps, so that rank 2 (where one step always lands on
  // the other isotropic line) still produces both lines.
  VectorQ e = e0;
  const long steps = uniform(rng, 0, 2);
  for (long s = 0; s < steps;) {
    const VectorQ w = random_vector(rng, lattice.rank(), box);
    const VectorQ next = lattice.norm(w) * e - 2 * lattice.pairing(w, e) * w;
    if (is_zero(next)) continue;
    e = primitive_oriented(lattice, next);
    ++s;
  }
  return primitive_oriented(lattice, e);
}

VectorQ random_perp(const LorentzLattice& lattice, const VectorQ& e, Rng& rng, long box) {
  const VectorQ u = random_vector(rng, lattice.rank(), box);
  const VectorQ w = random_vector(rng, lattice.rank(), box);
  return lattice.pairing(e, w) * u - lattice.pairing(e, u) * w;
}

MatrixQ random_negative_configuration(Rng& rng, Index max_size) {
  for (;;) {
    const Index n = uniform(rng, 1, max_size);
    MatrixQ m = MatrixQ::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
      m(i, i) = Rational(-uniform(rng, 1, 4));
      for (Index j = 0; j < i; ++j) {
        const long r = uniform(rng, 0, 9);
        const long w = r < 6 ? 0 : (r < 9 ? 1 : 2);
        m(i, j) = m(j, i) = Rational(w);
      }
    }
    if (is_negative_definite(m)) return m;
  }
}

std::vector<Rational> random_effective(const SurfaceData& s, Rng& rng, std::size_t max_terms) {
  std::vector<Rational> d(s.curves().size(), Rational(0));
  const long terms = uniform(rng, 1, static_cast<long>(max_terms));
  for (long t = 0; t < terms; ++t) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d.size()) - 1));
    d[i] += Rational(uniform(rng, 1, 6), uniform(rng, 1, 3));
  }
  return d;
}

}  // namespace conekit::testing

namespace conekit::testing {

namespace {

std::size_t count_tails(int left, long squares, long sum, long bound) {
  if (left == 0) return squares == 0 && sum == 0 ? 1 : 0;
  // Cauchy-Schwarz: sum^2 <= left * squares is necessary.
  if (sum * sum > left * squares) return 0;
  std::size_t total = 0;
  for (long c = -bound; c <= bound; ++c)
    if (c * c <= squares) total += count_tails(left - 1, squares - c * c, sum - c, bound);
  return total;
}

}  // namespace

std::size_t brute_force_minus_one_count(int r) {
  std::size_t total = 0;
  for (long d = -20; d <= 20; ++d) {
    const long squares = d * d + 1, sum = 1 - 3 * d;
    if (sum * sum > r * squares) continue;
    long bound = 0;
    while ((bound + 1) * (bound + 1) <= squares) ++bound;
    total += count_tails(r, squares, sum, bound);
  }
  return total;
}

}  // namespace conekit::testing
