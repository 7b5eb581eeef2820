#include "generators.hpp"

#include "conekit/exact_linalg.hpp"

#include <doctest.h>

using namespace conekit;
using namespace conekit::testing;

namespace {

Rational det(const MatrixQ& m) {
  // Cofactor expansion; fine for the 3x3 sizes used here.
  if (m.rows() == 1) return m(0, 0);
  Rational out = 0;
  for (Index j = 0; j < m.cols(); ++j) {
    MatrixQ minor(m.rows() - 1, m.cols() - 1);
    for (Index r = 1; r < m.rows(); ++r)
      for (Index c = 0, k = 0; c < m.cols(); ++c)
        if (c != j) minor(r - 1, k++) = m(r, c);
    out += (j % 2 ? -1 : 1) * m(0, j) * det(minor);
  }
  return out;
}

}  // namespace

TEST_CASE("rank, kernel and solve") {
  const MatrixQ m = mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  const MatrixQ k = kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK(is_zero(VectorQ(m * k.col(0))));
  const auto x = solve(m, vec({4, 8, 2}));
  REQUIRE(x);
  CHECK(m * *x == vec({4, 8, 2}));
  CHECK_FALSE(solve(m, vec({1, 0, 0})));
}

TEST_CASE("inverse") {
  const MatrixQ m = mat({{2, 1}, {1, 1}});
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == MatrixQ::Identity(2, 2));
  CHECK_FALSE(inverse(mat({{1, 2}, {2, 4}})));
}

TEST_CASE("inertia matches the leading minor sign count") {
  Rng rng(11);
  int tested = 0;
  while (tested < 300) {
    const Index n = uniform(rng, 2, 3);
    MatrixQ m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = Rational(uniform(rng, -5, 5));
    std::vector<Rational> minors{Rational(1)};
    bool ok = true;
    for (Index k = 1; k <= n; ++k) {
      minors.push_back(det(MatrixQ(m.topLeftCorner(k, k))));
      if (minors.back() == 0) ok = false;
    }
    if (!ok) continue;
    int negative = 0;
    for (Index k = 1; k <= n; ++k)
      if ((minors[k] > 0) != (minors[k - 1] > 0)) ++negative;
    const auto in = inertia(m);
    CHECK(in.negative == negative);
    CHECK(in.positive == n - negative);
    CHECK(in.zero == 0);
    ++tested;
  }
}

TEST_CASE("inertia of a degenerate form") {
  const auto in = inertia(mat({{1, 1}, {1, 1}}));
  CHECK(in.positive == 1);
  CHECK(in.zero == 1);
  const auto h = inertia(mat({{0, 1}, {1, 0}}));
  CHECK(h.positive == 1);
  CHECK(h.negative == 1);
}

TEST_CASE("column Hermite form is a unimodular reduction") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const Index r = uniform(rng, 1, 3), c = uniform(rng, 1, 4);
    MatrixZ m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = uniform(rng, -6, 6);
    const auto ch = column_hermite(m);
    CHECK(m * ch.u == ch.h);
    CHECK(mp::abs(det(to_rational(ch.u))) == 1);
    CHECK(ch.rank == rank(to_rational(m)));
    for (Index j = ch.rank; j < c; ++j) CHECK(is_zero(to_rational(VectorZ(ch.h.col(j)))));
  }
}

TEST_CASE("integer kernel, solve and coordinates") {
  MatrixZ row(1, 3);
  row << 2, 4, 6;
  const MatrixZ k = integer_kernel(row);
  CHECK(k.cols() == 2);
  CHECK(is_zero(to_rational(MatrixZ(row * k))));
  VectorZ b(1);
  b << 4;
  CHECK(integer_solve(row, b));
  b << 3;
  CHECK_FALSE(integer_solve(row, b));
  // The kernel is saturated: (1, 1, -1) lies in it and has integral coordinates.
  VectorZ v(3);
  v << 1, 1, -1;
  CHECK(integer_coordinates(k, v));
}

TEST_CASE("Smith invariants") {
  MatrixZ m(3, 3);
  m << 2, 4, 4, -6, 6, 12, 10, -4, -16;
  const auto s = smith_invariants(m);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 2);
  CHECK(s[1] == 6);
  CHECK(s[2] == 12);
  MatrixZ d(2, 2);
  d << 4, 0, 0, 6;
  const auto t = smith_invariants(d);
  CHECK(t[0] == 2);
  CHECK(t[1] == 12);
}

TEST_CASE("extend to unimodular") {
  VectorZ v(3);
  v << 3, 5, 7;
  const MatrixZ u = extend_to_unimodular(v);
  CHECK(VectorZ(u.col(0)) == v);
  CHECK(mp::abs(det(to_rational(u))) == 1);
  VectorZ w(2);
  w << 2, 4;
  CHECK_THROWS_AS(extend_to_unimodular(w), Error);
}
