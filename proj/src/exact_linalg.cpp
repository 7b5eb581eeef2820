#include "conekit/exact_linalg.hpp"

#include <algorithm>

namespace conekit {

namespace {

// Index of the column j in [from, cols) with the smallest nonzero |h(row, j)|, or -1.
Index smallest_in_row(const MatrixZ& h, Index row, Index from) {
  Index best = -1;
  for (Index j = from; j < h.cols(); ++j) {
    if (h(row, j) == 0) continue;
    if (best < 0 || mp::abs(h(row, j)) < mp::abs(h(row, best))) best = j;
  }
  return best;
}

}  // namespace

ColumnHermite column_hermite(const MatrixZ& m) {
  ColumnHermite out;
  out.h = m;
  out.u = MatrixZ::Identity(m.cols(), m.cols());
  MatrixZ& h = out.h;
  MatrixZ& u = out.u;
  Index k = 0;
  for (Index i = 0; i < h.rows() && k < h.cols(); ++i) {
    for (;;) {
      const Index j = smallest_in_row(h, i, k);
      if (j < 0) break;
      if (j != k) {
        h.col(j).swap(h.col(k));
        u.col(j).swap(u.col(k));
      }
      bool done = true;
      for (Index l = k + 1; l < h.cols(); ++l) {
        if (h(i, l) == 0) continue;
        const Integer q = h(i, l) / h(i, k);
        h.col(l) -= q * h.col(k);
        u.col(l) -= q * u.col(k);
        if (h(i, l) != 0) done = false;
      }
      if (done) break;
    }
    if (h(i, k) == 0) continue;
    if (h(i, k) < 0) {
      h.col(k) = -h.col(k);
      u.col(k) = -u.col(k);
    }
    // Reduce earlier columns modulo the new pivot so the form is canonical.
    for (Index l = 0; l < k; ++l) {
      Integer q = h(i, l) / h(i, k);
      if (h(i, l) - q * h(i, k) < 0) q -= 1;
      if (q != 0) {
        h.col(l) -= q * h.col(k);
        u.col(l) -= q * u.col(k);
      }
    }
    ++k;
  }
  out.rank = k;
  return out;
}

MatrixZ integer_kernel(const MatrixZ& m) {
  const auto ch = column_hermite(m);
  return ch.u.rightCols(m.cols() - ch.rank);
}

std::optional<VectorZ> integer_solve(const MatrixZ& m, const VectorZ& b) {
  if (m.rows() != b.size()) fail(ErrorCode::DimensionMismatch, "integer_solve: rhs length mismatch");
  const auto ch = column_hermite(m);
  VectorZ y = VectorZ::Zero(m.cols());
  VectorZ residual = b;
  for (Index k = 0; k < ch.rank; ++k) {
    Index p = 0;
    while (ch.h(p, k) == 0) ++p;
    if (residual[p] % ch.h(p, k) != 0) return std::nullopt;
    y[k] = residual[p] / ch.h(p, k);
    residual -= y[k] * ch.h.col(k);
  }
  if (!is_zero(residual)) return std::nullopt;
  return VectorZ(ch.u * y);
}

std::vector<Integer> smith_invariants(const MatrixZ& input) {
  MatrixZ a = input;
  std::vector<Integer> out;
  Index t = 0;
  const Index rows = a.rows(), cols = a.cols();
  while (t < rows && t < cols) {
    // Locate the smallest nonzero entry in the trailing block.
    Index pi = -1, pj = -1;
    for (Index i = t; i < rows; ++i)
      for (Index j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pi < 0 || mp::abs(a(i, j)) < mp::abs(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    a.row(pi).swap(a.row(t));
    a.col(pj).swap(a.col(t));
    bool clean = true;
    for (Index i = t + 1; i < rows; ++i) {
      if (a(i, t) == 0) continue;
      const Integer q = a(i, t) / a(t, t);
      a.row(i) -= q * a.row(t);
      if (a(i, t) != 0) clean = false;
    }
    for (Index j = t + 1; j < cols; ++j) {
      if (a(t, j) == 0) continue;
      const Integer q = a(t, j) / a(t, t);
      a.col(j) -= q * a.col(t);
      if (a(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // Enforce divisibility of the trailing block by the pivot.
    Index bad_row = -1;
    for (Index i = t + 1; i < rows && bad_row < 0; ++i)
      for (Index j = t + 1; j < cols; ++j)
        if (a(i, j) % a(t, t) != 0) {
          bad_row = i;
          break;
        }
    if (bad_row >= 0) {
      a.row(t) += a.row(bad_row);
      continue;
    }
    out.push_back(mp::abs(a(t, t)));
    ++t;
  }
  return out;
}

MatrixZ extend_to_unimodular(const VectorZ& primitive) {
  MatrixZ row(1, primitive.size());
  row.row(0) = primitive.transpose();
  const auto ch = column_hermite(row);
  if (ch.rank != 1 || ch.h(0, 0) != 1)
    fail(ErrorCode::PreconditionViolated, "extend_to_unimodular: vector is not primitive");
  const auto inv = inverse(to_rational(ch.u));
  if (!inv) fail(ErrorCode::Internal, "extend_to_unimodular: transform is singular");
  MatrixZ out = to_integer(MatrixQ(inv->transpose()));
  return out;
}

std::optional<VectorZ> integer_coordinates(const MatrixZ& basis, const VectorZ& v) {
  const auto sol = solve(to_rational(basis), to_rational(v));
  if (!sol || !is_integral(*sol)) return std::nullopt;
  if (to_rational(basis) * *sol != to_rational(v)) return std::nullopt;
  return to_integer(*sol);
}

}  // namespace conekit
