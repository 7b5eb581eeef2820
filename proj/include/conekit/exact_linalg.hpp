#pragma once

// Exact dense linear algebra over a field scalar (Rational in practice) and over the
// integers. Nothing here uses a tolerance: every pivot test is an exact comparison with 0.

#include "conekit/error.hpp"
#include "conekit/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace conekit {

template <typename Scalar>
struct RowEchelon {
  MatrixX<Scalar> reduced;     // reduced row echelon form
  std::vector<Index> pivots;   // pivot column of each nonzero row
};

template <typename Scalar>
RowEchelon<Scalar> row_echelon(MatrixX<Scalar> m) {
  RowEchelon<Scalar> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      m.row(i) -= f * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Scalar>
Index rank(const MatrixX<Scalar>& m) {
  return static_cast<Index>(row_echelon(m).pivots.size());
}

/// Columns form a basis of {x : m x = 0}; each basis vector has a 1 in one free coordinate.
template <typename Scalar>
MatrixX<Scalar> kernel(const MatrixX<Scalar>& m) {
  const auto ech = row_echelon(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free_cols;
  for (Index j = 0; j < n; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(n, static_cast<Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Index f = free_cols[k];
    basis(f, static_cast<Index>(k)) = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      basis(ech.pivots[r], static_cast<Index>(k)) = -ech.reduced(static_cast<Index>(r), f);
  }
  return basis;
}

/// Rows form a basis of the row space of m (the nonzero rows of the reduced echelon form).
template <typename Scalar>
MatrixX<Scalar> row_space_basis(const MatrixX<Scalar>& m) {
  const auto ech = row_echelon(m);
  return ech.reduced.topRows(static_cast<Index>(ech.pivots.size()));
}

/// Some solution of a x = b, or nullopt when the system is inconsistent.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  if (a.rows() != b.size()) fail(ErrorCode::DimensionMismatch, "solve: row count differs from rhs length");
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const auto ech = row_echelon(aug);
  VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const Index p = ech.pivots[r];
    if (p == a.cols()) return std::nullopt;
    x[p] = ech.reduced(static_cast<Index>(r), a.cols());
  }
  return x;
}

template <typename Scalar>
std::optional<MatrixX<Scalar>> inverse(const MatrixX<Scalar>& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::DimensionMismatch, "inverse: matrix is not square");
  const Index n = a.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug << a, MatrixX<Scalar>::Identity(n, n);
  const auto ech = row_echelon(aug);
  if (static_cast<Index>(ech.pivots.size()) < n || ech.pivots[static_cast<std::size_t>(n - 1)] >= n)
    return std::nullopt;
  return MatrixX<Scalar>(ech.reduced.rightCols(n));
}

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Sylvester inertia of a symmetric matrix by exact congruence diagonalization.
template <typename Scalar>
Inertia inertia(MatrixX<Scalar> m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "inertia: matrix is not square");
  if (m != m.transpose()) fail(ErrorCode::PreconditionViolated, "inertia: matrix is not symmetric");
  Inertia out;
  Index n = m.rows();
  // Work on the trailing block; each step either splits off a nonzero diagonal entry or a
  // zero row/column.
  for (Index k = 0; k < n; ++k) {
    Index pivot = -1;
    for (Index i = k; i < n; ++i)
      if (m(i, i) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      // All remaining diagonal entries vanish; use an off-diagonal entry m(i,j) != 0 and
      // replace e_i by e_i + e_j, giving diagonal 2 m(i,j) != 0.
      Index pi = -1, pj = -1;
      for (Index i = k; i < n && pi < 0; ++i)
        for (Index j = i + 1; j < n; ++j)
          if (m(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi < 0) {
        out.zero += static_cast<int>(n - k);
        return out;
      }
      m.row(pi) += m.row(pj);
      m.col(pi) += m.col(pj);
      pivot = pi;
    }
    if (pivot != k) {
      m.row(pivot).swap(m.row(k));
      m.col(pivot).swap(m.col(k));
    }
    const Scalar d = m(k, k);
    (d > 0 ? out.positive : out.negative) += 1;
    for (Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Scalar f = m(i, k) / d;
      m.row(i) -= f * m.row(k);
      m.col(i) -= f * m.col(k);
    }
  }
  return out;
}

template <typename Scalar>
bool is_negative_definite(const MatrixX<Scalar>& m) {
  if (m.rows() == 0) return true;
  const auto in = inertia(m);
  return in.negative == m.rows();
}

template <typename Scalar>
bool is_positive_definite(const MatrixX<Scalar>& m) {
  if (m.rows() == 0) return true;
  const auto in = inertia(m);
  return in.positive == m.rows();
}

// ---------------------------------------------------------------------------------------
// Integer lattices.

/// Column Hermite reduction: returns (H, U) with U unimodular and m * U = H, where H is in
/// column echelon form (first `rank` columns nonzero, zero columns after).
struct ColumnHermite {
  MatrixZ h;
  MatrixZ u;
  Index rank = 0;
};

ColumnHermite column_hermite(const MatrixZ& m);

/// Columns form a Z-basis of {x in Z^n : m x = 0}.
MatrixZ integer_kernel(const MatrixZ& m);

/// An integral solution of m x = b, or nullopt if none exists.
std::optional<VectorZ> integer_solve(const MatrixZ& m, const VectorZ& b);

/// Nonzero Smith invariant factors d_1 | d_2 | ... (all positive).
std::vector<Integer> smith_invariants(const MatrixZ& m);

/// Unimodular matrix whose first column is the given primitive vector.
MatrixZ extend_to_unimodular(const VectorZ& primitive);

/// Expresses v in the basis given by the columns of `basis` (integral coordinates required).
std::optional<VectorZ> integer_coordinates(const MatrixZ& basis, const VectorZ& v);

}  // namespace conekit
