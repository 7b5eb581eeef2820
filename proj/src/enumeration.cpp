#include "conekit/enumeration.hpp"

#include "conekit/error.hpp"
#include "conekit/exact_linalg.hpp"

#include <algorithm>
#include <cmath>

namespace conekit {

namespace {

Integer floor_q(const Rational& q) {
  Integer n = mp::numerator(q), d = mp::denominator(q);
  Integer f = n / d;
  if (f * d > n) f -= 1;
  return f;
}

// Fincke-Pohst search for integer k with (k - c)^T M (k - c) <= radius, using the exact
// decomposition sum_i q_ii (z_i + sum_{j>i} q_ij z_j)^2.
class Search {
 public:
  Search(const MatrixQ& m, VectorQ center, Rational radius, std::size_t cap)
      : q_(m), c_(std::move(center)), radius_(std::move(radius)), cap_(cap), k_(VectorZ::Zero(m.rows())) {
    const Index n = q_.rows();
    for (Index i = 0; i < n; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        q_(j, i) = q_(i, j);
        q_(i, j) /= q_(i, i);
      }
      for (Index a = i + 1; a < n; ++a)
        for (Index b = a; b < n; ++b) q_(a, b) -= q_(a, i) * q_(i, b);
    }
  }

  template <typename Visit>
  bool run(Visit&& visit) {
    if (radius_ < 0) return true;
    return descend(q_.rows() - 1, radius_, visit);
  }

 private:
  template <typename Visit>
  bool descend(Index i, const Rational& remaining, Visit& visit) {
    if (i < 0) {
      if (found_ >= cap_) return false;
      ++found_;
      visit(k_);
      return true;
    }
    Rational shift = c_[i];
    for (Index j = i + 1; j < q_.rows(); ++j) shift -= q_(i, j) * (Rational(k_[j]) - c_[j]);
    const Rational s = remaining / q_(i, i);  // (k_i - shift)^2 <= s
    if (i == 0) return last_level(shift, s, visit);
    auto fits = [&](const Integer& k) {
      const Rational t = Rational(k) - shift;
      return t * t <= s;
    };
    // Estimate the interval in floating point, then correct it exactly.
    const double width = std::sqrt(std::max(0.0, s.convert_to<double>()));
    const Integer mid = floor_q(shift);
    Integer lo = mid - Integer(static_cast<long long>(std::ceil(width)) + 1);
    while (!fits(lo) && lo <= mid + 1) ++lo;
    if (!fits(lo)) return true;
    while (fits(lo - 1)) --lo;
    Integer hi = lo;
    while (fits(hi + 1)) ++hi;
    for (Integer k = lo; k <= hi; ++k) {
      k_[i] = k;
      const Rational t = Rational(k) - shift;
      if (!descend(i - 1, remaining - q_(i, i) * t * t, visit)) return false;
    }
    k_[i] = 0;
    return true;
  }

  // Only points on the boundary of the ellipsoid are wanted, so the last coordinate solves
  // (k_0 - shift)^2 = s exactly.
  template <typename Visit>
  bool last_level(const Rational& shift, const Rational& s, Visit& visit) {
    if (s < 0) return true;
    const Integer rn = mp::sqrt(mp::numerator(s)), rd = mp::sqrt(mp::denominator(s));
    if (rn * rn != mp::numerator(s) || rd * rd != mp::denominator(s)) return true;
    const Rational r(rn, rd);
    for (const Rational& k : {shift - r, shift + r}) {
      if (!is_integer(k)) continue;
      k_[0] = mp::numerator(k);
      if (found_ >= cap_) return false;
      ++found_;
      visit(k_);
      if (r == 0) break;
    }
    k_[0] = 0;
    return true;
  }

  MatrixQ q_;
  VectorQ c_;
  Rational radius_;
  std::size_t cap_;
  std::size_t found_ = 0;
  VectorZ k_;
};

}  // namespace

SliceEnumeration enumerate_norm_slice(const MatrixQ& gram, const std::vector<VectorQ>& rows,
                                      const std::vector<Rational>& targets, const Rational& norm,
                                      std::size_t max_points) {
  if (rows.size() != targets.size()) fail(ErrorCode::DimensionMismatch, "enumerate_norm_slice: one target per row");
  const Index n = gram.rows();
  SliceEnumeration out;
  // Clear denominators so the affine constraints are integral.
  MatrixZ c(static_cast<Index>(rows.size()), n);
  VectorZ t(static_cast<Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) fail(ErrorCode::DimensionMismatch, "enumerate_norm_slice: constraint length");
    Integer den = mp::denominator(targets[r]);
    for (Index j = 0; j < n; ++j) den = lcm(den, mp::denominator(rows[r][j]));
    const VectorQ row = rows[r] * Rational(den);
    c.row(static_cast<Index>(r)) = to_integer(row).transpose();
    t[static_cast<Index>(r)] = mp::numerator(targets[r] * Rational(den));
  }
  const auto x0z = integer_solve(c, t);
  if (!x0z) return out;
  const VectorQ x0 = to_rational(*x0z);
  const MatrixQ b = to_rational(integer_kernel(c));
  const Rational base = x0.dot(gram * x0);

  auto accept = [&](const VectorQ& x) {
    if (x.dot(gram * x) == norm) out.points.push_back(x);
  };
  if (b.cols() == 0) {
    accept(x0);
    return out;
  }
  const MatrixQ m = -(b.transpose() * gram * b);
  if (!is_positive_definite(m))
    fail(ErrorCode::NotNegativeDefinite, "enumerate_norm_slice: form is not negative definite on the slice");
  const auto center = solve(m, VectorQ(b.transpose() * gram * x0));
  if (!center) fail(ErrorCode::Internal, "enumerate_norm_slice: singular reduced form");
  const Rational radius = base + center->dot(m * *center) - norm;
  Search search(m, *center, radius, max_points);
  out.truncated = !search.run([&](const VectorZ& k) { accept(VectorQ(x0 + b * to_rational(k))); });
  std::sort(out.points.begin(), out.points.end(), lex_less);
  return out;
}

}  // namespace conekit
