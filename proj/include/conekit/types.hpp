#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace conekit {

namespace mp = boost::multiprecision;

// Expression templates are disabled so the scalars compose cleanly inside Eigen expressions.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;
using MatrixZ = MatrixX<Integer>;
using VectorZ = VectorX<Integer>;

using Index = Eigen::Index;

/// Canonical text form of a rational: "p" for integers, otherwise "p/q" in lowest terms
/// with a positive denominator.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws conekit::Error(MalformedInput) on anything else or q == 0.
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals, e.g. "1,-1/2,0".
VectorQ parse_vector(std::string_view text);

std::string to_string(const VectorQ& v);

template <typename T>
bool is_zero(const MatrixX<T>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename T>
bool is_zero(const VectorX<T>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

inline bool is_integer(const Rational& q) { return mp::denominator(q) == 1; }

bool is_integral(const VectorQ& v);
bool is_integral(const MatrixQ& m);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Positive multiple of v that is integral with coprime entries (sign preserved).
/// The zero vector is returned unchanged.
VectorQ primitive_integral(const VectorQ& v);

/// Content of an integral vector: gcd of its entries (0 for the zero vector).
Integer content(const VectorQ& v);

VectorQ to_rational(const VectorZ& v);
MatrixQ to_rational(const MatrixZ& m);
/// Requires integral input; throws Error(PreconditionViolated) otherwise.
VectorZ to_integer(const VectorQ& v);
MatrixZ to_integer(const MatrixQ& m);

/// Strict lexicographic order on equal-length vectors.
bool lex_less(const VectorQ& a, const VectorQ& b);

/// Projective equality for nonzero vectors: a = t*b for some t > 0.
bool same_ray(const VectorQ& a, const VectorQ& b);

std::vector<Rational> to_std(const VectorQ& v);
VectorQ from_std(const std::vector<Rational>& v);

}  // namespace conekit
