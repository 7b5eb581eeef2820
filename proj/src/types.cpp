#include "conekit/types.hpp"

#include "conekit/error.hpp"

#include <cctype>

namespace conekit {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::WrongSignature: return "WrongSignature";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::BoundaryInput: return "BoundaryInput";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::EqualCenters: return "EqualCenters";
    case ErrorCode::ProportionalInputs: return "ProportionalInputs";
    case ErrorCode::FormNotPreserved: return "FormNotPreserved";
    case ErrorCode::WrongConeComponent: return "WrongConeComponent";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::StabilizerNontrivial: return "StabilizerNontrivial";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotSupporting: return "NotSupporting";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::InvalidFixture: return "InvalidFixture";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_token(num)) fail(ErrorCode::MalformedInput, "not a rational: '" + std::string(text) + "'");
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num));
  if (slash == std::string_view::npos) return Rational(p);
  const auto den = text.substr(slash + 1);
  if (!is_integer_token(den)) fail(ErrorCode::MalformedInput, "not a rational: '" + std::string(text) + "'");
  Integer q(std::string(den[0] == '+' ? den.substr(1) : den));
  if (q == 0) fail(ErrorCode::MalformedInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

VectorQ parse_vector(std::string_view text) {
  std::vector<Rational> entries;
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  while (!text.empty()) {
    const auto comma = text.find(',');
    entries.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_std(entries);
}

std::string to_string(const VectorQ& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

bool is_integral(const VectorQ& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_integer(v[i])) return false;
  return true;
}

bool is_integral(const MatrixQ& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_integer(m(i, j))) return false;
  return true;
}

Integer gcd(const Integer& a, const Integer& b) { return mp::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return mp::abs(a / mp::gcd(a, b) * b);
}

VectorQ primitive_integral(const VectorQ& v) {
  Integer den = 1;
  for (Index i = 0; i < v.size(); ++i) den = lcm(den, mp::denominator(v[i]));
  VectorQ scaled = v * Rational(den);
  const Integer g = content(scaled);
  if (g == 0) return v;
  return scaled / Rational(g);
}

Integer content(const VectorQ& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = mp::gcd(g, mp::numerator(v[i]));
  return g;
}

VectorQ to_rational(const VectorZ& v) {
  VectorQ out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

MatrixQ to_rational(const MatrixZ& m) {
  MatrixQ out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = Rational(m(i, j));
  return out;
}

VectorZ to_integer(const VectorQ& v) {
  if (!is_integral(v)) fail(ErrorCode::PreconditionViolated, "vector is not integral: " + to_string(v));
  VectorZ out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = mp::numerator(v[i]);
  return out;
}

MatrixZ to_integer(const MatrixQ& m) {
  if (!is_integral(m)) fail(ErrorCode::PreconditionViolated, "matrix is not integral");
  MatrixZ out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = mp::numerator(m(i, j));
  return out;
}

bool lex_less(const VectorQ& a, const VectorQ& b) {
  for (Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

bool same_ray(const VectorQ& a, const VectorQ& b) {
  if (a.size() != b.size()) return false;
  return primitive_integral(a) == primitive_integral(b);
}

std::vector<Rational> to_std(const VectorQ& v) { return {v.data(), v.data() + v.size()}; }

VectorQ from_std(const std::vector<Rational>& v) {
  VectorQ out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Index>(i)] = v[i];
  return out;
}

}  // namespace conekit
