#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace corebound {

// Expression templates are off: Eigen expressions and boost expressions do not mix.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = VectorX<Rational>;
using RationalMatrix = MatrixX<Rational>;

/// Parses "p", "-p" or "p/q" with decimal digits only. Decimal points, exponents
/// and whitespace are rejected with ErrorCode::InvalidRational.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// "(a,b,c)" using format_rational for each coordinate.
std::string format_vector(const RationalVector& v);

RationalVector make_vector(std::initializer_list<long> coords);

/// Lexicographic comparison; shorter vectors order first on a common prefix.
template <class Scalar>
bool lex_less(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  const auto n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

template <class Scalar>
bool same_vector(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  return a.size() == b.size() && a == b;
}

}  // namespace corebound
