#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace bgeom {

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

/// Parses "p/q", "p" or "-p/q". Throws Error(ParseError) on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical wire form "p/q" in lowest terms; integers print as "n/1".
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return denominator(value) == 1; }

Rational floor(const Rational& value);

inline Vector zero_vector(Index n) { return Vector::Constant(n, Rational(0)); }
inline Matrix zero_matrix(Index rows, Index cols) { return Matrix::Constant(rows, cols, Rational(0)); }

inline bool is_zero(const Vector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return false;
  }
  return true;
}

}  // namespace bgeom
