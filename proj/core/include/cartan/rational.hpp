#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "cartan/square_matrix.hpp"

namespace cartan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = SquareMatrix<Rational>;

/// "p/q" in lowest terms with the sign on the numerator, or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& text);

/// p/q for q != 0. Boost 1.74 rejects some negative denominators in the
/// two-argument constructor, so the sign is moved to the numerator first.
inline Rational make_rational(std::int64_t p, std::int64_t q) {
  BigInt num(p);
  BigInt den(q);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline int sign(const Rational& r) { return r.sign(); }

}  // namespace cartan
