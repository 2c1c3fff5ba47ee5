#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace flopkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical decimal form "p" or "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q"; throws flopkit::Error on malformed input.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Smallest positive integer c with c*v integral and gcd of the entries of c*v equal to 1.
/// Returns the primitive integer vector proportional to v (zero stays zero).
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace flopkit
