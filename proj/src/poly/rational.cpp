#include "flopkit/poly/rational.hpp"

#include "flopkit/core/error.hpp"

namespace flopkit {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error("empty rational literal");
  Rational q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw Error("malformed rational literal '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer z = x.get_num() * (den / x.get_den());
    g = gcd(g, z);
    out.push_back(z);
  }
  if (g != 0) {
    for (auto& z : out) z /= g;
  }
  return out;
}

}  // namespace flopkit
