#include "flopkit/lattice/represent.hpp"

#include <set>

#include "flopkit/core/error.hpp"

namespace flopkit {

std::string to_string(RepresentStatus s) {
  switch (s) {
    case RepresentStatus::witness: return "witness";
    case RepresentStatus::none: return "none";
    case RepresentStatus::inconclusive: return "inconclusive";
  }
  return "";
}

namespace {

/// Smallest modulus from a fixed list at which u^2 - 6x^2 never hits m.
std::optional<long> congruence_obstruction(const Integer& m) {
  for (long modulus : {3L, 4L, 5L, 7L, 8L, 9L, 11L, 13L, 16L, 25L, 27L, 32L}) {
    std::set<long> values;
    for (long u = 0; u < modulus; ++u)
      for (long x = 0; x < modulus; ++x) values.insert(((u * u - 6 * x * x) % modulus + modulus) % modulus);
    Integer r = m % modulus;
    if (r < 0) r += modulus;
    if (!values.count(r.get_si())) return modulus;
  }
  return std::nullopt;
}

}  // namespace

RepresentResult represents(const Integer& n, long bound) {
  if (bound < 1) throw PreconditionError("represents: bound must be positive");
  if (n % 2 != 0) {
    return {RepresentStatus::none, std::nullopt,
            NoneCertificate{"parity", 2, "the form 6x^2 + 12xy + 2y^2 takes only even values", Integer(0)}};
  }
  const Integer m = n / 2;
  // Exhaustive search: for each x, u^2 = m + 6x^2 must be a perfect square. Among all witnesses
  // the one with the smallest positive pairing with g is kept (ties: larger x), so the answer
  // does not depend on the scan order.
  std::optional<LatticeClass> best;
  Integer best_key;
  const LatticeClass g(1, 0);
  for (long x = -bound; x <= bound; ++x) {
    Integer rhs = m + 6 * Integer(x) * x;
    if (rhs < 0 || !mpz_perfect_square_p(rhs.get_mpz_t())) continue;
    Integer u = sqrt(rhs);
    for (const Integer& su : {u, Integer(-u)}) {
      LatticeClass v(Integer(x), su - 3 * x);
      if (v.is_zero()) continue;
      Integer key = eval_form(v, g);
      if (key < 0) {
        v = -v;
        key = -key;
      }
      if (!best || key < best_key || (key == best_key && v.x > best->x)) {
        best = v;
        best_key = key;
      }
    }
  }
  if (best) return {RepresentStatus::witness, best, std::nullopt};
  if (m == 0) {
    return {RepresentStatus::none, std::nullopt,
            NoneCertificate{"irrational-isotropic", 0,
                            "u^2 = 6x^2 forces x = u = 0 since 6 is not a square (discriminant 24)",
                            Integer(bound)}};
  }
  if (auto modulus = congruence_obstruction(m)) {
    return {RepresentStatus::none, std::nullopt,
            NoneCertificate{"congruence", *modulus,
                            "u^2 - 6x^2 = " + to_string(m) + " has no solution mod " + std::to_string(*modulus),
                            Integer(bound)}};
  }
  return {RepresentStatus::inconclusive, std::nullopt, std::nullopt};
}

}  // namespace flopkit
