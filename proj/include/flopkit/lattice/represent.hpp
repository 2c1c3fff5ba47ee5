#pragma once

#include <optional>
#include <string>

#include "flopkit/lattice/lattice.hpp"

namespace flopkit {

enum class RepresentStatus { witness, none, inconclusive };
std::string to_string(RepresentStatus s);

/// Why no nonzero class of J12 has Q(v) = n.
struct NoneCertificate {
  std::string obstruction;  // "parity", "congruence", "irrational-isotropic"
  long modulus = 0;         // for congruence obstructions on u^2 - 6x^2 = n/2
  std::string detail;
  Integer searched_bound;   // exhaustive search covered |x| <= bound
};

struct RepresentResult {
  RepresentStatus status;
  std::optional<LatticeClass> witness;
  std::optional<NoneCertificate> certificate;
};

inline constexpr long kDefaultRepresentBound = 10000;

/// Represents n by the J12 form 6x^2 + 12xy + 2y^2 with a nonzero class, or certifies that it
/// cannot. The search completes the square: with u = y + 3x, Q = 2(u^2 - 6x^2).
RepresentResult represents(const Integer& n, long bound = kDefaultRepresentBound);

}  // namespace flopkit
