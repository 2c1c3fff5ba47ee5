#pragma once

#include <optional>
#include <vector>

#include "flopkit/core/error.hpp"
#include "flopkit/poly/complex_mp.hpp"
#include "flopkit/poly/upoly.hpp"

namespace flopkit {

struct PolyRoot {
  ComplexMP value;
  std::optional<Rational> exact;  // set when the root is rational
  int multiplicity = 1;
};

/// Raised when simultaneous iteration hits its cap; carries what was found so far.
class RootConvergenceError : public ConvergenceError {
 public:
  RootConvergenceError(const std::string& what, std::vector<PolyRoot> partial)
      : ConvergenceError(what), partial_(std::move(partial)) {}
  const std::vector<PolyRoot>& partial() const { return partial_; }

 private:
  std::vector<PolyRoot> partial_;
};

/// All complex roots of p with multiplicities. Rational roots come out exact; the rest are
/// computed by Aberth iteration and satisfy |p(z)| <= 2^(-bits/2) * sum |a_i| |z|^i.
/// The returned values carry the active working precision of the call.
std::vector<PolyRoot> roots(const UPoly& p, int bits);

/// Rational roots only, exact, with multiplicities.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p);

/// Scaled residual |p(z)| / sum |a_i| |z|^i.
Real relative_residual(const UPoly& p, const ComplexMP& z);

}  // namespace flopkit
