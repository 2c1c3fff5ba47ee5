#pragma once

#include <vector>

#include "flopkit/poly/mpoly.hpp"
#include "flopkit/poly/upoly.hpp"

namespace flopkit {

/// Sylvester resultant eliminating `var`; the result keeps the arity of the inputs (var absent).
MPoly resultant(const MPoly& f, const MPoly& g, int var);

/// f, g in two variables; eliminates `var` and returns a polynomial in the other one.
UPoly resultant_bivariate(const MPoly& f, const MPoly& g, int var);

/// Drops all variables except `keep`, which must be the only one occurring.
UPoly to_upoly(const MPoly& f, int keep);

struct MacaulayResult {
  Rational value;
  bool conclusive = true;
  int attempts = 0;
};

/// Macaulay resultant of n+1 homogeneous forms in n+1 variables, normalized so that
/// Res(x_0^d_0, ..., x_n^d_n) = 1. Zero iff the forms share a nontrivial common zero.
/// When the extraneous minor vanishes for every variable priority order, conclusive is false.
MacaulayResult macaulay_resultant(const std::vector<MPoly>& forms);

}  // namespace flopkit
