#include "flopkit/lattice/quadext.hpp"

#include "flopkit/core/error.hpp"

namespace flopkit {

QuadExtScalar::QuadExtScalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d < 2) throw PreconditionError("QuadExtScalar: d must be a squarefree integer > 1");
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) throw PreconditionError("QuadExtScalar: d must be squarefree");
}

namespace {

void same_field(const QuadExtScalar& x, const QuadExtScalar& y) {
  if (x.d() != y.d()) throw PreconditionError("QuadExtScalar: mixed quadratic fields");
}

}  // namespace

QuadExtScalar operator+(const QuadExtScalar& x, const QuadExtScalar& y) {
  same_field(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, x.d_};
}

QuadExtScalar operator-(const QuadExtScalar& x, const QuadExtScalar& y) {
  same_field(x, y);
  return {x.a_ - y.a_, x.b_ - y.b_, x.d_};
}

QuadExtScalar operator*(const QuadExtScalar& x, const QuadExtScalar& y) {
  same_field(x, y);
  return {x.a_ * y.a_ + Rational(x.d_) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.d_};
}

int QuadExtScalar::sign() const {
  const int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with d b^2.
  Rational diff = a_ * a_ - Rational(d_) * b_ * b_;
  return sgn(diff) * sa;
}

std::string QuadExtScalar::str() const {
  return to_string(a_) + (sgn(b_) < 0 ? " - " : " + ") + to_string(Rational(abs(b_))) + "*sqrt(" +
         std::to_string(d_) + ")";
}

}  // namespace flopkit
