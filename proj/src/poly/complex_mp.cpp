#include "flopkit/poly/complex_mp.hpp"

#include <cmath>
#include <cstdlib>

namespace flopkit {

namespace {

unsigned digits_for_bits(int bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

}  // namespace

int default_precision_bits() {
  if (const char* env = std::getenv("FLOPKIT_PRECISION")) {
    int bits = std::atoi(env);
    if (bits >= 64) return bits;
  }
  return kDefaultPrecisionBits;
}

PrecisionScope::PrecisionScope(int bits)
    : bits_(bits), saved_digits_(Real::default_precision()) {
  Real::default_precision(digits_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits_); }

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Rational to_rational(const Real& x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x.backend().data());
  return q;
}

Real pow2(long exponent) {
  Real r(1);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), exponent, MPFR_RNDN);
  return r;
}

int precision_bits(const Real& x) {
  return static_cast<int>(mpfr_get_prec(x.backend().data()));
}

ComplexMP& ComplexMP::operator+=(const ComplexMP& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexMP& ComplexMP::operator-=(const ComplexMP& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexMP& ComplexMP::operator*=(const ComplexMP& o) {
  Real r = re_ * o.re_ - im_ * o.im_;
  Real i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

ComplexMP& ComplexMP::operator/=(const ComplexMP& o) {
  Real d = o.norm();
  Real r = (re_ * o.re_ + im_ * o.im_) / d;
  Real i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Real ComplexMP::abs() const { return boost::multiprecision::hypot(re_, im_); }

std::string ComplexMP::str(int digits) const {
  std::string s = re_.str(digits, std::ios_base::scientific);
  if (im_ != 0) {
    s += (im_ < 0 ? " - " : " + ");
    s += boost::multiprecision::abs(im_).str(digits, std::ios_base::scientific);
    s += "i";
  }
  return s;
}

ComplexMP sqrt(const ComplexMP& z) {
  if (z.is_zero()) return ComplexMP();
  Real m = z.abs();
  Real a = boost::multiprecision::sqrt((m + boost::multiprecision::abs(z.real())) / 2);
  if (z.real() >= 0) {
    return ComplexMP(a, z.imag() / (2 * a));
  }
  Real b = z.imag() >= 0 ? a : Real(-a);
  return ComplexMP(boost::multiprecision::abs(z.imag()) / (2 * a), b);
}

}  // namespace flopkit
