#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "flopkit/poly/rational.hpp"

namespace flopkit {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

/// Default working precision of the numeric path, overridable through FLOPKIT_PRECISION.
inline constexpr int kDefaultPrecisionBits = 256;
int default_precision_bits();

/// Sets the MPFR working precision for every Real created in its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  int bits() const { return bits_; }

 private:
  int bits_;
  unsigned saved_digits_;
};

Real to_real(const Rational& q);
/// Exact conversion of the binary floating-point value.
Rational to_rational(const Real& x);
Real pow2(long exponent);
int precision_bits(const Real& x);

/// Multiprecision complex number; arithmetic runs at the precision of the active PrecisionScope.
class ComplexMP {
 public:
  ComplexMP() : re_(0), im_(0) {}
  ComplexMP(Real re, Real im = Real(0)) : re_(std::move(re)), im_(std::move(im)) {}
  explicit ComplexMP(const Rational& q) : re_(to_real(q)), im_(0) {}
  explicit ComplexMP(long v) : re_(v), im_(0) {}

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  int precision_bits() const { return flopkit::precision_bits(re_); }

  ComplexMP& operator+=(const ComplexMP& o);
  ComplexMP& operator-=(const ComplexMP& o);
  ComplexMP& operator*=(const ComplexMP& o);
  ComplexMP& operator/=(const ComplexMP& o);

  friend ComplexMP operator+(ComplexMP a, const ComplexMP& b) { return a += b; }
  friend ComplexMP operator-(ComplexMP a, const ComplexMP& b) { return a -= b; }
  friend ComplexMP operator*(ComplexMP a, const ComplexMP& b) { return a *= b; }
  friend ComplexMP operator/(ComplexMP a, const ComplexMP& b) { return a /= b; }
  friend ComplexMP operator-(const ComplexMP& a) { return ComplexMP(-a.re_, -a.im_); }
  friend bool operator==(const ComplexMP& a, const ComplexMP& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  ComplexMP conj() const { return ComplexMP(re_, -im_); }
  Real abs() const;
  Real norm() const { return re_ * re_ + im_ * im_; }

  /// Decimal rendering with the given number of significant digits.
  std::string str(int digits = 20) const;

 private:
  Real re_;
  Real im_;
};

ComplexMP sqrt(const ComplexMP& z);
inline Real abs(const ComplexMP& z) { return z.abs(); }

}  // namespace flopkit
