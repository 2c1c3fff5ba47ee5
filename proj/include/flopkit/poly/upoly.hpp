#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flopkit/poly/complex_mp.hpp"
#include "flopkit/poly/mpoly.hpp"
#include "flopkit/poly/rational.hpp"

namespace flopkit {

/// Dense univariate polynomial over Q; coeffs()[k] multiplies x^k, leading coefficient nonzero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }
  /// Univariate view of a polynomial in one variable.
  static UPoly from_mpoly(const MPoly& f);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coefficient(int k) const { return k < 0 || k > degree() ? Rational(0) : c_[k]; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  ComplexMP operator()(const ComplexMP& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  UPoly derivative() const;
  UPoly monic() const;
  /// Integer polynomial with content 1 and positive leading coefficient.
  UPoly primitive() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic greatest common divisor (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Square-free decomposition by Yun's algorithm: pairs (factor, multiplicity), factors monic.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

}  // namespace flopkit
