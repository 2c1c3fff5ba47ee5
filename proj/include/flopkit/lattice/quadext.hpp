#pragma once

#include <string>

#include "flopkit/poly/rational.hpp"

namespace flopkit {

/// a + b*sqrt(d) with rational a, b and squarefree d > 1.
class QuadExtScalar {
 public:
  QuadExtScalar() = default;
  QuadExtScalar(Rational a, Rational b, long d);
  static QuadExtScalar rational(const Rational& a, long d) { return {a, Rational(0), d}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  friend QuadExtScalar operator+(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator-(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator*(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator-(const QuadExtScalar& x) { return {-x.a_, -x.b_, x.d_}; }
  friend bool operator==(const QuadExtScalar& x, const QuadExtScalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Exact sign of the real number a + b*sqrt(d).
  int sign() const;
  std::string str() const;

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  long d_ = 6;
};

}  // namespace flopkit
