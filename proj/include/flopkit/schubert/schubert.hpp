#pragma once

#include <map>
#include <string>
#include <utility>

#include "flopkit/poly/rational.hpp"

namespace flopkit {

/// Two-row partition (a, b), a >= b >= 0.
using Partition2 = std::pair<int, int>;

/// Integer combination of Schubert classes sigma_(a,b) on G(2, n), with a <= n - 2.
class SchubertCycle {
 public:
  explicit SchubertCycle(int n);
  static SchubertCycle sigma(int n, int a, int b = 0);
  static SchubertCycle unit(int n) { return sigma(n, 0, 0); }

  int ambient() const { return n_; }
  const std::map<Partition2, Integer>& terms() const { return terms_; }
  Integer coefficient(int a, int b) const;
  bool is_zero() const { return terms_.empty(); }
  /// Codimension of the terms; -1 when zero, throws when mixed.
  int degree() const;

  void add(const Partition2& p, const Integer& c);
  SchubertCycle& operator+=(const SchubertCycle& o);
  friend SchubertCycle operator+(SchubertCycle a, const SchubertCycle& b) { return a += b; }
  friend SchubertCycle operator-(SchubertCycle a, const SchubertCycle& b);
  friend SchubertCycle operator*(const Integer& s, SchubertCycle a);
  friend bool operator==(const SchubertCycle& a, const SchubertCycle& b) = default;

  std::string str() const;

 private:
  void check(const SchubertCycle& o) const;
  int n_;
  std::map<Partition2, Integer> terms_;
};

/// Product in H*(G(2, n)) by the Pieri rule and Giambelli's formula, truncated to the 2 x (n-2) box.
SchubertCycle multiply(const SchubertCycle& x, const SchubertCycle& y);
inline SchubertCycle operator*(const SchubertCycle& x, const SchubertCycle& y) { return multiply(x, y); }

/// c_4(Sym^3 S^dual) = 9 sigma_11 (2 sigma_1^2 + sigma_11) on G(2, n).
SchubertCycle chern_sym3(int n);

/// Degree of a top-codimension class: the coefficient of the point class sigma_(n-2, n-2).
Integer integrate(const SchubertCycle& c);

}  // namespace flopkit
