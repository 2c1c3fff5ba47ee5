#include "flopkit/poly/upoly.hpp"

#include <sstream>

#include "flopkit/core/error.hpp"

namespace flopkit {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::from_mpoly(const MPoly& f) {
  if (f.nvars() != 1) throw PreconditionError("UPoly::from_mpoly expects one variable");
  std::vector<Rational> c(std::max(0, f.degree() + 1));
  for (const auto& [m, a] : f.terms()) c[m[0]] = a;
  return UPoly(std::move(c));
}

Rational UPoly::operator()(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

ComplexMP UPoly::operator()(const ComplexMP& x) const {
  ComplexMP v;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + ComplexMP(*it);
  return v;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Rational(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= s;
  return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return Rational(1 / leading()) * *this;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  std::vector<Rational> raw(c_.begin(), c_.end());
  std::vector<Integer> ints = primitive_integer_vector(raw);
  std::vector<Rational> c(ints.size());
  const bool flip = ints.back() < 0;
  for (std::size_t i = 0; i < ints.size(); ++i) c[i] = flip ? Rational(-ints[i]) : Rational(ints[i]);
  return UPoly(std::move(c));
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (sgn(c_[k]) == 0) continue;
    out << (first ? "" : " + ") << "(" << to_string(c_[k]) << ")";
    if (k > 0) out << "*x^" << k;
    first = false;
  }
  return out.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    Rational f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  if (p.degree() < 1) throw PreconditionError("square-free decomposition needs positive degree");
  std::vector<std::pair<UPoly, int>> out;
  UPoly f = p.monic();
  UPoly df = f.derivative();
  UPoly a = gcd(f, df);
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(df, a).first;
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

}  // namespace flopkit
