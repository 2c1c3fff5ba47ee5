#include "flopkit/schubert/schubert.hpp"

#include <sstream>

#include "flopkit/core/error.hpp"

namespace flopkit {

SchubertCycle::SchubertCycle(int n) : n_(n) {
  if (n < 2) throw PreconditionError("SchubertCycle: ambient n must be at least 2");
}

SchubertCycle SchubertCycle::sigma(int n, int a, int b) {
  SchubertCycle c(n);
  if (a < b || b < 0) throw PreconditionError("sigma: need a >= b >= 0");
  c.add({a, b}, 1);
  return c;
}

Integer SchubertCycle::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Integer(0) : it->second;
}

int SchubertCycle::degree() const {
  int d = -1;
  for (const auto& [p, c] : terms_) {
    int e = p.first + p.second;
    if (d >= 0 && e != d) throw PreconditionError("SchubertCycle: mixed codimension");
    d = e;
  }
  return d;
}

void SchubertCycle::add(const Partition2& p, const Integer& c) {
  if (p.first > n_ - 2) return;  // outside the box: zero class
  if (c == 0) return;
  Integer& slot = terms_[p];
  slot += c;
  if (slot == 0) terms_.erase(p);
}

void SchubertCycle::check(const SchubertCycle& o) const {
  if (n_ != o.n_) throw PreconditionError("SchubertCycle: ambient mismatch");
}

SchubertCycle& SchubertCycle::operator+=(const SchubertCycle& o) {
  check(o);
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

SchubertCycle operator-(SchubertCycle a, const SchubertCycle& b) {
  a.check(b);
  for (const auto& [p, c] : b.terms_) a.add(p, -c);
  return a;
}

SchubertCycle operator*(const Integer& s, SchubertCycle a) {
  SchubertCycle out(a.n_);
  for (const auto& [p, c] : a.terms_) out.add(p, s * c);
  return out;
}

std::string SchubertCycle::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [p, c] = *it;
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (abs(c) != 1) out << to_string(Integer(abs(c))) << "*";
    out << "s(" << p.first << "," << p.second << ")";
    first = false;
  }
  return out.str();
}

namespace {

/// Pieri: sigma_(a,b) * sigma_p adds a horizontal strip of size p.
SchubertCycle pieri(int n, const Partition2& lam, int p) {
  SchubertCycle out(n);
  const auto [a, b] = lam;
  for (int b2 = b; b2 <= a; ++b2) {
    int a2 = a + b + p - b2;
    if (a2 < a || a2 < b2) continue;
    out.add({a2, b2}, 1);
  }
  return out;
}

SchubertCycle times_special(const SchubertCycle& x, int p) {
  SchubertCycle out(x.ambient());
  if (p < 0) return out;
  for (const auto& [lam, c] : x.terms()) out += c * pieri(x.ambient(), lam, p);
  return out;
}

}  // namespace

SchubertCycle multiply(const SchubertCycle& x, const SchubertCycle& y) {
  if (x.ambient() != y.ambient()) throw PreconditionError("multiply: ambient mismatch");
  SchubertCycle out(x.ambient());
  for (const auto& [mu, c] : y.terms()) {
    // Giambelli: sigma_(a,b) = sigma_a sigma_b - sigma_(a+1) sigma_(b-1).
    const auto [a, b] = mu;
    SchubertCycle first = times_special(times_special(x, a), b);
    SchubertCycle second = times_special(times_special(x, a + 1), b - 1);
    out += c * (first - second);
  }
  return out;
}

SchubertCycle chern_sym3(int n) {
  SchubertCycle s1 = SchubertCycle::sigma(n, 1), s11 = SchubertCycle::sigma(n, 1, 1);
  return Integer(9) * (s11 * (Integer(2) * (s1 * s1) + s11));
}

Integer integrate(const SchubertCycle& c) {
  const int top = 2 * (c.ambient() - 2);
  if (!c.is_zero() && c.degree() != top)
    throw PreconditionError("integrate: class is not of top codimension " + std::to_string(top));
  return c.coefficient(c.ambient() - 2, c.ambient() - 2);
}

}  // namespace flopkit
