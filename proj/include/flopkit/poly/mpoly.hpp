#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flopkit/core/error.hpp"
#include "flopkit/poly/complex_mp.hpp"
#include "flopkit/poly/rational.hpp"

namespace flopkit {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Graded order: lower total degree first, ties broken so that x0 dominates.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ComplexMP& z) { return z.is_zero(); }

template <class T>
T convert_scalar(const Rational& q);
template <>
inline Rational convert_scalar<Rational>(const Rational& q) { return q; }
template <>
inline ComplexMP convert_scalar<ComplexMP>(const Rational& q) { return ComplexMP(q); }

template <class T>
T convert_scalar(const ComplexMP& z);
template <>
inline ComplexMP convert_scalar<ComplexMP>(const ComplexMP& z) { return z; }

/// Sparse multivariate polynomial; a term map from exponent vectors to nonzero coefficients.
template <class Scalar>
class BasicPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexLess>;

  BasicPoly() = default;
  explicit BasicPoly(int nvars) : nvars_(nvars) {}

  static BasicPoly constant(int nvars, const Scalar& c) {
    BasicPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }

  static BasicPoly variable(int nvars, int index) {
    BasicPoly p(nvars);
    Monomial m(nvars, 0);
    m.at(index) = 1;
    p.add_term(m, Scalar(1));
    return p;
  }

  static BasicPoly monomial(const Monomial& m, const Scalar& c) {
    BasicPoly p(static_cast<int>(m.size()));
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (static_cast<int>(m.size()) != nvars_) throw Error("monomial arity mismatch");
    if (flopkit::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (flopkit::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
  }

  int degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  BasicPoly& operator-=(const BasicPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  BasicPoly& operator*=(const Scalar& s) {
    if (flopkit::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend BasicPoly operator*(BasicPoly a, const Scalar& s) { return a *= s; }
  friend BasicPoly operator*(const Scalar& s, BasicPoly a) { return a *= s; }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    a.check_arity(b);
    BasicPoly out(a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }

  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  BasicPoly pow(int e) const {
    if (e < 0) throw PreconditionError("negative polynomial power");
    BasicPoly result = constant(nvars_, Scalar(1));
    BasicPoly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  BasicPoly derivative(int var) const {
    BasicPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial d = m;
      d[var] -= 1;
      out.add_term(d, c * Scalar(m[var]));
    }
    return out;
  }

  /// Homogeneous component of the given total degree.
  BasicPoly homogeneous_part(int deg) const {
    BasicPoly out(nvars_);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) == deg) out.add_term(m, c);
    return out;
  }

  /// Coefficients with respect to one variable: result[k] multiplies var^k (var exponent removed).
  std::vector<BasicPoly> coefficients_in(int var) const {
    std::vector<BasicPoly> out(std::max(0, degree_in(var) + 1), BasicPoly(nvars_));
    for (const auto& [m, c] : terms_) {
      Monomial r = m;
      r[var] = 0;
      out[m[var]].add_term(r, c);
    }
    return out;
  }

  /// Evaluates at a point; T must be constructible from Scalar via convert_scalar.
  template <class T>
  T evaluate(std::span<const T> x) const {
    if (static_cast<int>(x.size()) != nvars_) throw Error("evaluation point arity mismatch");
    std::vector<std::vector<T>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) powers[i].push_back(T(1));
    T sum(0);
    for (const auto& [m, c] : terms_) {
      T term = convert_scalar<T>(c);
      for (int i = 0; i < nvars_; ++i) {
        while (static_cast<int>(powers[i].size()) <= m[i]) powers[i].push_back(powers[i].back() * x[i]);
        if (m[i] > 0) term *= powers[i][m[i]];
      }
      sum += term;
    }
    return sum;
  }

  template <class T>
  T operator()(const std::vector<T>& x) const {
    return evaluate<T>(std::span<const T>(x));
  }

 private:
  void check_arity(const BasicPoly& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
  }

  int nvars_ = 0;
  TermMap terms_;
};

using MPoly = BasicPoly<Rational>;
using CPoly = BasicPoly<ComplexMP>;

/// Lifts a rational polynomial to complex coefficients at the active precision.
CPoly to_complex(const MPoly& f);

/// Partial derivatives in variable order.
template <class Scalar>
std::vector<BasicPoly<Scalar>> gradient(const BasicPoly<Scalar>& f) {
  std::vector<BasicPoly<Scalar>> g;
  g.reserve(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i));
  return g;
}

/// Substitutes x_i -> images[i]; all images share one arity, which becomes the result arity.
template <class Scalar, class ImageScalar>
BasicPoly<ImageScalar> compose(const BasicPoly<Scalar>& f,
                               const std::vector<BasicPoly<ImageScalar>>& images) {
  if (static_cast<int>(images.size()) != f.nvars()) throw Error("compose: image count mismatch");
  int m = images.empty() ? 0 : images.front().nvars();
  std::vector<std::vector<BasicPoly<ImageScalar>>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i].push_back(BasicPoly<ImageScalar>::constant(m, ImageScalar(1)));
  BasicPoly<ImageScalar> out(m);
  for (const auto& [e, c] : f.terms()) {
    BasicPoly<ImageScalar> term = BasicPoly<ImageScalar>::constant(m, convert_scalar<ImageScalar>(c));
    for (std::size_t i = 0; i < images.size(); ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i])
        powers[i].push_back(powers[i].back() * images[i]);
      if (e[i] > 0) term = term * powers[i][e[i]];
    }
    out += term;
  }
  return out;
}

/// Linear form sum_k coeffs[k] * s_k in coeffs.size() variables.
template <class Scalar>
BasicPoly<Scalar> linear_form(const std::vector<Scalar>& coeffs) {
  int n = static_cast<int>(coeffs.size());
  BasicPoly<Scalar> p(n);
  for (int k = 0; k < n; ++k) {
    Monomial m(n, 0);
    m[k] = 1;
    p.add_term(m, coeffs[k]);
  }
  return p;
}

/// f composed with the parametrization s -> sum_j s_j basis[j].  Throws DegenerateError when the
/// basis is linearly dependent (checked exactly for rational bases).
MPoly restrict_to_subspace(const MPoly& f, const std::vector<std::vector<Rational>>& basis);
CPoly restrict_to_subspace(const MPoly& f, const std::vector<std::vector<ComplexMP>>& basis);

/// Exact determinant of a square polynomial matrix (cofactor expansion over column subsets).
MPoly poly_det(const std::vector<std::vector<MPoly>>& m);

std::string to_string(const MPoly& f);

}  // namespace flopkit
