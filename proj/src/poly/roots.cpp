#include "flopkit/poly/roots.hpp"

#include <algorithm>
#include <cmath>

namespace flopkit {

namespace {

constexpr int kMaxIterations = 4000;

long bit_length(const Rational& q) {
  if (sgn(q) == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

ComplexMP eval_derivative(const std::vector<ComplexMP>& c, const ComplexMP& z, ComplexMP& value) {
  ComplexMP v = c.back(), d;
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
    d = d * z + v;
    v = v * z + c[k];
  }
  value = v;
  return d;
}

/// Simultaneous iteration on a square-free polynomial at the active precision.
std::vector<ComplexMP> aberth(const UPoly& p, int work_bits) {
  const int n = p.degree();
  std::vector<ComplexMP> c;
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  if (n == 1) return {-c[0] / c[1]};

  // Starting points on a circle of Cauchy-bound radius, rotated off the real axis.
  Real lead = abs(to_real(p.leading()));
  Real radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, Real(abs(to_real(p.coeffs()[k])) / lead));
  radius = 1 + radius;
  Real pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  std::vector<ComplexMP> z(n);
  for (int k = 0; k < n; ++k) {
    Real theta = 2 * pi * k / n + Real(0.4);
    z[k] = ComplexMP(radius * cos(theta), radius * sin(theta));
  }

  const Real tol = pow2(-work_bits + 8);
  // A root whose residual is at the rounding level of the evaluation cannot be improved further.
  const Real noise = pow2(-work_bits + 16);
  std::vector<Real> mags;
  for (const auto& a : c) mags.push_back(a.abs());
  auto magnitude = [&](const ComplexMP& x) {
    const Real r = x.abs();
    Real s = mags.back();
    for (int k = n - 1; k >= 0; --k) s = s * r + mags[k];
    return s;
  };
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool converged = true;
    for (int k = 0; k < n; ++k) {
      ComplexMP value;
      ComplexMP deriv = eval_derivative(c, z[k], value);
      if (value.is_zero() || value.abs() <= noise * magnitude(z[k])) continue;
      ComplexMP ratio = value / deriv;
      ComplexMP repulsion;
      for (int j = 0; j < n; ++j)
        if (j != k) repulsion += ComplexMP(1) / (z[k] - z[j]);
      ComplexMP step = ratio / (ComplexMP(1) - ratio * repulsion);
      z[k] -= step;
      if (step.abs() > tol * (1 + z[k].abs())) converged = false;
    }
    if (converged) return z;
  }
  std::vector<PolyRoot> partial;
  for (const auto& r : z) partial.push_back({r, std::nullopt, 1});
  throw RootConvergenceError("Aberth iteration did not converge", std::move(partial));
}

std::optional<Rational> recover_rational(const UPoly& primitive, const Real& x) {
  const Integer bound = abs(primitive.leading().get_num());
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Real rest = x;
  for (int step = 0; step < 400; ++step) {
    Real fl = floor(rest);
    Integer a(to_rational(fl).get_num());
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > bound) break;
    Rational cand(h2, k2);
    cand.canonicalize();
    if (sgn(primitive(cand)) == 0) return cand;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Real frac = rest - fl;
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return std::nullopt;
}

}  // namespace

Real relative_residual(const UPoly& p, const ComplexMP& z) {
  Real scale = 0, zpow = 1, za = z.abs();
  for (const auto& a : p.coeffs()) {
    scale += abs(to_real(a)) * zpow;
    zpow *= za;
  }
  if (scale == 0) return 0;
  return p(z).abs() / scale;
}

std::vector<PolyRoot> roots(const UPoly& p, int bits) {
  if (p.degree() < 1) throw PreconditionError("roots: degree must be at least 1");
  long height = 0;
  for (const auto& a : p.coeffs()) height = std::max(height, bit_length(a));
  const int work_bits = 2 * bits + 2 * static_cast<int>(std::min<long>(height, 1L << 20)) + 64;
  std::vector<PolyRoot> out;
  std::vector<PolyRoot> found;
  const Real accept = pow2(-bits / 2);
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    UPoly rest = factor.primitive();
    // Rational roots first, exactly, then the irrational remainder numerically.
    {
      PrecisionScope scope(work_bits);
      std::vector<ComplexMP> approx = aberth(rest, work_bits);
      for (const auto& z : approx) {
        if (abs(z.imag()) > accept * (1 + z.abs())) continue;
        if (auto q = recover_rational(rest, z.real())) {
          if (sgn(rest(*q)) != 0) continue;
          out.push_back({ComplexMP(*q), *q, mult});
          rest = divmod(rest, UPoly({-*q, Rational(1)})).first.primitive();
          if (rest.degree() < 1) break;
        }
      }
    }
    if (rest.degree() < 1) continue;
    PrecisionScope scope(work_bits);
    for (const auto& z : aberth(rest, work_bits)) {
      if (relative_residual(rest, z) > accept) {
        found.push_back({z, std::nullopt, mult});
        throw RootConvergenceError("root residual above tolerance", found);
      }
      found.push_back({z, std::nullopt, mult});
      out.push_back({z, std::nullopt, mult});
    }
  }
  return out;
}

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p) {
  std::vector<std::pair<Rational, int>> out;
  for (const auto& r : roots(p, 128))
    if (r.exact) out.emplace_back(*r.exact, r.multiplicity);
  return out;
}

}  // namespace flopkit
