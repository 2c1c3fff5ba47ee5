#include <random>

#include "flopkit/detgeo/lines.hpp"
#include "flopkit/poly/resultant.hpp"
#include "flopkit/poly/roots.hpp"

namespace flopkit {

namespace {

ComplexMP eval2(const MPoly& f, const ComplexMP& a, const ComplexMP& b) {
  return f.evaluate<ComplexMP>(std::vector<ComplexMP>{a, b});
}

// |f(a, b)| / sum |c| |a|^i |b|^j
Real scaled_residual(const MPoly& f, const ComplexMP& a, const ComplexMP& b) {
  Real scale = 0;
  const Real aa = abs(a), bb = abs(b);
  for (const auto& [m, c] : f.terms()) scale += abs(to_real(c)) * pow(aa, m[0]) * pow(bb, m[1]);
  return scale == 0 ? Real(0) : abs(eval2(f, a, b)) / scale;
}

// Newton steps on the square system (q, k) in two unknowns.
void polish(const MPoly& q, const MPoly& k, ComplexMP& a, ComplexMP& b) {
  const MPoly qa = q.derivative(0), qb = q.derivative(1), ka = k.derivative(0), kb = k.derivative(1);
  for (int it = 0; it < 4; ++it) {
    ComplexMP fq = eval2(q, a, b), fk = eval2(k, a, b);
    ComplexMP j11 = eval2(qa, a, b), j12 = eval2(qb, a, b), j21 = eval2(ka, a, b), j22 = eval2(kb, a, b);
    ComplexMP det = j11 * j22 - j12 * j21;
    if (det.is_zero()) return;
    a -= (fq * j22 - fk * j12) / det;
    b -= (j11 * fk - j21 * fq) / det;
  }
}

}  // namespace

LinesThroughPointResult lines_through_point(const MPoly& f, const RatVector& y,
                                            const std::vector<RatVector>& extra_hyperplanes, int bits,
                                            std::uint64_t seed) {
  const int n = f.nvars();
  if (static_cast<int>(y.size()) != n) throw PreconditionError("lines_through_point: point arity mismatch");
  if (sgn(f(y)) != 0) throw PreconditionError("lines_through_point: point is not on the hypersurface");
  RatVector grad;
  for (const auto& g : gradient(f)) grad.push_back(g(y));
  if (is_zero_vector(grad)) throw PreconditionError("lines_through_point: point is singular");

  // Directions: grad . d = 0, one coordinate hyperplane missing y, plus the extra cuts.
  std::vector<RatVector> rows = {grad};
  int pivot = 0;
  while (sgn(y[pivot]) == 0) ++pivot;
  RatVector h(n, Rational(0));
  h[pivot] = 1;
  rows.push_back(h);
  for (const auto& e : extra_hyperplanes) rows.push_back(e);
  const auto dirs = nullspace(RatMatrix::from_rows(rows));
  if (dirs.size() != 3) throw PreconditionError("lines_through_point: direction space must be a plane");

  // f(s y + a e1 + b e2 + c e3): the s-linear part is the quadric, the s-free part the cubic.
  std::vector<MPoly> images;
  for (int i = 0; i < n; ++i) {
    RatVector c = {y[i], dirs[0][i], dirs[1][i], dirs[2][i]};
    images.push_back(linear_form(c));
  }
  const auto parts = compose(f, images).coefficients_in(0);
  auto part = [&](int k) { return k < static_cast<int>(parts.size()) ? parts[k] : MPoly(4); };
  if (!part(2).is_zero() || !part(3).is_zero()) throw Error("lines_through_point: tangent condition not satisfied");
  // drop the s slot
  auto drop_s = [](const MPoly& p) {
    MPoly out(3);
    for (const auto& [m, c] : p.terms()) out.add_term({m[1], m[2], m[3]}, c);
    return out;
  };
  const MPoly quad = drop_s(part(1)), cub = drop_s(part(0));

  std::mt19937_64 rng(seed);
  auto small = [&](int bound) { return Rational(static_cast<int>(rng() % (2 * bound + 1)) - bound); };
  UPoly last;
  for (int attempt = 0; attempt < 16; ++attempt) {
    RatMatrix t(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = small(3);
    if (sgn(determinant(t)) == 0) continue;
    std::vector<MPoly> chart;
    for (int i = 0; i < 3; ++i) {
      MPoly l(2);
      l.add_term({1, 0}, t(i, 0));
      l.add_term({0, 1}, t(i, 1));
      l.add_term({0, 0}, t(i, 2));
      chart.push_back(l);
    }
    const MPoly q = compose(quad, chart), k = compose(cub, chart);
    if (q.degree_in(1) != 2) continue;
    UPoly e = resultant_bivariate(q, k, 1);
    last = e;
    if (e.degree() != 6 || gcd(e, e.derivative()).degree() != 0) continue;

    LinesThroughPointResult result;
    result.eliminant = e.primitive();
    PrecisionScope scope(bits);
    const auto qb = q.coefficients_in(1);
    for (const auto& r : roots(e, bits)) {
      LineThroughPoint l;
      ComplexMP alpha = r.value, beta;
      if (r.exact) {
        MPoly fq = compose(q, std::vector<MPoly>{MPoly::constant(2, *r.exact), MPoly::variable(2, 1)});
        MPoly fk = compose(k, std::vector<MPoly>{MPoly::constant(2, *r.exact), MPoly::variable(2, 1)});
        UPoly g = gcd(to_upoly(fq, 1), to_upoly(fk, 1));
        if (g.degree() == 1) {
          Rational b0 = -g.coefficient(0) / g.coefficient(1);
          RatVector abc = t * RatVector{*r.exact, b0, Rational(1)};
          RatVector d(n, Rational(0));
          for (int j = 0; j < 3; ++j) d = add(d, scale(dirs[j], abc[j]));
          l.exact = ProjLine(y, d);
          alpha = ComplexMP(*r.exact);
          beta = ComplexMP(b0);
        }
      }
      if (!l.exact) {
        // beta: root of the quadric's fiber with the smaller cubic residual, then a joint polish.
        ComplexMP c2 = eval2(qb[2], alpha, ComplexMP()), c1 = eval2(qb[1], alpha, ComplexMP()),
                  c0 = eval2(qb[0], alpha, ComplexMP());
        ComplexMP disc = sqrt(c1 * c1 - ComplexMP(4L) * c2 * c0);
        ComplexMP b1 = (-c1 + disc) / (ComplexMP(2L) * c2), b2 = (-c1 - disc) / (ComplexMP(2L) * c2);
        beta = abs(eval2(k, alpha, b1)) <= abs(eval2(k, alpha, b2)) ? b1 : b2;
        polish(q, k, alpha, beta);
      }
      CVector abc(3);
      for (int i = 0; i < 3; ++i)
        abc[i] = ComplexMP(t(i, 0)) * alpha + ComplexMP(t(i, 1)) * beta + ComplexMP(t(i, 2));
      CVector d(n);
      for (int j = 0; j < 3; ++j)
        for (int i = 0; i < n; ++i)
          if (sgn(dirs[j][i]) != 0) d[i] += abc[j] * ComplexMP(dirs[j][i]);
      l.line = {to_complex(y), normalized_max(d)};
      l.eliminant_residual = relative_residual(e, r.exact ? ComplexMP(*r.exact) : r.value);
      l.direction_residual = std::max(scaled_residual(q, alpha, beta), scaled_residual(k, alpha, beta));
      result.lines.push_back(std::move(l));
    }
    return result;
  }
  std::string structure;
  if (!last.is_zero())
    for (const auto& [fac, mult] : squarefree_decomposition(last))
      structure += " deg " + std::to_string(fac.degree()) + "^" + std::to_string(mult);
  throw DegenerateError("lines_through_point: no square-free degree-6 eliminant;" + structure);
}

}  // namespace flopkit
