#include "flopkit/detgeo/instance.hpp"
#include "flopkit/detgeo/projection.hpp"

namespace flopkit {

RatMatrix basis_with_last(const RatVector& p) {
  const int n = static_cast<int>(p.size());
  RatMatrix c = complete_to_basis({p}, n);
  RatMatrix b(n, n);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) b(r, j) = c(r, (j + 1) % n);
  return b;
}

MPoly linear_substitute(const MPoly& f, const RatMatrix& b) {
  std::vector<MPoly> images;
  for (int i = 0; i < b.rows(); ++i) images.push_back(linear_form(b.row(i)));
  return compose(f, images);
}

namespace {

// Rank of the symmetric matrix of second derivatives of a quadratic form in its first n variables.
int quadric_rank(const MPoly& q, int n) {
  RatMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    MPoly di = q.derivative(i);
    for (int j = 0; j < n; ++j) h(i, j) = di.derivative(j).coefficient(Monomial(q.nvars(), 0));
  }
  return rank(h);
}

}  // namespace

bool is_odp(const MPoly& f, const RatVector& p) {
  if (static_cast<int>(p.size()) != f.nvars()) throw PreconditionError("is_odp: point arity mismatch");
  if (sgn(f(p)) != 0) throw PreconditionError("is_odp: point is not on the hypersurface");
  const int n = f.nvars();
  const auto parts = linear_substitute(f, basis_with_last(p)).coefficients_in(n - 1);
  auto part = [&](int k) { return k < static_cast<int>(parts.size()) ? parts[k] : MPoly(n); };
  if (f.degree() < 2) return false;
  // f = x_{n-1}^{d-1} A_1 + x_{n-1}^{d-2} A_2 + ...
  const int d = f.degree();
  if (!part(d - 1).is_zero()) return false;
  return quadric_rank(part(d - 2), n - 1) == n - 1;
}

bool linear_general_position(const std::vector<RatVector>& points) {
  if (points.empty()) return true;
  const int d = static_cast<int>(points.front().size());
  const int n = static_cast<int>(points.size());
  if (n < d) return rank(RatMatrix::from_rows(points)) == n;
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    std::vector<RatVector> rows;
    for (int i : pick) rows.push_back(points[i]);
    if (sgn(determinant(RatMatrix::from_rows(rows))) == 0) return false;
    int i = d - 1;
    while (i >= 0 && pick[i] == n - d + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace flopkit
