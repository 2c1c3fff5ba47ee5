#include "flopkit/detgeo/endo.hpp"

namespace flopkit {

RatVector vec(const RatMatrix& a) {
  RatVector v;
  v.reserve(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) v.push_back(a(r, c));
  return v;
}

RatMatrix unvec(const RatVector& v) {
  if (v.size() != 9) throw Error("unvec: expected 9 entries");
  RatMatrix a(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = v[3 * r + c];
  return a;
}

RatMatrix outer(const RatVector& v, const RatVector& w) {
  RatMatrix a(static_cast<int>(v.size()), static_cast<int>(w.size()));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) a(r, c) = v[r] * w[c];
  return a;
}

Rational trace_pair(const RatMatrix& a, const RatMatrix& b) {
  Rational t = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t += a(i, j) * b(j, i);
  return t;
}

namespace {

RatVector primitive(const RatVector& v) {
  RatVector out;
  for (const auto& z : primitive_integer_vector(v)) out.emplace_back(z);
  return out;
}

RatMatrix stacked(const std::vector<RatMatrix>& ms) {
  std::vector<RatVector> rows;
  for (const auto& m : ms) rows.push_back(vec(m));
  return RatMatrix::from_rows(rows);
}

}  // namespace

EndoSubspace::EndoSubspace(std::vector<RatMatrix> basis) : basis_(std::move(basis)) {
  for (const auto& m : basis_)
    if (m.rows() != 3 || m.cols() != 3) throw PreconditionError("EndoSubspace: basis entries must be 3x3");
  if (!basis_.empty() && rank(stacked(basis_)) != dimension())
    throw DegenerateError("EndoSubspace: dependent basis");
}

EndoSubspace EndoSubspace::span_of(const std::vector<RatMatrix>& generators) {
  std::vector<RatVector> vs;
  for (const auto& m : generators) vs.push_back(vec(m));
  std::vector<RatMatrix> basis;
  for (const auto& v : span_basis(vs)) basis.push_back(unvec(primitive(v)));
  return EndoSubspace(std::move(basis));
}

EndoSubspace EndoSubspace::full() {
  std::vector<RatMatrix> basis;
  for (int k = 0; k < 9; ++k) {
    RatVector e(9, Rational(0));
    e[k] = 1;
    basis.push_back(unvec(e));
  }
  return EndoSubspace(std::move(basis));
}

RatMatrix EndoSubspace::combination(const RatVector& c) const {
  if (static_cast<int>(c.size()) != dimension()) throw PreconditionError("combination: coordinate count mismatch");
  RatMatrix m(3, 3);
  for (int k = 0; k < dimension(); ++k)
    if (sgn(c[k]) != 0) m = m + c[k] * basis_[k];
  return m;
}

std::optional<RatVector> EndoSubspace::coordinates(const RatMatrix& m) const {
  if (basis_.empty()) return m.is_zero() ? std::optional<RatVector>(RatVector{}) : std::nullopt;
  std::vector<RatVector> cols;
  for (const auto& b : basis_) cols.push_back(vec(b));
  return solve(RatMatrix::from_columns(cols), vec(m));
}

bool EndoSubspace::contains(const RatMatrix& m) const { return coordinates(m).has_value(); }

bool EndoSubspace::same_span(const EndoSubspace& other) const {
  if (dimension() != other.dimension()) return false;
  for (const auto& m : other.basis_)
    if (!contains(m)) return false;
  return true;
}

EndoSubspace trace_perp(const EndoSubspace& s) {
  if (s.dimension() == 0) return EndoSubspace::full();
  // tr(AB) = vec(A^T) . vec(B)
  std::vector<RatVector> rows;
  for (const auto& a : s.basis()) rows.push_back(vec(a.transpose()));
  std::vector<RatMatrix> basis;
  for (const auto& v : nullspace(RatMatrix::from_rows(rows))) basis.push_back(unvec(primitive(v)));
  return EndoSubspace(std::move(basis));
}

EndoSubspace intersect(const EndoSubspace& a, const EndoSubspace& b) {
  std::vector<RatMatrix> g = trace_perp(a).basis();
  const EndoSubspace pb = trace_perp(b);
  g.insert(g.end(), pb.basis().begin(), pb.basis().end());
  return trace_perp(EndoSubspace::span_of(g));
}

std::vector<RatVector> kernel(const RatMatrix& a) { return nullspace(a); }

std::vector<RatVector> left_kernel(const RatMatrix& a) { return nullspace(a.transpose()); }

std::vector<RatVector> image(const RatMatrix& a) {
  std::vector<RatVector> cols;
  for (int c = 0; c < a.cols(); ++c) cols.push_back(a.column(c));
  return span_basis(cols);
}

bool tangent_sigma2_contains(const RatMatrix& a, const RatMatrix& m) {
  if (rank(a) != 2) throw PreconditionError("tangent_sigma2_contains: matrix must have rank 2");
  const RatVector k = kernel(a).at(0), c = left_kernel(a).at(0);
  return sgn(dot(c, m * k)) == 0;
}

bool tangent_sigma1_contains(const RatMatrix& b, const RatMatrix& m) {
  if (rank(b) != 1) throw PreconditionError("tangent_sigma1_contains: matrix must have rank 1");
  for (const auto& k : kernel(b))
    for (const auto& c : left_kernel(b))
      if (sgn(dot(c, m * k)) != 0) return false;
  return true;
}

RatMatrix annihilator(const RatMatrix& a) {
  if (rank(a) != 2) throw PreconditionError("annihilator: matrix must have rank 2");
  return outer(kernel(a).at(0), left_kernel(a).at(0));
}

}  // namespace flopkit
