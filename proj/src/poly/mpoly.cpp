#include "flopkit/poly/mpoly.hpp"

#include <sstream>

#include "flopkit/poly/linalg.hpp"

namespace flopkit {

CPoly to_complex(const MPoly& f) {
  CPoly out(f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, ComplexMP(c));
  return out;
}

namespace {

template <class Scalar>
std::vector<BasicPoly<Scalar>> subspace_images(const std::vector<std::vector<Scalar>>& basis, int n) {
  const int k = static_cast<int>(basis.size());
  std::vector<BasicPoly<Scalar>> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> coeffs(k);
    for (int j = 0; j < k; ++j) {
      if (static_cast<int>(basis[j].size()) != n) throw Error("restrict_to_subspace: basis arity mismatch");
      coeffs[j] = basis[j][i];
    }
    images.push_back(linear_form(coeffs));
  }
  return images;
}

}  // namespace

MPoly restrict_to_subspace(const MPoly& f, const std::vector<std::vector<Rational>>& basis) {
  if (!basis.empty() && rank(RatMatrix::from_rows(basis)) != static_cast<int>(basis.size()))
    throw DegenerateError("restrict_to_subspace: dependent basis");
  return compose(f, subspace_images(basis, f.nvars()));
}

CPoly restrict_to_subspace(const MPoly& f, const std::vector<std::vector<ComplexMP>>& basis) {
  return compose(f, subspace_images(basis, f.nvars()));
}

MPoly poly_det(const std::vector<std::vector<MPoly>>& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw PreconditionError("poly_det: matrix is not square");
  if (n == 0) return MPoly::constant(0, Rational(1));
  const int nv = m[0][0].nvars();
  if (n > 20) throw PreconditionError("poly_det: matrix too large for subset expansion");
  // minors[S] = determinant of the first popcount(S) rows on the column set S.
  std::vector<MPoly> minors(std::size_t(1) << n, MPoly(nv));
  minors[0] = MPoly::constant(nv, Rational(1));
  for (unsigned s = 0; s < minors.size(); ++s) {
    if (minors[s].is_zero()) continue;
    const int row = __builtin_popcount(s);
    if (row == n) continue;
    for (int c = 0; c < n; ++c) {
      if (s & (1u << c)) continue;
      if (m[row][c].is_zero()) continue;
      // Column c sits after the columns of s greater than it once inserted in order.
      const int after = __builtin_popcount(s >> c);
      MPoly term = minors[s] * m[row][c];
      if (after % 2) minors[s | (1u << c)] -= term;
      else minors[s | (1u << c)] += term;
    }
  }
  return minors.back();
}

std::string to_string(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    out << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool constant = total_degree(m) == 0;
    if (constant || a != 1) {
      out << to_string(a);
      if (!constant) out << '*';
    }
    bool lead = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!lead) out << '*';
      lead = false;
      out << 'x' << i;
      if (m[i] > 1) out << '^' << m[i];
    }
  }
  return out.str();
}

}  // namespace flopkit
