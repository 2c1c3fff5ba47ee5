#include "flopkit/segre3/segre3.hpp"

namespace flopkit {

namespace {

RatVector conic_monomials(const RatVector& p) {
  return {p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2], p[1] * p[2]};
}

// The conic through all points but the skipped one, evaluated at p.
Rational conic_value(const std::vector<RatVector>& pts, int skip, const RatVector& p) {
  std::vector<RatVector> rows;
  for (int i = 0; i < 6; ++i)
    if (i != skip) rows.push_back(conic_monomials(pts[i]));
  const auto conic = nullspace(RatMatrix::from_rows(rows));
  if (conic.size() != 1) throw DegenerateError("conic through five points is not unique");
  return dot(conic.front(), conic_monomials(p));
}

void check_avoids(const std::vector<RatVector>& pts, const RatVector& b, const std::string& side) {
  for (int i = 0; i < 6; ++i)
    if (proportional(b, pts[i]))
      throw PreconditionError("s lies on an exceptional line: " + side + " point equals q" + std::to_string(i + 1));
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (sgn(determinant(RatMatrix::from_columns({pts[i], pts[j], b}))) == 0)
        throw PreconditionError("s lies on a line of S: " + side + " point is on q" + std::to_string(i + 1) + "q" +
                                std::to_string(j + 1));
  for (int i = 0; i < 6; ++i)
    if (sgn(conic_value(pts, i, b)) == 0)
      throw PreconditionError("s lies on a line of S: " + side + " point is on the conic missing q" +
                              std::to_string(i + 1));
}

// Project points of P^2 from the center to P^1 via a basis of the functionals vanishing on it.
SixTupleOnLine project(const std::vector<RatVector>& pts, const RatVector& center) {
  const auto f = nullspace(RatMatrix::from_rows({center}));
  std::array<RatVector, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = {dot(f[0], pts[i]), dot(f[1], pts[i])};
  return SixTupleOnLine(out);
}

}  // namespace

SPointData s_open_point(const DeterminantalInstance& inst, const RatVector& s) {
  if (s.size() != 4 || is_zero_vector(s)) throw PreconditionError("s must be a nonzero point of P^3");
  if (sgn(inst.cubicS(s)) != 0) throw PreconditionError("s is not on S");
  SPointData d;
  d.sigma = inst.sigma(s);
  if (rank(d.sigma) != 2) throw PreconditionError("sigma(s) must have rank 2");
  d.beta = kernel(d.sigma).at(0);
  d.beta_dual = left_kernel(d.sigma).at(0);
  check_avoids(inst.q_points, d.beta, "beta(s)");
  check_avoids(inst.q_dual_points, d.beta_dual, "beta_dual(s)");
  return d;
}

SixTupleOnLine jmap(const DeterminantalInstance& inst, const RatVector& s) {
  return project(inst.q_points, s_open_point(inst, s).beta);
}

SixTupleOnLine jmap_dual(const DeterminantalInstance& inst, const RatVector& s) {
  return project(inst.q_dual_points, s_open_point(inst, s).beta_dual);
}

bool jmap_agree(const DeterminantalInstance& inst, const RatVector& s) {
  return tuple_equiv(jmap(inst, s), jmap_dual(inst, s));
}

}  // namespace flopkit
