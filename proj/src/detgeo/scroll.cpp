#include <random>

#include "flopkit/detgeo/scroll.hpp"

namespace flopkit {

namespace {

using PolyMatrix = std::vector<std::vector<MPoly>>;

PolyMatrix symbolic_phi(const DeterminantalInstance& inst) {
  PolyMatrix m(3, std::vector<MPoly>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      RatVector c;
      for (const auto& b : inst.lambda_perp.basis()) c.push_back(b(i, j));
      m[i][j] = linear_form(c);
    }
  return m;
}

PolyMatrix mul(const RatMatrix& a, const PolyMatrix& m) {
  PolyMatrix out(3, std::vector<MPoly>(3, MPoly(m[0][0].nvars())));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a(i, k) * m[k][j];
  return out;
}

PolyMatrix mul(const PolyMatrix& m, const RatMatrix& a) {
  PolyMatrix out(3, std::vector<MPoly>(3, MPoly(m[0][0].nvars())));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += m[i][k] * a(k, j);
  return out;
}

MPoly minor2(const PolyMatrix& m, int r0, int r1, int c0, int c1) {
  return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
}

// Minors of rows 1, 2 with column j omitted, j = 0, 1, 2.
std::vector<MPoly> lower_rows(const PolyMatrix& m) {
  return {minor2(m, 1, 2, 1, 2), minor2(m, 1, 2, 0, 2), minor2(m, 1, 2, 0, 1)};
}

// Minors of columns 1, 2 with row i omitted.
std::vector<MPoly> right_columns(const PolyMatrix& m) {
  return {minor2(m, 1, 2, 1, 2), minor2(m, 0, 2, 1, 2), minor2(m, 0, 1, 1, 2)};
}

RatMatrix adapted_row_basis(const RatVector& v) { return complete_to_basis({v}, 3); }

// Columns: vdual itself (pairs positively with itself), then a basis of ker(vdual).
RatMatrix adapted_column_basis(const RatVector& vdual) {
  auto ker = nullspace(RatMatrix::from_rows({vdual}));
  return RatMatrix::from_columns({vdual, ker.at(0), ker.at(1)});
}

bool all_vanish(const std::vector<MPoly>& fs, const RatVector& y) {
  for (const auto& f : fs)
    if (sgn(f(y)) != 0) return false;
  return true;
}

}  // namespace

std::vector<MPoly> scroll_quadrics(const DeterminantalInstance& inst, const RatVector& v) {
  if (v.size() != 3 || is_zero_vector(v)) throw PreconditionError("scroll_quadrics: expected a nonzero 3-vector");
  return lower_rows(mul(*inverse(adapted_row_basis(v)), symbolic_phi(inst)));
}

std::vector<MPoly> dual_scroll_quadrics(const DeterminantalInstance& inst, const RatVector& vdual) {
  if (vdual.size() != 3 || is_zero_vector(vdual))
    throw PreconditionError("dual_scroll_quadrics: expected a nonzero functional");
  return right_columns(mul(symbolic_phi(inst), adapted_column_basis(vdual)));
}

ScrollData scroll_data(const DeterminantalInstance& inst, const RatVector& v, const std::optional<RatVector>& vdual_in,
                       std::uint64_t seed) {
  if (v.size() != 3 || is_zero_vector(v)) throw PreconditionError("scroll_data: expected a nonzero 3-vector");
  const RatVector vdual = vdual_in.value_or(v);
  if (sgn(dot(vdual, v)) == 0) throw DegenerateError("scroll_data: the functional must not vanish on v");
  // One basis v, v', v'' with vdual(v') = vdual(v'') = 0 for both sides.
  auto ker = nullspace(RatMatrix::from_rows({vdual}));
  const RatMatrix p = RatMatrix::from_columns({v, ker.at(0), ker.at(1)});
  const RatMatrix pinv = *inverse(p);
  const PolyMatrix phi = symbolic_phi(inst);
  const PolyMatrix adapted = mul(mul(pinv, phi), p);

  ScrollData out;
  const PolyMatrix rows_side = mul(pinv, phi), cols_side = mul(phi, p);
  out.tv = lower_rows(rows_side);
  out.tv_dual = right_columns(cols_side);
  out.union_quadric = minor2(adapted, 1, 2, 1, 2);

  // det(P^-1 phi) and det(phi P) expanded along the adapted row and column.
  MPoly row_expansion(5), col_expansion(5);
  for (int j = 0; j < 3; ++j) {
    MPoly t = rows_side[0][j] * out.tv[j];
    row_expansion += j % 2 ? -t : t;
    MPoly u = cols_side[j][0] * out.tv_dual[j];
    col_expansion += j % 2 ? -u : u;
  }
  const Rational dp = determinant(p);
  out.ideal_identity = row_expansion == (1 / dp) * inst.cubicY && col_expansion == dp * inst.cubicY;

  std::mt19937_64 rng(seed);
  auto small = [&](int bound) { return Rational(static_cast<int>(rng() % (2 * bound + 1)) - bound); };
  const auto perp_v = nullspace(RatMatrix::from_rows({v}));
  out.samples_on_scrolls = out.union_vanishes = true;
  while (out.samples < 25) {
    // T_v is ruled by the P(V dual) lines of functionals vanishing on v; T_vdual by the P(V) lines
    // of vectors in ker(vdual).
    RatVector a = add(scale(perp_v[0], small(5)), scale(perp_v[1], small(5)));
    RatVector b = add(scale(ker[0], small(5)), scale(ker[1], small(5)));
    if (is_zero_vector(a) || is_zero_vector(b)) continue;
    std::optional<ProjLine> ruling, coruling;
    try {
      ruling = special_line(inst, SpecialKind::fromVdual, a);
      coruling = special_line(inst, SpecialKind::fromV, b);
    } catch (const DegenerateError&) {
      continue;
    }
    const Rational s = small(4), t = small(4) + 5;
    const RatVector y1 = ruling->point(s, t), y2 = coruling->point(s, t);
    out.samples_on_scrolls = out.samples_on_scrolls && sgn(inst.cubicY(y1)) == 0 && sgn(inst.cubicY(y2)) == 0 &&
                             all_vanish(out.tv, y1) && all_vanish(out.tv_dual, y2);
    out.union_vanishes = out.union_vanishes && all_vanish({out.union_quadric}, y1) &&
                         all_vanish({out.union_quadric}, y2);
    ++out.samples;
  }
  return out;
}

bool TwistedQuarticReport::ok() const {
  for (std::size_t i = 0; i < on_tv.size(); ++i)
    if (!on_tv[i] || !on_tv_dual[i] || on_line[i]) return false;
  return !on_tv.empty();
}

TwistedQuarticReport twisted_quartic_check(const DeterminantalInstance& inst, const RatVector& s) {
  const RatMatrix sigma = inst.sigma(s);
  if (rank(sigma) != 2) throw PreconditionError("twisted_quartic_check: sigma must have rank 2");
  TwistedQuarticReport r;
  r.kernel = kernel(sigma).at(0);
  r.cokernel = left_kernel(sigma).at(0);
  const auto tv = scroll_quadrics(inst, r.kernel), tvd = dual_scroll_quadrics(inst, r.cokernel);
  for (int i = 0; i < 6; ++i) {
    r.on_tv.push_back(all_vanish(tv, inst.nodes[i]));
    r.on_tv_dual.push_back(all_vanish(tvd, inst.nodes[i]));
    r.on_line.push_back((sigma * inst.node_matrices[i] * sigma).is_zero());
    if (r.on_line.back())
      throw DegenerateError("twisted_quartic_check: node " + std::to_string(i + 1) + " lies on the line of s");
  }
  return r;
}

}  // namespace flopkit
