#include "flopkit/detgeo/projection.hpp"

namespace flopkit {

namespace {

MPoly drop_last(const MPoly& p) {
  const int n = p.nvars() - 1;
  MPoly out(n);
  for (const auto& [m, c] : p.terms()) {
    if (m[n] != 0) throw Error("drop_last: variable still present");
    out.add_term(Monomial(m.begin(), m.begin() + n), c);
  }
  return out;
}

RatMatrix hessian(const MPoly& q) {
  const int n = q.nvars();
  RatMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = q.derivative(i).derivative(j).coefficient(Monomial(n, 0));
  return h;
}

}  // namespace

NodeProjection project_from_node(const DeterminantalInstance& inst, int i) {
  if (i < 0 || i >= 6) throw PreconditionError("project_from_node: node index out of range");
  NodeProjection out;
  out.node = i;
  const RatMatrix b = basis_with_last(inst.nodes[i]);
  const auto parts = linear_substitute(inst.cubicY, b).coefficients_in(4);
  if (parts.size() > 2 && !parts[2].is_zero()) throw DegenerateError("project_from_node: node is not singular");
  out.a3 = drop_last(parts.at(0));
  out.a2 = parts.size() > 1 ? drop_last(parts[1]) : MPoly(4);
  const RatMatrix h = hessian(out.a2);
  out.quadric_rank = rank(h);

  const RatMatrix binv = *inverse(b);
  for (int j = 0; j < 6; ++j) {
    if (j == i) continue;
    RatVector c = binv * inst.nodes[j];
    out.images.emplace_back(c.begin(), c.begin() + 4);
  }

  const auto g2 = gradient(out.a2), g3 = gradient(out.a3);
  out.images_on_curve = out.images_singular = true;
  for (const auto& n : out.images) {
    out.images_on_curve = out.images_on_curve && !is_zero_vector(n) && sgn(out.a2(n)) == 0 && sgn(out.a3(n)) == 0;
    RatMatrix jac(2, 4);
    for (int k = 0; k < 4; ++k) {
      jac(0, k) = g2[k](n);
      jac(1, k) = g3[k](n);
    }
    out.images_singular = out.images_singular && rank(jac) <= 1;
  }

  out.distinct = out.no_common_ruling = true;
  for (std::size_t a = 0; a < out.images.size(); ++a)
    for (std::size_t c = a + 1; c < out.images.size(); ++c) {
      out.distinct = out.distinct && !proportional(out.images[a], out.images[c]);
      // both ends lie on the quadric, so the joining line does iff the polar pairing vanishes
      out.no_common_ruling = out.no_common_ruling && sgn(dot(out.images[a], h * out.images[c])) != 0;
    }
  out.no_four_coplanar = true;
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<RatVector> rows;
    for (int k = 0; k < 5; ++k)
      if (k != skip) rows.push_back(out.images[k]);
    out.no_four_coplanar = out.no_four_coplanar && sgn(determinant(RatMatrix::from_rows(rows))) != 0;
  }
  return out;
}

}  // namespace flopkit
