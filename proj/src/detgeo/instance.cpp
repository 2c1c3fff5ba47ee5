#include "flopkit/detgeo/instance.hpp"

#include <algorithm>

#include "flopkit/detgeo/lines.hpp"
#include "flopkit/poly/resultant.hpp"

namespace flopkit {

namespace {

int small(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % (2 * bound + 1)) - bound; }

RatVector random_vector(std::mt19937_64& rng, int n, int bound) {
  RatVector v(n);
  do {
    for (auto& x : v) x = small(rng, bound);
  } while (is_zero_vector(v));
  return v;
}

RatVector primitive(const RatVector& v) {
  RatVector out;
  for (const auto& z : primitive_integer_vector(v)) out.emplace_back(z);
  return out;
}

RatVector unit(int n, int i) {
  RatVector e(n, Rational(0));
  e[i] = 1;
  return e;
}

}  // namespace

MPoly determinantal_form(const EndoSubspace& s) {
  const int n = s.dimension();
  std::vector<std::vector<MPoly>> m(3, std::vector<MPoly>(3, MPoly(n)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      RatVector c;
      for (const auto& b : s.basis()) c.push_back(b(i, j));
      m[i][j] = linear_form(c);
    }
  return poly_det(m);
}

std::vector<RatMatrix> sample_rank_one(std::mt19937_64& rng, int count) {
  std::vector<RatMatrix> out;
  for (int i = 0; i < count; ++i) {
    RatVector v = random_vector(rng, 3, 9);
    RatVector w = random_vector(rng, 3, 9);
    out.push_back(outer(v, w));
  }
  return out;
}

DeterminantalInstance instance_from_rank_one(const std::vector<RatMatrix>& five) {
  RatMatrix p6 = residual_rank1_point(five);
  DeterminantalInstance inst;
  inst.lambda_perp = EndoSubspace(five);
  inst.lambda = trace_perp(inst.lambda_perp);
  inst.cubicY = determinantal_form(inst.lambda_perp);
  inst.cubicS = determinantal_form(inst.lambda);
  for (int i = 0; i < 5; ++i) inst.nodes.push_back(unit(5, i));
  inst.nodes.push_back(primitive(*inst.lambda_perp.coordinates(p6)));
  for (const auto& n : inst.nodes) {
    RatMatrix p = inst.phi(n);
    inst.node_matrices.push_back(p);
    inst.q_points.push_back(primitive(image(p).at(0)));
    inst.q_dual_points.push_back(primitive(image(p.transpose()).at(0)));
  }
  if (!linear_general_position(inst.nodes)) throw DegenerateError("instance: nodes not in linear general position");
  for (const auto& n : inst.nodes)
    if (!is_odp(inst.cubicY, n)) throw DegenerateError("instance: a node is not an ordinary double point");
  MacaulayResult cert = macaulay_resultant(gradient(inst.cubicS));
  if (!cert.conclusive || sgn(cert.value) == 0) throw DegenerateError("instance: S is not certified smooth");
  inst.smoothness_certificate = cert.value;
  return inst;
}

DeterminantalInstance make_instance(std::uint64_t seed, const InstanceOptions& options) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < options.retry_cap; ++attempt) {
    auto five = options.sampler ? options.sampler(rng, attempt) : sample_rank_one(rng, 5);
    try {
      DeterminantalInstance inst = instance_from_rank_one(five);
      inst.seed = seed;
      inst.attempts = attempt + 1;
      return inst;
    } catch (const DegenerateError&) {
    } catch (const PreconditionError&) {
    }
  }
  throw DegenerateError("make_instance: retry cap reached for seed " + std::to_string(seed));
}

InstanceReport check_instance(const DeterminantalInstance& inst) {
  InstanceReport r;
  r.dimensions = inst.lambda.dimension() == 4 && inst.lambda_perp.dimension() == 5 && inst.nodes.size() == 6 &&
                 inst.node_matrices.size() == 6 && inst.q_points.size() == 6 && inst.q_dual_points.size() == 6;
  if (!r.dimensions) return r;
  r.orthogonal = true;
  for (const auto& a : inst.lambda.basis())
    for (const auto& b : inst.lambda_perp.basis()) r.orthogonal = r.orthogonal && sgn(trace_pair(a, b)) == 0;
  r.cubic_matches =
      inst.cubicY == determinantal_form(inst.lambda_perp) && inst.cubicS == determinantal_form(inst.lambda);
  r.nodes_rank_one = r.nodes_on_y = r.nodes_singular = r.nodes_odp = true;
  for (int i = 0; i < 6; ++i) {
    const RatMatrix& p = inst.node_matrices[i];
    r.nodes_rank_one = r.nodes_rank_one && rank(p) == 1 && p == inst.phi(inst.nodes[i]) &&
                       proportional(image(p).at(0), inst.q_points[i]) &&
                       proportional(image(p.transpose()).at(0), inst.q_dual_points[i]);
    const bool on = sgn(inst.cubicY(inst.nodes[i])) == 0;
    r.nodes_on_y = r.nodes_on_y && on;
    bool grad_zero = true;
    for (const auto& g : gradient(inst.cubicY)) grad_zero = grad_zero && sgn(g(inst.nodes[i])) == 0;
    r.nodes_singular = r.nodes_singular && grad_zero;
    r.nodes_odp = r.nodes_odp && on && is_odp(inst.cubicY, inst.nodes[i]);
  }
  r.general_position = linear_general_position(inst.nodes);
  MacaulayResult cert = macaulay_resultant(gradient(inst.cubicS));
  r.certificate = cert.value;
  r.s_smooth = cert.conclusive && sgn(cert.value) != 0;
  return r;
}

RatVector s_point_with_kernel(const DeterminantalInstance& inst, const RatVector& v) {
  std::vector<RatVector> cols;
  for (const auto& a : inst.lambda.basis()) cols.push_back(a * v);
  auto ker = nullspace(RatMatrix::from_columns(cols));
  if (ker.size() != 1) throw DegenerateError("s_point_with_kernel: kernel condition is not a single point");
  RatVector s = primitive(ker.front());
  if (rank(inst.sigma(s)) != 2) throw DegenerateError("s_point_with_kernel: sigma does not have rank 2");
  return s;
}

RatVector random_s_point(const DeterminantalInstance& inst, std::mt19937_64& rng) {
  for (int guard = 0; guard < 1000; ++guard) {
    RatVector v = random_vector(rng, 3, 6);
    bool special = false;
    for (const auto& q : inst.q_points) special = special || proportional(v, q);
    if (special) continue;
    try {
      return s_point_with_kernel(inst, v);
    } catch (const DegenerateError&) {
    }
  }
  throw DegenerateError("random_s_point: no admissible point found");
}

RatVector random_y_point(const DeterminantalInstance& inst, std::mt19937_64& rng) {
  const auto grad = gradient(inst.cubicY);
  for (int guard = 0; guard < 1000; ++guard) {
    RatVector v = random_vector(rng, 3, 6);
    std::optional<ProjLine> line;
    try {
      line = special_line(inst, SpecialKind::fromV, v);
    } catch (const DegenerateError&) {
      continue;
    }
    // Both weights nonzero: the spanning points come from a nullspace basis and are special.
    const int s = small(rng, 7);
    if (s == 0) continue;
    RatVector y = primitive(line->point(Rational(s), Rational(1 + static_cast<int>(rng() % 7))));
    if (rank(inst.phi(y)) != 2) continue;
    // A line joining y to a node would count twice among the lines through y.
    const bool on_node_cone = std::any_of(inst.nodes.begin(), inst.nodes.end(), [&](const RatVector& p) {
      return restrict_to_subspace(inst.cubicY, {p, y}).is_zero();
    });
    if (on_node_cone) continue;
    for (const auto& g : grad)
      if (sgn(g(y)) != 0) return y;
  }
  throw DegenerateError("random_y_point: no smooth point found");
}

}  // namespace flopkit
