#include "flopkit/detgeo/endo.hpp"

namespace flopkit {

std::string to_string(DualityCase c) {
  return c == DualityCase::tangent_sigma2 ? "tangent_sigma2" : "meets_sigma1";
}

namespace {

// Linear conditions on the 9 entries of an unknown matrix M, one row each.
struct Conditions {
  std::vector<RatVector> rows;

  // f^T M g = 0
  void bilinear(const RatVector& f, const RatVector& g) {
    RatVector r(9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[3 * i + j] = f[i] * g[j];
    rows.push_back(std::move(r));
  }
  // M in the trace complement of s
  void perp_to(const EndoSubspace& s) {
    for (const auto& a : s.basis()) rows.push_back(vec(a.transpose()));
  }
  std::vector<RatMatrix> solutions() const {
    std::vector<RatMatrix> out;
    for (const auto& v : nullspace(RatMatrix::from_rows(rows))) out.push_back(unvec(v));
    return out;
  }
};

RatVector unit(int i) {
  RatVector e(3, Rational(0));
  e[i] = 1;
  return e;
}

bool primal_ok(const EndoSubspace& lambda, DualityCase c, const RatMatrix& a) {
  if (c == DualityCase::meets_sigma1) return rank(a) == 1;
  if (rank(a) != 2) return false;
  for (const auto& m : lambda.basis())
    if (!tangent_sigma2_contains(a, m)) return false;
  return true;
}

std::optional<RatMatrix> search_primal(const EndoSubspace& lambda, DualityCase c, int bound) {
  const int n = lambda.dimension();
  std::vector<int> x(n, -bound);
  for (;;) {
    int first = 0;
    while (first < n && x[first] == 0) ++first;
    if (first < n && x[first] > 0) {
      RatVector coords;
      for (int v : x) coords.emplace_back(v);
      RatMatrix a = lambda.combination(coords);
      if (primal_ok(lambda, c, a)) return a;
    }
    int i = n - 1;
    while (i >= 0 && x[i] == bound) x[i--] = -bound;
    if (i < 0) return std::nullopt;
    ++x[i];
  }
}

const RatMatrix* independent_of(const std::vector<RatMatrix>& candidates, const RatMatrix& b) {
  for (const auto& m : candidates)
    if (!m.is_zero() && !proportional(vec(m), vec(b))) return &m;
  return nullptr;
}

}  // namespace

DualityWitness linalg_duality_witness(const EndoSubspace& lambda, DualityCase c,
                                      const std::optional<RatMatrix>& primal, int bound) {
  if (lambda.dimension() != 4) throw PreconditionError("linalg_duality_witness: subspace must be 4-dimensional");
  DualityWitness w;
  w.input_case = c;
  w.search_bound = primal ? 0 : bound;
  std::optional<RatMatrix> a0 = primal;
  if (a0) {
    if (!lambda.contains(*a0)) throw PreconditionError("linalg_duality_witness: witness is not in the subspace");
    if (!primal_ok(lambda, c, *a0))
      throw PreconditionError("linalg_duality_witness: witness does not exhibit the stated degeneracy");
  } else {
    a0 = search_primal(lambda, c, bound);
    if (!a0) {
      w.detail = "no degenerate point with coordinates in [-" + std::to_string(bound) + ", " +
                 std::to_string(bound) + "]";
      return w;
    }
  }
  w.found = true;
  w.primal = *a0;
  const EndoSubspace perp = trace_perp(lambda);

  if (c == DualityCase::tangent_sigma2) {
    // B0 has kernel im(A0) and image ker(A0); B1 maps im(A0) into ker(A0) and ker(A0) into im(A0).
    w.b0 = annihilator(*a0);
    Conditions cond;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) cond.bilinear(a0->row(i), a0->column(j));
    cond.bilinear(left_kernel(*a0).at(0), kernel(*a0).at(0));
    cond.perp_to(lambda);
    const auto sols = cond.solutions();
    const RatMatrix* b1 = independent_of(sols, w.b0);
    w.complement_tangent_sigma1 = true;
    if (b1) w.b1 = *b1;
    w.verified = perp.contains(w.b0) && b1 && perp.contains(*b1) && tangent_sigma1_contains(w.b0, *b1);
    w.detail = "complement tangent to Sigma_1";
    return w;
  }

  // A0 = u w^T: solve M u = 0, w^T M (ker A0) = 0 inside the complement.
  const RatVector u = image(*a0).at(0);
  const RatVector row = image(a0->transpose()).at(0);
  Conditions cond;
  for (int i = 0; i < 3; ++i) cond.bilinear(unit(i), u);
  for (const auto& k : kernel(*a0)) cond.bilinear(row, k);
  cond.perp_to(lambda);
  const auto sols = cond.solutions();
  if (sols.empty()) {
    w.detail = "auxiliary space misses the complement";
    return w;
  }
  w.b0 = sols.front();
  if (rank(w.b0) == 2) {
    w.complement_tangent_sigma1 = false;
    w.verified = perp.contains(w.b0);
    for (const auto& m : perp.basis()) w.verified = w.verified && tangent_sigma2_contains(w.b0, m);
    w.detail = "complement tangent to Sigma_2 at a smooth point";
    return w;
  }
  Conditions tangent;
  for (const auto& k : kernel(w.b0))
    for (const auto& cc : left_kernel(w.b0)) tangent.bilinear(cc, k);
  tangent.perp_to(lambda);
  const auto tsols = tangent.solutions();
  const RatMatrix* b1 = independent_of(tsols, w.b0);
  w.complement_tangent_sigma1 = true;
  if (b1) w.b1 = *b1;
  w.verified = perp.contains(w.b0) && b1 && perp.contains(*b1) && tangent_sigma1_contains(w.b0, *b1);
  w.detail = "complement tangent to Sigma_1";
  return w;
}

}  // namespace flopkit
