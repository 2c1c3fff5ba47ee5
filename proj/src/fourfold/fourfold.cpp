#include "flopkit/fourfold/fourfold.hpp"

#include "flopkit/detgeo/scroll.hpp"
#include "flopkit/poly/roots.hpp"

namespace flopkit {

namespace {

const Real& tolerance() {
  static const Real tol("1e-30");
  return tol;
}

Rational small(std::mt19937_64& rng, int bound) { return Rational(static_cast<int>(rng() % (2 * bound + 1)) - bound); }

Real coefficient_mass(const MPoly& f) {
  Real s = 0;
  for (const auto& [m, c] : f.terms()) s += abs(to_real(c));
  return s;
}

CVector csub(const CVector& a, const CVector& b) {
  CVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

CVector cscale(const CVector& a, const ComplexMP& s) {
  CVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

ComplexMP hermitian(const CVector& a, const CVector& b) {
  ComplexMP s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].conj() * b[i];
  return s;
}

// b with its component along a removed.
CVector off_span(const CVector& a, const CVector& b) { return csub(b, cscale(a, hermitian(a, b) / hermitian(a, a))); }

// Whichever of b0, b1 is farther from the span of a, made orthogonal to a.
CVector second_point(const CVector& a, const CVector& b0, const CVector& b1) {
  CVector c0 = off_span(a, b0), c1 = off_span(a, b1);
  return normalized_max(max_norm(c0) >= max_norm(c1) ? c0 : c1);
}

CVector take5(const CVector& v) { return CVector(v.begin(), v.begin() + 5); }

CVector embedc(const CVector& v) {
  CVector out = v;
  out.resize(6);
  return out;
}

CMatrix cphi(const DeterminantalInstance& inst, const CVector& y) {
  CMatrix m(3, CVector(3));
  const auto& basis = inst.lambda_perp.basis();
  for (int k = 0; k < 5; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (sgn(basis[k](i, j)) != 0) m[i][j] += y[k] * ComplexMP(basis[k](i, j));
  return m;
}

// The point where the line leaves the hyperplane x5 = 0.
CVector hyperplane_point(const NumLine& l) {
  CVector y(6);
  for (int i = 0; i < 6; ++i) y[i] = l.b[5] * l.a[i] - l.a[5] * l.b[i];
  return normalized_max(y);
}

Real scroll_value(const std::vector<MPoly>& quadrics, const CVector& y5) {
  const CVector y = normalized_max(y5);
  Real worst = 0;
  for (const auto& q : quadrics) {
    const Real mass = coefficient_mass(q);
    if (mass == 0) continue;
    worst = std::max(worst, Real(abs(q.evaluate<ComplexMP>(std::span<const ComplexMP>(y))) / mass));
  }
  return worst;
}

FourfoldLine make_line(const MPoly& cubic, NumLine l, std::optional<ProjLine> exact, int bits) {
  FourfoldLine out;
  out.line = std::move(l);
  out.exact = std::move(exact);
  out.bits = bits;
  out.residual = out.exact ? (restrict_to_subspace(cubic, {out.exact->a(), out.exact->b()}).is_zero() ? Real(0) : Real(1))
                           : containment_residual(cubic, out.line);
  return out;
}

IotaResult iota_exact(const CubicFourfold& x, const ProjLine& m, int bits) {
  const RatVector& a = m.a();
  const RatVector& b = m.b();
  RatVector y6(6);
  for (int i = 0; i < 6; ++i) y6[i] = b[5] * a[i] - a[5] * b[i];
  const RatVector y(y6.begin(), y6.begin() + 5);
  const auto coker = left_kernel(x.instance.phi(y));
  if (coker.size() != 1) throw DegenerateError("iota: m meets Y at a singular point");
  const ProjLine lvee = special_line(x.instance, SpecialKind::fromVdual, coker.front());
  const RatVector p1 = proportional(a, y6) ? b : a;
  const RatVector p2 = embed(proportional(lvee.a(), y) ? lvee.b() : lvee.a());
  if (rank(RatMatrix::from_rows({y6, p1, p2})) != 3) throw DegenerateError("iota: m and the P-dual line span no plane");

  // coordinates (s, t, u) on the plane: m is u = 0 and the P-dual line is t = 0
  const MPoly g = restrict_to_subspace(x.cubic, {y6, p1, p2});
  RatVector l(3);
  bool clean = true;
  for (const auto& [e, c] : g.terms()) {
    if (e[1] == 0 || e[2] == 0) {
      clean = false;
      continue;
    }
    Monomial rest = {e[0], e[1] - 1, e[2] - 1};
    for (int k = 0; k < 3; ++k)
      if (rest[k] == 1) l[k] = c;
  }
  if (!clean) throw DegenerateError("iota: restricted cubic is not divisible by the two known lines");
  const auto pts = nullspace(RatMatrix::from_rows({l}));
  auto to_space = [&](const RatVector& c) {
    return add(add(scale(y6, c[0]), scale(p1, c[1])), scale(p2, c[2]));
  };
  const ProjLine image(to_space(pts.at(0)), to_space(pts.at(1)));

  PrecisionScope scope(bits);
  IotaResult r;
  r.exact = true;
  r.image = make_line(x.cubic, to_numeric(image), image, bits);
  r.y = normalized_max(to_complex(y));
  r.vdual = to_complex(coker.front());
  r.lvee = {to_complex(embed(lvee.a())), to_complex(embed(lvee.b()))};
  r.plane = {to_complex(y6), to_complex(p1), to_complex(p2)};
  r.remainder = 0;
  return r;
}

IotaResult iota_numeric(const CubicFourfold& x, const NumLine& m, int bits) {
  PrecisionScope scope(bits);
  const Real& tol = tolerance();
  IotaResult r;
  const CVector y6 = hyperplane_point(m);
  r.y = take5(y6);
  const CMatrix phi = cphi(x.instance, r.y);
  CMatrix phit(3, CVector(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) phit[i][j] = phi[j][i];
  const auto coker = numeric_nullspace(phit, tol);
  if (coker.size() != 1) throw DegenerateError("iota: m meets Y at a singular point");
  r.vdual = coker.front();

  // the P-dual line: points z with phi(z)^T vdual = 0
  CMatrix sys(3, CVector(5));
  const auto& basis = x.instance.lambda_perp.basis();
  for (int k = 0; k < 5; ++k)
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i)
        if (sgn(basis[k](i, j)) != 0) sys[j][k] += ComplexMP(basis[k](i, j)) * r.vdual[i];
  const auto lv = numeric_nullspace(sys, tol);
  if (lv.size() != 2) throw DegenerateError("iota: P-dual line through y is not unique");
  r.lvee = {embedc(lv[0]), embedc(lv[1])};

  const CVector p1 = second_point(y6, m.a, m.b), p2 = second_point(y6, r.lvee.a, r.lvee.b);
  CMatrix span = {y6, p1, p2};
  if (numeric_rank(span, tol) != 3) throw DegenerateError("iota: m and the P-dual line span no plane");
  r.plane = {y6, p1, p2};

  const CPoly g = restrict_to_subspace(x.cubic, std::vector<CVector>{y6, p1, p2});
  CVector l(3);
  Real biggest = 0, rem = 0;
  for (const auto& [e, c] : g.terms()) biggest = std::max(biggest, abs(c));
  for (const auto& [e, c] : g.terms()) {
    if (e[1] == 0 || e[2] == 0) {
      rem = std::max(rem, Real(abs(c)));
      continue;
    }
    Monomial rest = {e[0], e[1] - 1, e[2] - 1};
    for (int k = 0; k < 3; ++k)
      if (rest[k] == 1) l[k] = c;
  }
  r.remainder = biggest == 0 ? Real(0) : rem / biggest;
  if (r.remainder > tol) throw DegenerateError("iota: division remainder " + ComplexMP(r.remainder).str(5) + " above tolerance");
  const auto pts = numeric_nullspace(CMatrix{l}, tol);
  if (pts.size() != 2) throw DegenerateError("iota: residual factor vanishes");
  auto to_space = [&](const CVector& c) {
    CVector out(6);
    for (int i = 0; i < 6; ++i) out[i] = c[0] * y6[i] + c[1] * p1[i] + c[2] * p2[i];
    return normalized_max(out);
  };
  r.image = make_line(x.cubic, {to_space(pts[0]), to_space(pts[1])}, std::nullopt, bits);
  return r;
}

}  // namespace

MPoly random_quadric(std::mt19937_64& rng, int nvars, int bound) {
  MPoly q(nvars);
  for (int i = 0; i < nvars; ++i)
    for (int j = i; j < nvars; ++j) {
      Monomial m(nvars, 0);
      ++m[i];
      ++m[j];
      q.add_term(m, small(rng, bound));
    }
  return q;
}

RatVector embed(const RatVector& y) {
  RatVector out = y;
  out.resize(6);
  return out;
}

CubicFourfold extend_to_fourfold(const DeterminantalInstance& inst, std::uint64_t seed, const FourfoldOptions& opts) {
  std::mt19937_64 rng(seed);
  const QuadricSampler sampler =
      opts.sampler ? opts.sampler : [](std::mt19937_64& g, int) { return random_quadric(g, 6, 5); };
  std::vector<MPoly> lifted;
  for (int i = 0; i < 5; ++i) lifted.push_back(MPoly::variable(6, i));
  const MPoly y6 = compose(inst.cubicY, lifted);

  for (int attempt = 0; attempt < opts.retry_cap; ++attempt) {
    MPoly q = sampler(rng, attempt);
    if (q.nvars() != 6 || !q.is_homogeneous() || q.degree() != 2)
      throw PreconditionError("extend_to_fourfold: sampler must return a quadric in six variables");
    // the x5-derivative at a node of Y is Q(node)
    bool nodes_smooth = true;
    for (const auto& n : inst.nodes) nodes_smooth = nodes_smooth && sgn(q(embed(n))) != 0;
    if (!nodes_smooth) continue;

    CubicFourfold x;
    x.cubic = y6 + MPoly::variable(6, 5) * q;
    x.quadric = q;
    x.instance = inst;
    x.seed = seed;
    x.attempts = attempt + 1;

    PrecisionScope scope(opts.bits);
    const auto grad = gradient(x.cubic);
    const Real mass = coefficient_mass(x.cubic);
    while (x.spot_checks < opts.spot_checks) {
      RatVector p(6), d(6);
      for (int i = 0; i < 6; ++i) {
        p[i] = small(rng, 6);
        d[i] = small(rng, 6);
      }
      if (rank(RatMatrix::from_rows({p, d})) != 2) continue;
      const MPoly r = restrict_to_subspace(x.cubic, {p, d});
      std::vector<Rational> coeffs(4);
      for (const auto& [e, c] : r.terms()) coeffs[e[1]] = c;
      const UPoly u(coeffs);
      if (u.degree() < 1) continue;
      ComplexMP t;
      try {
        t = roots(u, opts.bits).front().value;
      } catch (const RootConvergenceError&) {
        continue;  // draw another line
      }
      CVector z(6);
      for (int i = 0; i < 6; ++i) z[i] = ComplexMP(p[i]) + t * ComplexMP(d[i]);
      z = normalized_max(z);
      Real g = 0;
      for (const auto& gi : grad) g = std::max(g, Real(abs(gi.evaluate<ComplexMP>(std::span<const ComplexMP>(z)))));
      if (g / mass < Real("1e-20")) throw DegenerateError("extend_to_fourfold: spot check found a singular point");
      ++x.spot_checks;
    }
    return x;
  }
  throw DegenerateError("extend_to_fourfold: every sampled quadric vanished at a node");
}

Real containment_residual(const MPoly& f, const NumLine& l) {
  const CPoly r = restrict_to_subspace(f, std::vector<CVector>{normalized_max(l.a), normalized_max(l.b)});
  Real worst = 0;
  for (const auto& [e, c] : r.terms()) worst = std::max(worst, abs(c));
  const Real mass = coefficient_mass(f);
  return mass == 0 ? Real(0) : worst / mass;
}

Real line_distance(const NumLine& a, const NumLine& b) {
  const CVector pa = a.plucker(), pb = b.plucker();
  std::size_t k = 0;
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (abs(pa[i]) > abs(pa[k])) k = i;
  if (abs(pb[k]) == 0) return Real(1);
  const ComplexMP s = pa[k] / pb[k];
  Real worst = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) worst = std::max(worst, Real(abs(pa[i] - s * pb[i])));
  return worst;
}

std::vector<FourfoldLine> candidate_lines(const CubicFourfold& x, const RatVector& y, const RatVector& hyperplane,
                                          int bits) {
  const auto found = lines_through_point(x.cubic, embed(y), {hyperplane}, bits);
  PrecisionScope scope(bits);
  std::vector<FourfoldLine> out;
  for (const auto& l : found.lines) out.push_back(make_line(x.cubic, l.line, l.exact, bits));
  return out;
}

FourfoldLine sample_line(const CubicFourfold& x, std::uint64_t seed, int bits, const std::optional<RatVector>& y_in) {
  std::mt19937_64 rng(seed);
  const RatVector y = y_in ? *y_in : random_y_point(x.instance, rng);
  if (y.size() != 5 || sgn(x.instance.cubicY(y)) != 0) throw PreconditionError("sample_line: point is not on Y");
  PrecisionScope scope(bits);
  const Real bound = pow2(-bits / 2);
  for (int attempt = 0; attempt < 16; ++attempt) {
    RatVector h(6);
    for (auto& c : h) c = small(rng, 5);
    std::vector<FourfoldLine> cands;
    try {
      cands = candidate_lines(x, y, h, bits);
    } catch (const PreconditionError&) {
      continue;
    } catch (const DegenerateError&) {
      continue;
    }
    for (auto& c : cands) {
      const bool leaves = c.exact ? sgn(c.exact->b()[5]) != 0 || sgn(c.exact->a()[5]) != 0
                                  : abs(c.line.b[5]) > Real("1e-20");
      if (leaves && c.residual < bound) return std::move(c);
    }
  }
  throw DegenerateError("sample_line: every candidate line lies in the hyperplane section");
}

IotaResult iota_detail(const CubicFourfold& x, const FourfoldLine& m) {
  PrecisionScope scope(m.bits);
  if (m.exact) {
    if (sgn(m.exact->a()[5]) == 0 && sgn(m.exact->b()[5]) == 0)
      throw PreconditionError("iota: line lies in the hyperplane section");
    if (!restrict_to_subspace(x.cubic, {m.exact->a(), m.exact->b()}).is_zero())
      throw PreconditionError("iota: line is not on X");
    return iota_exact(x, *m.exact, m.bits);
  }
  const CVector a = normalized_max(m.line.a), b = normalized_max(m.line.b);
  if (abs(a[5]) < tolerance() && abs(b[5]) < tolerance())
    throw PreconditionError("iota: line lies in the hyperplane section");
  if (containment_residual(x.cubic, m.line) > tolerance()) throw PreconditionError("iota: line is not on X");
  return iota_numeric(x, {a, b}, m.bits);
}

FourfoldLine iota(const CubicFourfold& x, const FourfoldLine& m) { return iota_detail(x, m).image; }

IncidenceReport scroll_incidence_invariance(const CubicFourfold& x, const FourfoldLine& m, const RatVector& v) {
  PrecisionScope scope(m.bits);
  const auto quadrics = scroll_quadrics(x.instance, v);
  const FourfoldLine image = iota(x, m);
  IncidenceReport r;
  r.m_value = scroll_value(quadrics, take5(hyperplane_point(m.line)));
  r.image_value = scroll_value(quadrics, take5(hyperplane_point(image.line)));
  const Real far("1e-15");
  r.m_meets = r.m_value < tolerance();
  r.image_meets = r.image_value < tolerance();
  r.marginal = (!r.m_meets && r.m_value < far) || (!r.image_meets && r.image_value < far);
  return r;
}

Json to_json(const CubicFourfold& x) {
  Json j;
  j["seed"] = x.seed;
  j["attempts"] = x.attempts;
  j["instance_seed"] = x.instance.seed;
  j["cubic"] = to_json(x.cubic);
  j["quadric"] = to_json(x.quadric);
  j["spot_checks"] = x.spot_checks;
  return j;
}

Json to_json(const FourfoldLine& l) {
  Json j;
  PrecisionScope scope(l.bits);
  if (l.exact) {
    j["exact"] = true;
    j["points"] = {to_json(l.exact->a()), to_json(l.exact->b())};
  } else {
    j["exact"] = false;
  }
  Json pl = Json::array();
  for (const auto& c : l.line.plucker()) pl.push_back(to_json(c));
  j["plucker"] = pl;
  j["bits"] = l.bits;
  j["residual"] = ComplexMP(l.residual).str(6);
  return j;
}

}  // namespace flopkit
