#include <doctest.h>

#include <random>

#include "flopkit/fourfold/fourfold.hpp"

using namespace flopkit;

namespace {

constexpr int kBits = 256;

const CubicFourfold& fourfold1() {
  static const CubicFourfold x = extend_to_fourfold(make_instance(1), 1);
  return x;
}

Rational rnd(std::mt19937_64& rng, int bound) { return Rational(static_cast<int>(rng() % (2 * bound + 1)) - bound); }

// Oracle: direct evaluation of X at several points of the line.
Real max_on_line(const MPoly& f, const NumLine& l) {
  Real worst = 0;
  for (long s : {1L, 2L, -3L, 5L}) {
    CVector p(6);
    for (int i = 0; i < 6; ++i) p[i] = l.a[i] + ComplexMP(s) * l.b[i];
    worst = std::max(worst, Real(abs(f.evaluate<ComplexMP>(std::span<const ComplexMP>(p)))));
  }
  return worst;
}

CVector hyperplane_point(const NumLine& l) {
  CVector y(6);
  for (int i = 0; i < 6; ++i) y[i] = l.b[5] * l.a[i] - l.a[5] * l.b[i];
  return normalized_max(y);
}

const Real& tol() {
  static const Real t("1e-30");
  return t;
}

// Coefficients of Q as unknowns: Q(y + t d) = e0 + e1 t + e2 t^2 is linear in them.
std::vector<Monomial> quadric_monomials() {
  std::vector<Monomial> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      Monomial m(6, 0);
      ++m[i];
      ++m[j];
      out.push_back(m);
    }
  return out;
}

// A quadric making cubicY + x5 Q vanish on the line through (y, 0) with direction d.
MPoly planting_quadric(const DeterminantalInstance& inst, const RatVector& y6, const RatVector& d, std::mt19937_64& rng) {
  const auto monos = quadric_monomials();
  std::vector<MPoly> images;
  for (int i = 0; i < 6; ++i) {
    MPoly l(1);
    l.add_term({0}, y6[i]);
    l.add_term({1}, d[i]);
    images.push_back(l);
  }
  RatMatrix a(3, static_cast<int>(monos.size()));
  for (std::size_t k = 0; k < monos.size(); ++k) {
    MPoly q(6);
    q.add_term(monos[k], Rational(1));
    const MPoly r = compose(q, images);
    for (int e = 0; e < 3; ++e) a(e, static_cast<int>(k)) = r.coefficient({e});
  }
  std::vector<MPoly> y_images(images.begin(), images.begin() + 5);
  const MPoly c = compose(inst.cubicY, y_images);  // c1 t + c2 t^2 + c3 t^3
  RatVector b(3);
  for (int e = 0; e < 3; ++e) b[e] = -c.coefficient({e + 1}) / d[5];
  for (;;) {
    RatVector q0(monos.size());
    for (auto& v : q0) v = rnd(rng, 4);
    const RatVector gap = sub(b, a * q0);
    const RatVector z = *solve(a * a.transpose(), gap);
    const RatVector q = add(q0, a.transpose() * z);
    MPoly out(6);
    for (std::size_t k = 0; k < monos.size(); ++k) out.add_term(monos[k], q[k]);
    bool nodes_ok = true;
    for (const auto& n : inst.nodes) nodes_ok = nodes_ok && sgn(out(embed(n))) != 0;
    if (nodes_ok) return out;
  }
}

}  // namespace

TEST_CASE("extension to a cubic fourfold") {
  const auto& x = fourfold1();
  std::vector<MPoly> slice;
  for (int i = 0; i < 5; ++i) slice.push_back(MPoly::variable(5, i));
  slice.push_back(MPoly(5));
  CHECK(compose(x.cubic, slice) == x.instance.cubicY);
  CHECK(x.spot_checks == 200);
  CHECK(x.attempts >= 1);
  const auto grad = gradient(x.cubic);
  for (const auto& n : x.instance.nodes) {
    const RatVector p = embed(n);
    for (int i = 0; i < 5; ++i) CHECK(sgn(grad[i](p)) == 0);
    CHECK(grad[5](p) == x.quadric(p));
    CHECK(sgn(grad[5](p)) != 0);
  }

  SUBCASE("a quadric through a node is resampled") {
    FourfoldOptions opts;
    opts.spot_checks = 10;
    const RatVector node = embed(x.instance.nodes[0]);
    opts.sampler = [node](std::mt19937_64& rng, int attempt) {
      MPoly q = random_quadric(rng, 6, 5);
      if (attempt == 0) {
        // subtract x0 * (linear form) to force Q(node) = 0
        const Rational v = q(node);
        RatVector l(6, Rational(0));
        int k = 0;
        while (sgn(node[k]) == 0) ++k;
        l[k] = v / (node[k] * node[k]);
        q = q - MPoly::variable(6, k) * linear_form(l);
        REQUIRE(sgn(q(node)) == 0);
      }
      return q;
    };
    const auto y = extend_to_fourfold(x.instance, 3, opts);
    CHECK(y.attempts >= 2);
    CHECK(sgn(y.quadric(node)) != 0);
  }
}

TEST_CASE("lines on the fourfold") {
  const auto& x = fourfold1();
  PrecisionScope scope(kBits);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    FourfoldLine m = sample_line(x, seed, kBits);
    CHECK(m.residual < Real("1e-40"));
    CHECK(max_on_line(x.cubic, m.line) < Real("1e-60"));
    CHECK(abs(normalized_max(m.line.b)[5]) > Real("1e-10"));
  }
  const FourfoldLine again = sample_line(x, 2, kBits);
  CHECK(line_distance(again.line, sample_line(x, 2, kBits).line) == 0);

  SUBCASE("planted rational line") {
    std::mt19937_64 rng(9);
    const RatVector y = random_y_point(x.instance, rng);
    RatVector d(6);
    for (auto& c : d) c = rnd(rng, 4);
    d[5] = 1;
    const MPoly q = planting_quadric(x.instance, embed(y), d, rng);
    FourfoldOptions opts;
    opts.spot_checks = 20;
    opts.sampler = [q](std::mt19937_64&, int) { return q; };
    const CubicFourfold planted = extend_to_fourfold(x.instance, 1, opts);
    const ProjLine known(embed(y), d);
    REQUIRE(restrict_to_subspace(planted.cubic, {known.a(), known.b()}).is_zero());
    // directions are taken modulo y, so the cut must contain both y and d
    const auto perp = nullspace(RatMatrix::from_rows({embed(y), d}));
    RatVector h(6, Rational(0));
    for (const auto& p : perp) h = add(h, scale(p, rnd(rng, 5)));
    REQUIRE(sgn(dot(h, d)) == 0);
    const auto cands = candidate_lines(planted, y, h, kBits);
    CHECK(cands.size() == 6);
    int hits = 0;
    for (const auto& c : cands) hits += c.exact && c.exact->same_line(known);
    CHECK(hits == 1);

    // the exact path of iota stays rational and is an involution
    FourfoldLine m{to_numeric(known), known, kBits, Real(0)};
    IotaResult r = iota_detail(planted, m);
    CHECK(r.exact);
    REQUIRE(r.image.exact);
    CHECK(restrict_to_subspace(planted.cubic, {r.image.exact->a(), r.image.exact->b()}).is_zero());
    const FourfoldLine back = iota(planted, r.image);
    REQUIRE(back.exact);
    CHECK(back.exact->same_line(known));
  }
}

TEST_CASE("iota is an involution") {
  const auto& x = fourfold1();
  PrecisionScope scope(kBits);
  for (std::uint64_t seed = 11; seed < 21; ++seed) {
    const FourfoldLine m = sample_line(x, seed, kBits);
    const IotaResult r = iota_detail(x, m);
    CHECK(r.remainder < tol());
    CHECK(r.image.residual < tol());
    CHECK(max_on_line(x.cubic, r.image.line) < Real("1e-50"));
    CHECK(line_distance(m.line, r.image.line) > Real("1e-10"));
    // the image lies in the plane and meets the P-dual line
    const auto& pl = r.plane;
    CHECK(numeric_rank({pl[0], pl[1], pl[2], r.image.line.a, r.image.line.b}, tol()) == 3);
    CHECK(numeric_rank({r.lvee.a, r.lvee.b, hyperplane_point(r.image.line)}, tol()) == 2);
    // the P-dual line lies on Y and passes through m n Y
    CHECK(containment_residual(x.cubic, r.lvee) < tol());
    CHECK(numeric_rank({r.lvee.a, r.lvee.b, hyperplane_point(m.line)}, tol()) == 2);
    const FourfoldLine back = iota(x, r.image);
    CHECK(line_distance(m.line, back.line) < tol());
  }
}

TEST_CASE("iota rejects lines where it is undefined") {
  const auto& x = fourfold1();
  PrecisionScope scope(kBits);
  // a line of Y lies in the hyperplane section
  const ProjLine in_y = special_line(x.instance, SpecialKind::fromV, {1, 2, 3});
  FourfoldLine m{to_numeric(ProjLine(embed(in_y.a()), embed(in_y.b()))), std::nullopt, kBits, Real(0)};
  CHECK_THROWS_AS(iota(x, m), PreconditionError);
  m.exact = ProjLine(embed(in_y.a()), embed(in_y.b()));
  CHECK_THROWS_AS(iota(x, m), PreconditionError);
  // the P-dual line itself
  const FourfoldLine sampled = sample_line(x, 5, kBits);
  const IotaResult r = iota_detail(x, sampled);
  CHECK_THROWS_AS(iota(x, FourfoldLine{r.lvee, std::nullopt, kBits, Real(0)}), PreconditionError);
  // X is tangent to x5 = 0 at a node of Y, so every line of X through a node lies in Y
  std::mt19937_64 rng(4);
  RatVector h(6);
  for (auto& c : h) c = rnd(rng, 5);
  const auto through_node = lines_through_point(x.cubic, embed(x.instance.nodes[0]), {h}, kBits);
  for (const auto& l : through_node.lines) {
    CHECK(abs(normalized_max(l.line.b)[5]) < tol());
    FourfoldLine n{l.line, l.exact, kBits, containment_residual(x.cubic, l.line)};
    CHECK_THROWS_AS(iota(x, n), PreconditionError);
  }
  // a line that is not on X
  FourfoldLine off{to_numeric(ProjLine({1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 2})), std::nullopt, kBits, Real(0)};
  CHECK_THROWS_AS(iota(x, off), PreconditionError);
}

TEST_CASE("scroll incidence is preserved by iota") {
  const auto& x = fourfold1();
  PrecisionScope scope(kBits);
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 30; seed < 40; ++seed) {
    const FourfoldLine m = sample_line(x, seed, kBits);
    RatVector v = {rnd(rng, 5), rnd(rng, 5), rnd(rng, 5)};
    if (is_zero_vector(v)) v = {1, 0, 0};
    const IncidenceReport r = scroll_incidence_invariance(x, m, v);
    CHECK(r.invariant());
    CHECK_FALSE(r.m_meets);
    CHECK_FALSE(r.image_meets);
  }

  // m through a point of T_v: that point lies on a ruling, the P-dual line of a functional killing v
  const RatVector v = {2, -1, 1};
  const RatVector vd = {1, 2, 0};
  REQUIRE(sgn(dot(vd, v)) == 0);
  const ProjLine ruling = special_line(x.instance, SpecialKind::fromVdual, vd);
  int planted = 0;
  for (long s = 1; planted < 2 && s < 20; ++s) {
    const RatVector y = ruling.point(Rational(s), Rational(3));
    bool smooth = false;
    for (const auto& g : gradient(x.instance.cubicY)) smooth = smooth || sgn(g(y)) != 0;
    if (!smooth) continue;
    const FourfoldLine m = sample_line(x, 100 + s, kBits, y);
    const IncidenceReport r = scroll_incidence_invariance(x, m, v);
    CHECK(r.m_meets);
    CHECK(r.image_meets);
    CHECK(r.invariant());
    ++planted;
  }
  CHECK(planted == 2);
}
