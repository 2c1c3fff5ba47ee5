#include <doctest.h>

#include <random>

#include "flopkit/lattice/chamber.hpp"
#include "flopkit/lattice/lattice.hpp"
#include "flopkit/lattice/represent.hpp"
#include "flopkit/lattice/svg.hpp"
#include "flopkit/poly/linalg.hpp"

using namespace flopkit;

namespace {

const LatticeClass g(1, 0), tau(0, 1);

// Independent oracle: integer matrix power by repeated multiplication.
IntMatrix2 mat_pow(const IntMatrix2& m, int e) {
  IntMatrix2 r{{{1, 0}, {0, 1}}};
  for (int i = 0; i < e; ++i) {
    IntMatrix2 n;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) n[a][b] = r[a][0] * m[0][b] + r[a][1] * m[1][b];
    r = n;
  }
  return r;
}

RatVector solve2(const LatticeClass& v, const LatticeClass& r0, const LatticeClass& r1) {
  RatMatrix m = RatMatrix::from_columns({{Rational(r0.x), Rational(r0.y)}, {Rational(r1.x), Rational(r1.y)}});
  return *solve(m, {Rational(v.x), Rational(v.y)});
}

}  // namespace

TEST_CASE("eval_form and divisibility") {
  CHECK(eval_form(g, g) == 6);
  LatticeClass rho1(3, -2), alpha1(7, -3);
  CHECK(eval_form(rho1, g) == 6);
  CHECK(eval_form(alpha1, rho1) == 0);
  CHECK(eval_form(rho1, tau) == 14);
  CHECK(divisibility(rho1) == 2);
  CHECK(divisibility(g) == 6);
  CHECK(divisibility(LatticeClass(0, 0)) == 0);
  CHECK_THROWS_AS(eval_form(g, LatticeClass(1, 0, GramContext::K12())), PreconditionError);
}

TEST_CASE("isometries") {
  CHECK(is_isometry(named_isometry("R1").m, GramContext::J12()));
  CHECK(is_isometry(named_isometry("id").m, GramContext::J12()));
  CHECK_FALSE(is_isometry({{{2, 0}, {0, 1}}}, GramContext::J12()));
  CHECK(apply_isometry(named_isometry("R1"), tau) == LatticeClass(2, -1));
  CHECK(apply_isometry(named_isometry("R3"), LatticeClass(7, -3)) == LatticeClass(17, -9));
  CHECK(apply_isometry(named_isometry("R1R2"), LatticeClass(3, -2)) == LatticeClass(29, -16));
  CHECK(apply_isometry(named_isometry("R3"), g) == LatticeClass(11, -6));
  CHECK(apply_isometry(named_isometry("R3"), tau) == LatticeClass(20, -11));
  CHECK(named_isometry("R1R2").m == IntMatrix2{{{11, 2}, {-6, -1}}});

  for (const char* n : {"R1", "R2", "R3"}) {
    Isometry r = named_isometry(n);
    CHECK((r * r).is_identity());
  }
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Isometry w = named_isometry("id");
    for (int len = 0; len < 8; ++len) w = w * named_isometry(std::vector<const char*>{"R1", "R2", "R3"}[rng() % 3]);
    CHECK(is_isometry(w.m, GramContext::J12()));
  }
  Isometry m = named_isometry("R1R2"), p = named_isometry("id");
  CHECK(m.m[0][0] + m.m[1][1] == 10);
  for (int e = 1; e <= 50; ++e) {
    p = p * m;
    CHECK_FALSE(p.is_identity());
  }
}

TEST_CASE("orbit tables") {
  auto rho = orbit_classes(OrbitKind::rho, 3);
  CHECK(rho[0] == LatticeClass(3, -2));
  CHECK(rho[1] == LatticeClass(7, -4));
  CHECK(rho[2] == LatticeClass(29, -16));
  std::vector<long> gp;
  for (const auto& r : rho) gp.push_back(eval_form(r, g).get_si());
  CHECK(gp == std::vector<long>{6, 18, 78});

  auto alpha = orbit_classes(OrbitKind::alpha, 2);
  CHECK(alpha[1] == LatticeClass(17, -9));
  CHECK(eval_form(alpha[0], g) == 24);
  CHECK(eval_form(alpha[1], g) == 48);

  auto dual = orbit_classes(OrbitKind::rho_dual, 3);
  CHECK(dual[2] == LatticeClass(-3, 16));
  CHECK(eval_form(dual[2], g) == 78);
  auto adual = orbit_classes(OrbitKind::alpha_dual, 2);
  CHECK(adual[1] == LatticeClass(-1, 9));

  // rho_5 from the matrix square applied to rho_3.
  auto rho5 = orbit_classes(OrbitKind::rho, 5)[4];
  IntMatrix2 m2 = mat_pow({{{11, 2}, {-6, -1}}}, 2);
  CHECK(rho5 == LatticeClass(m2[0][0] * 3 + m2[0][1] * -2, m2[1][0] * 3 + m2[1][1] * -2));
  CHECK(rho5 == LatticeClass(287, -158));
  CHECK(eval_form(rho5, g) == 774);

  auto rho50 = orbit_classes(OrbitKind::rho, 50);
  auto dual50 = orbit_classes(OrbitKind::rho_dual, 50);
  auto alpha50 = orbit_classes(OrbitKind::alpha, 50);
  auto adual50 = orbit_classes(OrbitKind::alpha_dual, 50);
  for (int i = 0; i < 50; ++i) {
    CHECK(self_pairing(rho50[i]) == -10);
    CHECK(divisibility(rho50[i]) == 2);
    CHECK(self_pairing(dual50[i]) == -10);
    CHECK(divisibility(dual50[i]) == 2);
    CHECK(apply_isometry(named_isometry("R1"), rho50[i]) == dual50[i]);
    CHECK(eval_form(alpha50[i], rho50[i]) == 0);
    CHECK(eval_form(adual50[i], dual50[i]) == 0);
  }
}

TEST_CASE("positive cone") {
  CHECK(positive_cone_membership(g) == ConeRegion::interior_P);
  CHECK(positive_cone_membership(LatticeClass(3, -2)) == ConeRegion::outside);
  CHECK(positive_cone_membership(LatticeClass(-1, 0)) == ConeRegion::interior_negP);
  QuadExtScalar one(1, 0, 6), edge_y(-3, 1, 6);
  CHECK(positive_cone_membership(one, edge_y, GramContext::J12()) == ConeRegion::boundary_P);
  QuadExtScalar minus_one(-1, 0, 6), other_y(3, 1, 6);
  CHECK(positive_cone_membership(minus_one, other_y, GramContext::J12()) == ConeRegion::boundary_P);
  CHECK(positive_cone_membership(-one, -edge_y, GramContext::J12()) == ConeRegion::boundary_negP);
  // Nudging the isotropic ray towards g lands in the interior.
  CHECK(positive_cone_membership(one, edge_y - QuadExtScalar(Rational(1, 1000), 0, 6), GramContext::J12()) ==
        ConeRegion::outside);
  CHECK(positive_cone_membership(one, edge_y + QuadExtScalar(Rational(-1, 1000), 0, 6) + QuadExtScalar(Rational(2, 1000), 0, 6),
                                 GramContext::J12()) == ConeRegion::interior_P);
}

TEST_CASE("represents") {
  auto r10 = represents(-10);
  REQUIRE(r10.status == RepresentStatus::witness);
  CHECK(*r10.witness == LatticeClass(3, -2));
  CHECK(self_pairing(*r10.witness) == -10);
  CHECK(divisibility(*r10.witness) == 2);

  auto r2 = represents(-2);
  REQUIRE(r2.status == RepresentStatus::none);
  CHECK(r2.certificate->obstruction == "congruence");
  CHECK(r2.certificate->modulus == 3);

  auto r0 = represents(0);
  REQUIRE(r0.status == RepresentStatus::none);
  CHECK(r0.certificate->obstruction == "irrational-isotropic");

  auto r6 = represents(6);
  REQUIRE(r6.status == RepresentStatus::witness);
  CHECK(*r6.witness == g);
  CHECK(represents(7).certificate->obstruction == "parity");

  // Brute-force oracle over a box.
  for (long n : {-2L, 0L}) {
    bool found = false;
    for (long x = -1000; x <= 1000 && !found; ++x)
      for (long y = -1000; y <= 1000; ++y)
        if ((x || y) && 6 * x * x + 12 * x * y + 2 * y * y == n) {
          found = true;
          break;
        }
    CHECK_FALSE(found);
  }
  // Every returned witness is checked; every "none" is confirmed by a small brute force.
  for (long n = -60; n <= 60; n += 2) {
    auto r = represents(n, 200);
    if (r.status == RepresentStatus::witness) {
      CHECK(self_pairing(*r.witness) == n);
    } else if (r.status == RepresentStatus::none) {
      for (long x = -60; x <= 60; ++x)
        for (long y = -200; y <= 200; ++y)
          if (x || y) CHECK(6 * x * x + 12 * x * y + 2 * y * y != n);
    }
  }
}

TEST_CASE("chamber_locate") {
  auto lg = chamber_locate(g);
  CHECK(lg.k == 0);
  CHECK(lg.coord_first == Rational(1, 8));
  CHECK(lg.coord_second == Rational(1, 8));
  RatVector oracle = solve2(g, LatticeClass(1, 3), LatticeClass(7, -3));
  CHECK(oracle == RatVector{Rational(1, 8), Rational(1, 8)});

  auto l12 = chamber_locate(LatticeClass(12, -5));
  CHECK(l12.k == 0);
  RatVector o12 = solve2(LatticeClass(12, -5), LatticeClass(1, 3), LatticeClass(7, -3));
  CHECK(l12.coord_first == o12[0]);
  CHECK(l12.coord_second == o12[1]);
  CHECK(o12 == RatVector{Rational(1, 24), Rational(41, 24)});

  auto lt = chamber_locate(tau);
  CHECK(lt.k == -1);
  CHECK(lt.coord_first == Rational(1, 12));
  CHECK(lt.coord_second == Rational(1, 12));
  CHECK(chamber_ray(-1) == LatticeClass(-1, 9));

  auto wall = chamber_locate(LatticeClass(7, -3));
  REQUIRE(wall.wall_neighbor.has_value());
  CHECK(((wall.k == 0 && *wall.wall_neighbor == 1) || (wall.k == 1 && *wall.wall_neighbor == 0)));

  CHECK_THROWS_AS(chamber_locate(LatticeClass(3, -2)), PreconditionError);
  CHECK_THROWS_AS(chamber_locate(LatticeClass(2, 0)), PreconditionError);

  SUBCASE("translation by R1R2 and the returned word") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> d(-40, 40);
    int tested = 0;
    while (tested < 200) {
      LatticeClass v(d(rng), d(rng));
      if (!v.is_primitive() || positive_cone_membership(v) != ConeRegion::interior_P) continue;
      ++tested;
      auto a = chamber_locate(v);
      auto b = chamber_locate(apply_isometry(named_isometry("R1R2"), v));
      CHECK(b.k == a.k + 2);
      auto base = chamber_locate(apply_word(a.word, v));
      CHECK(base.k == a.base_chamber);
      CHECK(nef_test(v, a.k));
      if (!a.wall_neighbor) {
        CHECK_FALSE(nef_test(v, a.k + 1));
        CHECK_FALSE(nef_test(v, a.k - 1));
      }
    }
  }
}

TEST_CASE("chambers tile the positive cone") {
  // Every interior direction lands in some chamber in -K..K, and chamber k shares ray(k+1) with k+1.
  for (int k = -6; k <= 6; ++k) {
    CHECK(self_pairing(chamber_ray(k)) == 60);
    LatticeClass r0 = chamber_ray(k), r1 = chamber_ray(k + 1), r2 = chamber_ray(k + 2);
    CHECK_FALSE(r0 == r2);
    CHECK(r0.x * r1.y - r1.x * r0.y < 0);  // clockwise
  }
  for (long x = -30; x <= 30; ++x)
    for (long y = -30; y <= 30; ++y) {
      LatticeClass v(x, y);
      if (!v.is_primitive() || positive_cone_membership(v) != ConeRegion::interior_P) continue;
      auto loc = chamber_locate(v);
      CHECK(std::abs(loc.k) <= 12);
    }
}

TEST_CASE("nef test") {
  CHECK(nef_test(LatticeClass(7, -3), 0));
  CHECK_FALSE(nef_test(LatticeClass(17, -9), 0));
  CHECK(eval_form(LatticeClass(17, -9), LatticeClass(3, -2)) == -24);
  CHECK(nef_test(g, 0));
  // Walls are orthogonal to the rays, independently recomputed as primitive orthogonals.
  for (int k = -5; k <= 5; ++k) {
    auto walls = chamber_walls(k);
    for (const auto& w : walls) {
      CHECK(self_pairing(w) == -10);
      CHECK(divisibility(w) == 2);
    }
    CHECK(eval_form(walls[0], chamber_ray(k + 1)) == 0);
    CHECK(eval_form(walls[1], chamber_ray(k)) == 0);
    CHECK(eval_form(walls[0], chamber_ray(k)) > 0);
    CHECK(eval_form(walls[1], chamber_ray(k + 1)) > 0);
  }
}

TEST_CASE("transfer and discriminants") {
  auto j = transfer_K_to_J(GramContext::K12());
  CHECK(j.gram == GramContext::J12());
  CHECK(j.gram.det() == -24);
  auto t = transfer_K_to_J(GramContext({{{3, 4}, {4, 10}}}));
  CHECK(t.gram == GramContext({{{6, 8}, {8, 6}}}));
  CHECK(t.gram.det() == -28);
  CHECK(transfer_K_to_J(GramContext({{{3, 2}, {2, 4}}})).degenerate);
  CHECK_THROWS_AS(transfer_K_to_J(GramContext({{{2, 1}, {1, 3}}})), PreconditionError);

  // Oracle: split T = (a/3) h^2 + z with z orthogonal to h^2 and apply (g,g)=6, (g,alpha z)=0,
  // (alpha z1, alpha z2) = -<z1, z2>; tau = alpha(T) = (a/3) g + alpha(z) in rational arithmetic.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    long a = d(rng), tt = d(rng);
    if (3 * tt - a * a == 0) continue;
    GramContext k({{{3, a}, {a, tt}}});
    auto r = transfer_K_to_J(k);
    Rational s = Rational(a, 3);
    Rational zz = Rational(tt) - s * s * 3;
    Rational tau_tau = s * s * 6 - zz;
    Rational g_tau = s * 6;
    CHECK(Rational(r.gram(1, 1)) == tau_tau);
    CHECK(Rational(r.gram(0, 1)) == g_tau);
    CHECK(r.gram.det() == -2 * k.det());
  }
  CHECK(special_discriminant(12));
  CHECK_FALSE(special_discriminant(6));
  CHECK(special_discriminant(14));
  CHECK_FALSE(special_discriminant(7));
}

TEST_CASE("cone svg") {
  std::string s1 = emit_cone_svg(1), s2 = emit_cone_svg(2);
  auto count = [](const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
  };
  CHECK(count(s1, "<polygon") == 2);
  CHECK(count(s2, "<polygon") == 4);
  CHECK(s1.find("F1_dual") != std::string::npos);
  CHECK(s1.find(">F0<") != std::string::npos);
  CHECK(s2 == emit_cone_svg(2));
  // Rays sweep clockwise: angles strictly decrease.
  double prev = 10;
  for (int k = -4; k <= 4; ++k) {
    LatticeClass r = chamber_ray(k);
    double ang = std::atan2(r.y.get_d(), r.x.get_d());
    CHECK(ang < prev);
    prev = ang;
  }
  CHECK_THROWS(emit_cone_svg(0));
}
