#include <doctest.h>

#include <random>

#include "flopkit/segre3/segre3.hpp"

using namespace flopkit;

namespace {

Rational rnd(std::mt19937_64& rng, int bound) { return Rational(static_cast<int>(rng() % (2 * bound + 1)) - bound); }

SixTupleOnLine random_tuple(std::mt19937_64& rng) {
  std::array<RatVector, 6> pts;
  for (auto& p : pts) do p = {rnd(rng, 20), rnd(rng, 20)};
    while (is_zero_vector(p));
  return SixTupleOnLine(pts);
}

SixTupleOnLine affine(const std::array<int, 6>& xs) {
  std::array<RatVector, 6> pts;
  for (int i = 0; i < 6; ++i) pts[i] = {Rational(xs[i]), Rational(1)};
  return SixTupleOnLine(pts);
}

RatMatrix random_mobius(std::mt19937_64& rng) {
  RatMatrix m(2, 2);
  do
    for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = rnd(rng, 9) / Rational(1 + static_cast<int>(rng() % 4));
  while (sgn(determinant(m)) == 0);
  return m;
}

// Independent oracle: cross-ratio of four affine points.
Rational cross_ratio(const SixTupleOnLine& t, int a, int b, int c, int d) {
  auto z = [&](int i) -> Rational { return t.points[i][0] / t.points[i][1]; };
  return (z(a) - z(c)) * (z(b) - z(d)) / ((z(a) - z(d)) * (z(b) - z(c)));
}

RatVector open_s_point(const DeterminantalInstance& inst, std::mt19937_64& rng) {
  for (;;) {
    RatVector s = random_s_point(inst, rng);
    try {
      s_open_point(inst, s);
      return s;
    } catch (const PreconditionError&) {
    }
  }
}

}  // namespace

TEST_CASE("Segre cubics") {
  SegreForms cyclic = segre_forms(SegreVariant::cyclic);
  SegreForms printed = segre_forms(SegreVariant::printed);
  CHECK(cyclic.relation_holds());
  CHECK_FALSE(printed.relation_holds());
  CHECK(cyclic.relation_holds() != printed.relation_holds());
  for (const auto& y : cyclic.y) {
    CHECK(y.is_homogeneous());
    CHECK(y.degree() == 3);
    CHECK(double_at_points(y, standard_points()));
  }
  // The printed y3 differs only in its last factor, which no longer vanishes at p5 = e4.
  CHECK_FALSE(double_at_points(printed.y[3], standard_points()));
  for (int j : {0, 1, 2, 4}) CHECK(printed.y[j] == cyclic.y[j]);
  CHECK(parse_segre_variant("printed") == SegreVariant::printed);
  CHECK_THROWS_AS(parse_segre_variant("other"), PreconditionError);
}

TEST_CASE("double points") {
  const auto y0 = segre_forms(SegreVariant::cyclic).y[0];
  CHECK(double_at_points(y0, {RatVector(5, Rational(1))}));
  CHECK(double_at_points(y0, {{1, 0, 0, 0, 0}}));
  CHECK_FALSE(double_at_points(MPoly::variable(5, 0).pow(3), {{1, 0, 0, 0, 0}}));
  // vanishing alone is not enough
  CHECK_FALSE(double_at_points(MPoly::variable(5, 1) * MPoly::variable(5, 0).pow(2), {{1, 0, 0, 0, 0}}));
}

TEST_CASE("GIT stability of six points") {
  CHECK(semistable_6tuple(affine({0, 1, 2, 3, 4, 5})) == Stability::stable);
  CHECK(semistable_6tuple(affine({0, 0, 1, 1, 2, 2})) == Stability::stable);
  CHECK(semistable_6tuple(affine({7, 7, 7, 1, 2, 3})) == Stability::strictly_semistable);
  CHECK(semistable_6tuple(affine({7, 7, 7, 7, 2, 3})) == Stability::unstable);
  // (2, 4) and (1, 2) are the same point
  std::array<RatVector, 6> pts = {RatVector{1, 2}, {2, 4}, {-3, -6}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(SixTupleOnLine(pts).max_multiplicity() == 3);
  CHECK(SixTupleOnLine(pts).multiplicity_partition() == std::vector<int>{3, 1, 1, 1});
  std::array<RatVector, 6> bad = {RatVector{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}};
  CHECK_THROWS_AS(SixTupleOnLine{bad}, PreconditionError);
}

TEST_CASE("Mobius equivalence") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    SixTupleOnLine t = random_tuple(rng);
    if (semistable_6tuple(t) != Stability::stable || t.multiplicity_partition().size() < 4) continue;
    SixTupleOnLine u = apply_mobius(random_mobius(rng), t);
    SixTupleOnLine v = apply_mobius(random_mobius(rng), u);
    CHECK(tuple_equiv(t, t));
    CHECK(tuple_equiv(t, u));
    CHECK(tuple_equiv(u, t));
    CHECK(tuple_equiv(u, v));
    CHECK(tuple_equiv(t, v));
  }
  SixTupleOnLine t = affine({0, 1, 3, 7, -4, 10});
  SixTupleOnLine swapped = affine({0, 1, 3, -4, 7, 10});
  CHECK(cross_ratio(t, 0, 1, 2, 3) != cross_ratio(swapped, 0, 1, 2, 3));
  CHECK_FALSE(tuple_equiv(t, swapped));
  CHECK_THROWS_AS(tuple_equiv(affine({1, 1, 1, 2, 2, 2}), t), PreconditionError);
  // an equivalence preserves every cross-ratio
  std::mt19937_64 g(3);
  SixTupleOnLine image = apply_mobius(random_mobius(g), t);
  bool finite = true;
  for (const auto& p : image.points) finite = finite && sgn(p[1]) != 0;
  if (finite) CHECK(cross_ratio(image, 0, 2, 4, 5) == cross_ratio(t, 0, 2, 4, 5));
}

TEST_CASE("j-map agreement on S") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto inst = make_instance(seed);
    std::mt19937_64 rng(seed + 100);
    int accepted = 0;
    for (int draws = 0; accepted < 5 && draws < 50; ++draws) {
      RatVector s = random_s_point(inst, rng);
      try {
        s_open_point(inst, s);
      } catch (const PreconditionError&) {
        continue;  // on one of the 27 lines
      }
      ++accepted;
      SixTupleOnLine j = jmap(inst, s), jd = jmap_dual(inst, s);
      CHECK(semistable_6tuple(j) == Stability::stable);
      CHECK(jmap_agree(inst, s));
      // Oracle: the cross-ratios of the first four points agree after clearing denominators.
      auto cr = [](const SixTupleOnLine& t, int a, int b, int c, int d) -> Rational {
        auto br = [&](int i, int k2) -> Rational {
          return t.points[i][0] * t.points[k2][1] - t.points[i][1] * t.points[k2][0];
        };
        return br(a, c) * br(b, d) / (br(a, d) * br(b, c));
      };
      CHECK(cr(j, 0, 1, 2, 3) == cr(jd, 0, 1, 2, 3));
      CHECK(cr(j, 2, 3, 4, 5) == cr(jd, 2, 3, 4, 5));
    }
    CHECK(accepted == 5);
  }

  const auto inst = make_instance(1);
  std::mt19937_64 rng(77);
  RatVector s1 = open_s_point(inst, rng), s2 = open_s_point(inst, rng);
  CHECK_FALSE(tuple_equiv(jmap(inst, s1), jmap_dual(inst, s2)));

  // Points of S with beta(s) = q_1 form the exceptional line over q_1.
  std::vector<RatVector> rows(3, RatVector(4));
  for (int k = 0; k < 4; ++k) {
    RatVector col = inst.lambda.basis()[k] * inst.q_points[0];
    for (int i = 0; i < 3; ++i) rows[i][k] = col[i];
  }
  auto pencil = nullspace(RatMatrix::from_rows(rows));
  REQUIRE(pencil.size() == 2);
  RatVector on_e1 = pencil[0];
  for (Rational t = 1; rank(inst.sigma(on_e1)) != 2; ++t) on_e1 = add(pencil[0], scale(pencil[1], t));
  CHECK(sgn(inst.cubicS(on_e1)) == 0);
  CHECK_THROWS_AS(jmap_agree(inst, on_e1), PreconditionError);
  CHECK_THROWS_AS(s_open_point(inst, {1, 0, 0, 0}), PreconditionError);
}
