#include <doctest.h>

#include <random>

#include "flopkit/poly/mpoly.hpp"
#include "flopkit/schubert/schubert.hpp"

using namespace flopkit;

namespace {

// Oracle: H*(G(2,n)) is the ring of symmetric polynomials in two variables modulo the Schur
// polynomials s_(a,b) with a > n-2. Products are computed there and decomposed greedily.
MPoly schur(int a, int b) {
  MPoly h(2);
  for (int i = 0; i <= a - b; ++i) h.add_term({i + b, a - i}, Rational(1));
  return h;
}

SchubertCycle decompose(MPoly f, int n) {
  SchubertCycle out(n);
  while (!f.is_zero()) {
    // Largest x0-exponent among the terms gives the leading Schur index.
    Monomial lead;
    Rational c;
    for (const auto& [m, coef] : f.terms())
      if (lead.empty() || m[0] > lead[0] || (m[0] == lead[0] && m[1] < lead[1])) {
        lead = m;
        c = coef;
      }
    REQUIRE(c.get_den() == 1);
    out.add({lead[0], lead[1]}, c.get_num());
    f -= schur(lead[0], lead[1]) * c;
  }
  return out;
}

SchubertCycle oracle_product(const SchubertCycle& x, const SchubertCycle& y) {
  MPoly fx(2), fy(2);
  for (const auto& [p, c] : x.terms()) fx += schur(p.first, p.second) * Rational(c);
  for (const auto& [p, c] : y.terms()) fy += schur(p.first, p.second) * Rational(c);
  return decompose(fx * fy, x.ambient());
}

SchubertCycle random_cycle(std::mt19937_64& rng, int n) {
  SchubertCycle c(n);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int a = 0; a <= n - 2; ++a)
    for (int b = 0; b <= a; ++b)
      if (rng() % 3 == 0) c.add({a, b}, coef(rng));
  return c;
}

}  // namespace

TEST_CASE("Pieri and box truncation") {
  const int n = 5;
  auto s1 = SchubertCycle::sigma(n, 1), s11 = SchubertCycle::sigma(n, 1, 1), s2 = SchubertCycle::sigma(n, 2);
  CHECK(s1 * s1 == SchubertCycle::sigma(n, 2) + s11);
  CHECK(s11 * SchubertCycle::sigma(n, 2, 2) == SchubertCycle::sigma(n, 3, 3));
  CHECK((s2 * SchubertCycle::sigma(n, 2, 2)).is_zero());
  CHECK_THROWS_AS(s1 * SchubertCycle::sigma(4, 1), PreconditionError);
}

TEST_CASE("multiplication matches the Schur polynomial oracle") {
  std::mt19937_64 rng(41);
  for (int n = 3; n <= 6; ++n)
    for (int a = 0; a <= n - 2; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= n - 2; ++c)
          for (int d = 0; d <= c; ++d) {
            auto x = SchubertCycle::sigma(n, a, b), y = SchubertCycle::sigma(n, c, d);
            auto p = x * y;
            CHECK(p == oracle_product(x, y));
            if (!p.is_zero()) CHECK(p.degree() == a + b + c + d);
          }
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + trial % 3;
    auto x = random_cycle(rng, n), y = random_cycle(rng, n), z = random_cycle(rng, n);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("degree of the Fano scheme") {
  auto c4 = chern_sym3(4);
  CHECK(c4.degree() == 4);
  CHECK(integrate(c4) == 27);
  // Hand expansion on G(2,4): 9(2(s2 + s11) s11 + s11^2) = 9(2 + 1) s22.
  auto s11 = SchubertCycle::sigma(4, 1, 1), s2 = SchubertCycle::sigma(4, 2);
  CHECK(c4 == Integer(9) * (Integer(2) * ((s2 + s11) * s11) + s11 * s11));
  auto s1 = SchubertCycle::sigma(5, 1);
  Integer deg = integrate(chern_sym3(5) * s1 * s1);
  CHECK(deg == 45);
  CHECK(deg == 9 + 27 + 9);
  CHECK(integrate(SchubertCycle::sigma(5, 3, 3)) == 1);
  CHECK_THROWS_AS(integrate(s1), PreconditionError);
}

TEST_CASE("splitting-principle expansion of c4(Sym^3)") {
  // Roots of Sym^3 of a rank-2 bundle with roots a, b: 3a, 2a+b, a+2b, 3b.
  MPoly a = MPoly::variable(2, 0), b = MPoly::variable(2, 1);
  MPoly c4 = (a * Rational(3)) * (a * Rational(2) + b) * (a + b * Rational(2)) * (b * Rational(3));
  MPoly c1 = a + b, c2 = a * b;
  CHECK(c4 == c2 * Rational(9) * (c1 * c1 * Rational(2) + c2));
  // Symmetric in the two roots.
  CHECK(compose(c4, std::vector<MPoly>{b, a}) == c4);
  CHECK(c4.degree() == 4);
}
