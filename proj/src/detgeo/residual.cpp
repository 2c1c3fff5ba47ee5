#include <random>

#include "flopkit/detgeo/instance.hpp"
#include "flopkit/poly/resultant.hpp"
#include "flopkit/poly/upoly.hpp"

namespace flopkit {

namespace {

// Maximal minors of the 4x3 matrix with rows (A_j v)^T, as cubics in v.
std::vector<MPoly> rank_one_minors(const EndoSubspace& lambda) {
  std::vector<std::vector<MPoly>> rows;
  for (const auto& a : lambda.basis()) {
    std::vector<MPoly> row;
    for (int i = 0; i < 3; ++i) row.push_back(linear_form(a.row(i)));
    rows.push_back(std::move(row));
  }
  std::vector<MPoly> minors;
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<std::vector<MPoly>> m;
    for (int r = 0; r < 4; ++r)
      if (r != skip) m.push_back(rows[r]);
    minors.push_back(poly_det(m));
  }
  return minors;
}

MPoly combine(const std::vector<MPoly>& fs, const std::vector<int>& c) {
  MPoly out(fs.front().nvars());
  for (std::size_t i = 0; i < fs.size(); ++i) out += Rational(c[i]) * fs[i];
  return out;
}

int small(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % (2 * bound + 1)) - bound; }

// Eliminant of two random combinations in x, with the known roots divided out; nullopt when the
// division is not exact.
std::optional<UPoly> deflated_eliminant(const std::vector<MPoly>& minors, const std::vector<Rational>& known,
                                        std::mt19937_64& rng, bool& vanished) {
  std::vector<int> a(4), b(4);
  for (int& c : a) c = small(rng, 5);
  for (int& c : b) c = small(rng, 5);
  UPoly r = resultant_bivariate(combine(minors, a), combine(minors, b), 1);
  if (r.is_zero()) {
    vanished = true;
    return std::nullopt;
  }
  for (const auto& x : known) {
    auto [q, rem] = divmod(r, UPoly({-x, Rational(1)}));
    if (!rem.is_zero()) return std::nullopt;
    r = q;
  }
  return r;
}

}  // namespace

RatMatrix residual_rank1_point(const std::vector<RatMatrix>& five) {
  if (five.size() != 5) throw PreconditionError("residual_rank1_point: expects five matrices");
  for (const auto& p : five)
    if (rank(p) != 1) throw PreconditionError("residual_rank1_point: inputs must have rank 1");
  const EndoSubspace w(five);  // throws on dependence
  const EndoSubspace lambda = trace_perp(w);
  const std::vector<MPoly> minors = rank_one_minors(lambda);

  std::vector<RatVector> images;
  for (const auto& p : five) images.push_back(image(p).at(0));

  std::mt19937_64 rng(0x5eed);
  bool vanished = false;
  for (int attempt = 0; attempt < 12; ++attempt) {
    // v = T (x, y, 1) with a random integral T
    RatMatrix t(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t(i, j) = small(rng, 4);
    auto tinv = inverse(t);
    if (!tinv) continue;
    std::vector<Rational> known;
    bool usable = true;
    for (const auto& v : images) {
      RatVector u = *tinv * v;
      if (sgn(u[2]) == 0) usable = false;
      else known.push_back(u[0] / u[2]);
    }
    for (std::size_t i = 0; usable && i < known.size(); ++i)
      for (std::size_t j = i + 1; j < known.size(); ++j)
        if (known[i] == known[j]) usable = false;
    if (!usable) continue;

    std::vector<MPoly> chart;
    {
      std::vector<MPoly> subst;
      for (int i = 0; i < 3; ++i) {
        MPoly l(2);
        l.add_term({1, 0}, t(i, 0));
        l.add_term({0, 1}, t(i, 1));
        l.add_term({0, 0}, t(i, 2));
        subst.push_back(l);
      }
      for (const auto& m : minors) chart.push_back(compose(m, subst));
    }

    auto r1 = deflated_eliminant(chart, known, rng, vanished);
    if (!r1) continue;
    UPoly g = *r1;
    for (int extra = 0; extra < 3 && g.degree() > 1; ++extra) {
      auto r2 = deflated_eliminant(chart, known, rng, vanished);
      if (r2) g = gcd(g, *r2);
    }
    if (g.degree() != 1) continue;
    const Rational x6 = -g.coefficient(0) / g.coefficient(1);

    UPoly h;
    for (const auto& m : chart) {
      MPoly fixed = compose(m, std::vector<MPoly>{MPoly::constant(2, x6), MPoly::variable(2, 1)});
      UPoly u = fixed.is_zero() ? UPoly() : to_upoly(fixed, 1);
      h = gcd(h, u);
    }
    if (h.degree() != 1) continue;
    const Rational y6 = -h.coefficient(0) / h.coefficient(1);

    RatVector v6 = t * RatVector{x6, y6, Rational(1)};
    std::vector<RatVector> rows;
    for (const auto& a : lambda.basis()) rows.push_back(a * v6);
    // w^T A_j v = 0 for all j
    auto ker = nullspace(RatMatrix::from_rows(rows));
    if (ker.size() != 1) continue;
    RatMatrix p6 = outer(v6, ker.front());
    bool fresh = true;
    for (const auto& p : five)
      if (proportional(vec(p), vec(p6))) fresh = false;
    if (!fresh || !w.contains(p6)) continue;
    return p6;
  }
  if (vanished) throw DegenerateError("residual_rank1_point: the rank-1 locus of the span is not finite");
  throw DegenerateError("residual_rank1_point: no isolated rational residual point");
}

}  // namespace flopkit
