#include "flopkit/lattice/lattice.hpp"

#include "flopkit/core/error.hpp"

namespace flopkit {

GramContext::GramContext(const IntMatrix2& entries) : m_(entries) {
  if (m_[0][1] != m_[1][0]) throw PreconditionError("Gram matrix must be symmetric");
  if (det() == 0) throw PreconditionError("Gram matrix must be nondegenerate");
}

GramContext GramContext::J12() { return GramContext({{{6, 6}, {6, 2}}}); }
GramContext GramContext::K12() { return GramContext({{{3, 3}, {3, 7}}}); }

bool LatticeClass::is_primitive() const { return gcd(x, y) == 1; }

std::string LatticeClass::str() const {
  return "(" + to_string(x) + ", " + to_string(y) + ")";
}

Integer eval_form(const LatticeClass& v, const LatticeClass& w) {
  if (!(v.ctx == w.ctx)) throw PreconditionError("eval_form: Gram context mismatch");
  const auto& g = v.ctx;
  return v.x * (g(0, 0) * w.x + g(0, 1) * w.y) + v.y * (g(1, 0) * w.x + g(1, 1) * w.y);
}

Integer divisibility(const LatticeClass& v) {
  LatticeClass e0(1, 0, v.ctx), e1(0, 1, v.ctx);
  return gcd(eval_form(v, e0), eval_form(v, e1));
}

Isometry operator*(const Isometry& a, const Isometry& b) {
  Isometry p{{}, a.name + b.name};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) p.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return p;
}

Isometry Isometry::inverse() const {
  Integer d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (d != 1 && d != -1) throw PreconditionError("isometry is not unimodular");
  Isometry inv{{}, name + "^-1"};
  inv.m[0][0] = m[1][1] * d;
  inv.m[1][1] = m[0][0] * d;
  inv.m[0][1] = -m[0][1] * d;
  inv.m[1][0] = -m[1][0] * d;
  return inv;
}

bool Isometry::is_identity() const { return m[0][0] == 1 && m[1][1] == 1 && m[0][1] == 0 && m[1][0] == 0; }

Isometry named_isometry(const std::string& name) {
  if (name == "id") return {{{{1, 0}, {0, 1}}}, ""};
  if (name == "R1") return {{{{1, 2}, {0, -1}}}, "R1"};
  if (name == "R2") return {{{{-1, 0}, {6, 1}}}, "R2"};
  if (name == "R3") return {{{{11, 20}, {-6, -11}}}, "R3"};
  if (name == "R1R2") return named_isometry("R1") * named_isometry("R2");
  if (name == "R2R1") return named_isometry("R2") * named_isometry("R1");
  throw PreconditionError("unknown isometry: " + name);
}

bool is_isometry(const IntMatrix2& m, const GramContext& ctx) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Integer s = 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) s += m[a][i] * ctx(a, b) * m[b][j];
      if (s != ctx(i, j)) return false;
    }
  return true;
}

LatticeClass apply_isometry(const Isometry& iso, const LatticeClass& v) {
  if (!is_isometry(iso.m, v.ctx)) throw PreconditionError("apply_isometry: matrix is not an isometry");
  return {iso.m[0][0] * v.x + iso.m[0][1] * v.y, iso.m[1][0] * v.x + iso.m[1][1] * v.y, v.ctx};
}

OrbitKind parse_orbit_kind(const std::string& s) {
  if (s == "rho") return OrbitKind::rho;
  if (s == "rho_dual") return OrbitKind::rho_dual;
  if (s == "alpha") return OrbitKind::alpha;
  if (s == "alpha_dual") return OrbitKind::alpha_dual;
  throw PreconditionError("unknown orbit kind: " + s);
}

std::string to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::rho: return "rho";
    case OrbitKind::rho_dual: return "rho_dual";
    case OrbitKind::alpha: return "alpha";
    case OrbitKind::alpha_dual: return "alpha_dual";
  }
  return "";
}

std::vector<LatticeClass> orbit_classes(OrbitKind kind, int count) {
  if (count < 1) throw PreconditionError("orbit_classes: count must be positive");
  LatticeClass first(0, 0), second(0, 0);
  Isometry step = named_isometry("R1R2");
  switch (kind) {
    case OrbitKind::rho: first = {3, -2}; second = {7, -4}; break;
    case OrbitKind::rho_dual: first = {-1, 2}; second = {-1, 4}; step = named_isometry("R2R1"); break;
    case OrbitKind::alpha: first = {7, -3}; second = {17, -9}; break;
    case OrbitKind::alpha_dual: first = {1, 3}; second = {-1, 9}; step = named_isometry("R2R1"); break;
  }
  std::vector<LatticeClass> out{first, second};
  while (static_cast<int>(out.size()) < count) out.push_back(apply_isometry(step, out[out.size() - 2]));
  out.resize(count, first);
  return out;
}

std::string to_string(ConeRegion r) {
  switch (r) {
    case ConeRegion::interior_P: return "interior_P";
    case ConeRegion::boundary_P: return "boundary_P";
    case ConeRegion::interior_negP: return "interior_negP";
    case ConeRegion::boundary_negP: return "boundary_negP";
    case ConeRegion::outside: return "outside";
  }
  return "";
}

ConeRegion positive_cone_membership(const QuadExtScalar& x, const QuadExtScalar& y, const GramContext& ctx) {
  const long d = x.d();
  auto c = [d](const Integer& z) { return QuadExtScalar::rational(Rational(z), d); };
  QuadExtScalar q = c(ctx(0, 0)) * x * x + c(2 * ctx(0, 1)) * x * y + c(ctx(1, 1)) * y * y;
  QuadExtScalar with_g = c(ctx(0, 0)) * x + c(ctx(0, 1)) * y;
  const int sq = q.sign();
  if (sq < 0) return ConeRegion::outside;
  if (x.sign() == 0 && y.sign() == 0) return ConeRegion::boundary_P;
  // With Q >= 0 and v != 0, (v, g) cannot vanish when g is in the interior of P.
  const int sg = with_g.sign();
  if (sq > 0) return sg > 0 ? ConeRegion::interior_P : ConeRegion::interior_negP;
  return sg > 0 ? ConeRegion::boundary_P : ConeRegion::boundary_negP;
}

ConeRegion positive_cone_membership(const LatticeClass& v) {
  return positive_cone_membership(QuadExtScalar::rational(Rational(v.x), 6),
                                  QuadExtScalar::rational(Rational(v.y), 6), v.ctx);
}

namespace {

LatticeClass power_apply(int j, LatticeClass v) {
  const Isometry step = named_isometry(j >= 0 ? "R1R2" : "R2R1");
  for (int i = 0; i < std::abs(j); ++i) v = apply_isometry(step, v);
  return v;
}

int floor_div2(int k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

}  // namespace

std::array<LatticeClass, 2> chamber_walls(int k) {
  const int j = floor_div2(k);
  if (k - 2 * j == 0) return {power_apply(j, LatticeClass(3, -2)), power_apply(j, LatticeClass(-1, 2))};
  return {power_apply(j, LatticeClass(7, -4)), power_apply(j, LatticeClass(-3, 2))};
}

bool nef_test(const LatticeClass& v, int k) {
  for (const auto& w : chamber_walls(k))
    if (eval_form(v, LatticeClass(w.x, w.y, v.ctx)) < 0) return false;
  return true;
}

TransferResult transfer_K_to_J(const GramContext& k) {
  if (k(0, 0) != 3) throw PreconditionError("transfer_K_to_J: expected <h^2, h^2> = 3");
  const Integer& a = k(0, 1);
  const Integer& t = k(1, 1);
  return {GramContext({{{6, 2 * a}, {2 * a, a * a - t}}}), a * a == t};
}

bool special_discriminant(const Integer& d) {
  Integer r = d % 6;
  if (r < 0) r += 6;
  return (r == 0 || r == 2) && d > 6;
}

}  // namespace flopkit
