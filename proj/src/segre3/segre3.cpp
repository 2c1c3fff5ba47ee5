#include "flopkit/segre3/segre3.hpp"

#include <algorithm>

namespace flopkit {

namespace {

Rational bracket(const RatVector& a, const RatVector& b) { return a[0] * b[1] - a[1] * b[0]; }

bool same_point(const RatVector& a, const RatVector& b) { return sgn(bracket(a, b)) == 0; }

MPoly x(int i) { return MPoly::variable(5, i); }

}  // namespace

SixTupleOnLine::SixTupleOnLine(std::array<RatVector, 6> pts) : points(std::move(pts)) {
  for (const auto& p : points)
    if (p.size() != 2 || is_zero_vector(p)) throw PreconditionError("SixTupleOnLine: points must be nonzero pairs");
}

std::vector<int> SixTupleOnLine::multiplicity_partition() const {
  std::vector<int> cls(6, -1), sizes;
  for (int i = 0; i < 6; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(sizes.size());
    sizes.push_back(1);
    for (int j = i + 1; j < 6; ++j)
      if (cls[j] < 0 && same_point(points[i], points[j])) {
        cls[j] = cls[i];
        ++sizes.back();
      }
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

int SixTupleOnLine::max_multiplicity() const { return multiplicity_partition().front(); }

std::string to_string(SegreVariant v) { return v == SegreVariant::printed ? "printed" : "cyclic"; }

SegreVariant parse_segre_variant(const std::string& s) {
  if (s == "printed") return SegreVariant::printed;
  if (s == "cyclic") return SegreVariant::cyclic;
  throw PreconditionError("unknown Segre variant '" + s + "'");
}

SegreForms segre_forms(SegreVariant v) {
  SegreForms out{v, {}, MPoly(5)};
  // y_j = (x_{j+3} - x_{j+4}) x_j (x_{j+1} - x_{j+2}), indices mod 5
  for (int j = 0; j < 5; ++j)
    out.y[j] = (x((j + 3) % 5) - x((j + 4) % 5)) * x(j) * (x((j + 1) % 5) - x((j + 2) % 5));
  // as printed, y_3 ends in (x_4 - x_1)
  if (v == SegreVariant::printed) out.y[3] = (x(1) - x(2)) * x(3) * (x(4) - x(1));
  for (int j = 0; j < 5; ++j) out.relation += out.y[j] * out.y[(j + 1) % 5] * out.y[(j + 2) % 5];
  return out;
}

std::vector<RatVector> standard_points() {
  std::vector<RatVector> pts;
  for (int i = 0; i < 5; ++i) {
    RatVector e(5, Rational(0));
    e[i] = 1;
    pts.push_back(e);
  }
  pts.push_back(RatVector(5, Rational(1)));
  return pts;
}

bool double_at_points(const MPoly& f, const std::vector<RatVector>& points) {
  const auto grad = gradient(f);
  for (const auto& p : points) {
    if (sgn(f(p)) != 0) return false;
    for (const auto& g : grad)
      if (sgn(g(p)) != 0) return false;
  }
  return true;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::strictly_semistable: return "strictly_semistable";
    case Stability::unstable: return "unstable";
  }
  return "?";
}

Stability semistable_6tuple(const SixTupleOnLine& t) {
  const int mu = t.max_multiplicity();
  if (mu < 3) return Stability::stable;
  return mu == 3 ? Stability::strictly_semistable : Stability::unstable;
}

SixTupleOnLine apply_mobius(const RatMatrix& m, const SixTupleOnLine& t) {
  if (sgn(determinant(m)) == 0) throw PreconditionError("apply_mobius: singular matrix");
  std::array<RatVector, 6> pts;
  for (int i = 0; i < 6; ++i) pts[i] = m * t.points[i];
  return SixTupleOnLine(pts);
}

bool tuple_equiv(const SixTupleOnLine& t1, const SixTupleOnLine& t2) {
  int a = -1, b = -1, c = -1;
  for (int i = 0; i < 6 && c < 0; ++i)
    for (int j = i + 1; j < 6 && c < 0; ++j)
      for (int k = j + 1; k < 6 && c < 0; ++k)
        if (!same_point(t1.points[i], t1.points[j]) && !same_point(t1.points[i], t1.points[k]) &&
            !same_point(t1.points[j], t1.points[k])) {
          a = i;
          b = j;
          c = k;
        }
  if (c < 0) throw PreconditionError("tuple_equiv: fewer than three distinct points");
  const auto& u = t2.points;
  if (same_point(u[a], u[b]) || same_point(u[a], u[c]) || same_point(u[b], u[c])) return false;
  // m(p) = ([p,a][b,c] : [p,c][b,a]) sends a, b, c to 0, 1, oo
  auto normalize = [&](const SixTupleOnLine& t, int i) {
    const auto& p = t.points;
    return RatVector{bracket(p[i], p[a]) * bracket(p[b], p[c]), bracket(p[i], p[c]) * bracket(p[b], p[a])};
  };
  for (int i = 0; i < 6; ++i)
    if (!same_point(normalize(t1, i), normalize(t2, i))) return false;
  return true;
}

}  // namespace flopkit
