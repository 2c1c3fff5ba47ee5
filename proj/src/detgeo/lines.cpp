#include "flopkit/detgeo/lines.hpp"

namespace flopkit {

namespace {

RatVector primitive(const RatVector& v) {
  RatVector out;
  for (const auto& z : primitive_integer_vector(v)) out.emplace_back(z);
  return out;
}

}  // namespace

ProjLine::ProjLine(RatVector a, RatVector b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) throw PreconditionError("ProjLine: spanning points differ in arity");
  if (rank(RatMatrix::from_rows({a_, b_})) != 2) throw DegenerateError("ProjLine: spanning points are dependent");
  const int n = ambient();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) plucker_.push_back(a_[i] * b_[j] - a_[j] * b_[i]);
}

bool ProjLine::contains(const RatVector& p) const {
  if (static_cast<int>(p.size()) != ambient()) throw PreconditionError("ProjLine::contains: arity mismatch");
  return rank(RatMatrix::from_rows({a_, b_, p})) == 2;
}

bool ProjLine::same_line(const ProjLine& other) const { return contains(other.a_) && contains(other.b_); }

RatVector ProjLine::point(const Rational& s, const Rational& t) const { return add(scale(a_, s), scale(b_, t)); }

CVector NumLine::plucker() const {
  const int n = static_cast<int>(a.size());
  CVector p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.push_back(a[i] * b[j] - a[j] * b[i]);
  return normalized_max(p);
}

NumLine to_numeric(const ProjLine& l) { return {to_complex(l.a()), to_complex(l.b())}; }

std::vector<Rational> plucker_relations(const std::vector<Rational>& p) {
  int n = 2;
  while (n * (n - 1) / 2 < static_cast<int>(p.size())) ++n;
  if (n * (n - 1) / 2 != static_cast<int>(p.size())) throw PreconditionError("plucker_relations: bad length");
  auto at = [&](int i, int j) {
    int idx = 0;
    for (int r = 0; r < i; ++r) idx += n - 1 - r;
    return p[idx + (j - i - 1)];
  };
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) out.push_back(at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k));
  return out;
}

std::string to_string(SpecialKind k) {
  switch (k) {
    case SpecialKind::fromV: return "fromV";
    case SpecialKind::fromVdual: return "fromVdual";
    case SpecialKind::fromS: return "fromS";
  }
  return "?";
}

ProjLine special_line(const DeterminantalInstance& inst, SpecialKind kind, const RatVector& param) {
  const auto& basis = inst.lambda_perp.basis();
  std::vector<RatVector> cols;
  switch (kind) {
    case SpecialKind::fromV:
    case SpecialKind::fromVdual: {
      if (param.size() != 3 || is_zero_vector(param)) throw PreconditionError("special_line: expected a nonzero 3-vector");
      for (const auto& b : basis) cols.push_back(kind == SpecialKind::fromV ? b * param : b.transpose() * param);
      break;
    }
    case SpecialKind::fromS: {
      if (param.size() != 4) throw PreconditionError("special_line: expected Lambda coordinates");
      const RatMatrix s = inst.sigma(param);
      if (rank(s) != 2) throw PreconditionError("special_line: sigma must have rank 2");
      for (const auto& b : basis) cols.push_back(vec(s * b * s));
      break;
    }
  }
  auto ker = nullspace(RatMatrix::from_columns(cols));
  if (ker.size() != 2)
    throw DegenerateError("special_line: solution space has projective dimension " + std::to_string(int(ker.size()) - 1));
  ProjLine line(primitive(ker[0]), primitive(ker[1]));
  if (!restrict_to_subspace(inst.cubicY, {line.a(), line.b()}).is_zero())
    throw Error("special_line: line is not contained in Y");
  return line;
}

std::vector<MPoly> plucker_fromV_symbolic(const DeterminantalInstance& inst) {
  // C(v) is 3x5 with columns B_k v; ker C(v) is the line, so its Plucker vector is the
  // complementary 3x3 minor with the sign of the shuffle permutation.
  const auto& basis = inst.lambda_perp.basis();
  std::vector<std::vector<MPoly>> c(3, std::vector<MPoly>(5, MPoly(3)));
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 5; ++k) c[i][k] = linear_form(basis[k].row(i));
  std::vector<MPoly> out;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      std::vector<int> perm = {i, j};
      for (int k = 0; k < 5; ++k)
        if (k != i && k != j) perm.push_back(k);
      int inversions = 0;
      for (int x = 0; x < 5; ++x)
        for (int y = x + 1; y < 5; ++y) inversions += perm[x] > perm[y];
      std::vector<std::vector<MPoly>> m(3);
      for (int r = 0; r < 3; ++r)
        for (int k = 2; k < 5; ++k) m[r].push_back(c[r][perm[k]]);
      MPoly d = poly_det(m);
      out.push_back(inversions % 2 ? -d : d);
    }
  return out;
}

}  // namespace flopkit
