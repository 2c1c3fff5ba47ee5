#include "flopkit/detgeo/lines.hpp"

namespace flopkit {

std::string to_string(LineFamily f) {
  switch (f) {
    case LineFamily::P: return "P";
    case LineFamily::Pdual: return "Pdual";
    case LineFamily::S: return "S";
    case LineFamily::none: return "none";
  }
  return "?";
}

std::string LineClass::tag() const { return singular_locus() ? "singular-locus" : to_string(family); }

namespace {

// Small combinations of the spanning points, tried in order, to find rank-2 points of the line.
const int kCombos[][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {2, -1}, {1, 3}, {3, 1}};

RatMatrix stack(const RatMatrix& a, const RatMatrix& b) {
  std::vector<RatVector> rows;
  for (int i = 0; i < 3; ++i) rows.push_back(a.row(i));
  for (int i = 0; i < 3; ++i) rows.push_back(b.row(i));
  return RatMatrix::from_rows(rows);
}

}  // namespace

LineClass classify_line(const DeterminantalInstance& inst, const ProjLine& line) {
  if (line.ambient() != 5) throw PreconditionError("classify_line: expected a line in P(Lambda perp)");
  if (!restrict_to_subspace(inst.cubicY, {line.a(), line.b()}).is_zero())
    throw PreconditionError("classify_line: line is not contained in Y");
  LineClass out;
  for (int i = 0; i < 6; ++i)
    if (line.contains(inst.nodes[i])) out.nodes.push_back(i);

  std::vector<RatMatrix> phis;
  for (const auto& c : kCombos) {
    RatMatrix m = inst.phi(line.point(Rational(c[0]), Rational(c[1])));
    if (rank(m) == 2) phis.push_back(m);
    if (phis.size() == 2) break;
  }
  if (phis.size() < 2) throw DegenerateError("classify_line: too few rank-2 points on the line");
  const RatMatrix &f1 = phis[0], &f2 = phis[1];

  if (auto k = nullspace(stack(f1, f2)); !k.empty()) {
    out.family = LineFamily::P;
    out.witness = k.front();
    return out;
  }
  if (auto k = nullspace(stack(f1.transpose(), f2.transpose())); !k.empty()) {
    out.family = LineFamily::Pdual;
    out.witness = k.front();
    return out;
  }
  // sigma has image span(ker f1, ker f2) and kills f1(ker f2).
  const RatVector k1 = kernel(f1).at(0), k2 = kernel(f2).at(0);
  const RatVector ann = cross(k1, k2), killed = f1 * k2;
  std::vector<RatVector> rows(6, RatVector());
  for (const auto& a : inst.lambda.basis()) {
    RatVector left = a.transpose() * ann, right = a * killed;
    for (int i = 0; i < 3; ++i) {
      rows[i].push_back(left[i]);
      rows[3 + i].push_back(right[i]);
    }
  }
  for (const auto& s : nullspace(RatMatrix::from_rows(rows))) {
    const RatMatrix sigma = inst.sigma(s);
    if (rank(sigma) == 2 && (sigma * f1 * sigma).is_zero() && (sigma * f2 * sigma).is_zero()) {
      out.family = LineFamily::S;
      out.witness = s;
      return out;
    }
  }
  return out;
}

namespace {

CMatrix cphi(const DeterminantalInstance& inst, const CVector& y) {
  CMatrix m(3, CVector(3));
  for (int k = 0; k < 5; ++k) {
    const RatMatrix& b = inst.lambda_perp.basis()[k];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (sgn(b(i, j)) != 0) m[i][j] += y[k] * ComplexMP(b(i, j));
  }
  return m;
}

CMatrix ctranspose(const CMatrix& m) {
  CMatrix t(m[0].size(), CVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

CMatrix cmul(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.size(), CVector(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

CVector capply(const CMatrix& a, const CVector& v) {
  CVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

Real cmax(const CMatrix& m) {
  Real best = 0;
  for (const auto& r : m) best = std::max(best, max_norm(r));
  return best;
}

}  // namespace

LineClass classify_line(const DeterminantalInstance& inst, const NumLine& line, const Real& rel_tol) {
  if (line.a.size() != 5 || line.b.size() != 5) throw PreconditionError("classify_line: expected a line in P(Lambda perp)");
  LineClass out;
  for (int i = 0; i < 6; ++i) {
    CMatrix m = {line.a, line.b, to_complex(inst.nodes[i])};
    if (numeric_rank(m, rel_tol) < 3) out.nodes.push_back(i);
  }
  std::vector<CMatrix> phis;
  for (const auto& c : kCombos) {
    CVector y(5);
    for (int k = 0; k < 5; ++k) y[k] = ComplexMP(long(c[0])) * line.a[k] + ComplexMP(long(c[1])) * line.b[k];
    CMatrix m = cphi(inst, y);
    if (numeric_rank(m, rel_tol) == 2) phis.push_back(m);
    if (phis.size() == 2) break;
  }
  if (phis.size() < 2) throw DegenerateError("classify_line: too few rank-2 points on the line");
  const CMatrix &f1 = phis[0], &f2 = phis[1];
  auto stacked = [](const CMatrix& a, const CMatrix& b) {
    CMatrix s = a;
    s.insert(s.end(), b.begin(), b.end());
    return s;
  };
  if (numeric_rank(stacked(f1, f2), rel_tol) < 3) {
    out.family = LineFamily::P;
    return out;
  }
  if (numeric_rank(stacked(ctranspose(f1), ctranspose(f2)), rel_tol) < 3) {
    out.family = LineFamily::Pdual;
    return out;
  }
  const CVector k1 = numeric_nullspace(f1, rel_tol).at(0), k2 = numeric_nullspace(f2, rel_tol).at(0);
  const CVector ann = cross(k1, k2), killed = capply(f1, k2);
  CMatrix rows(6);
  for (const auto& a : inst.lambda.basis()) {
    CMatrix ca(3, CVector(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) ca[i][j] = ComplexMP(a(i, j));
    CVector left = capply(ctranspose(ca), ann), right = capply(ca, killed);
    for (int i = 0; i < 3; ++i) {
      rows[i].push_back(left[i]);
      rows[3 + i].push_back(right[i]);
    }
  }
  for (const auto& s : numeric_nullspace(rows, rel_tol)) {
    CMatrix sigma(3, CVector(3));
    for (int k = 0; k < 4; ++k) {
      const RatMatrix& a = inst.lambda.basis()[k];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sigma[i][j] += s[k] * ComplexMP(a(i, j));
    }
    if (numeric_rank(sigma, rel_tol) != 2) continue;
    const Real scale1 = cmax(sigma) * cmax(sigma) * cmax(f1), scale2 = cmax(sigma) * cmax(sigma) * cmax(f2);
    if (cmax(cmul(cmul(sigma, f1), sigma)) <= rel_tol * scale1 &&
        cmax(cmul(cmul(sigma, f2), sigma)) <= rel_tol * scale2) {
      out.family = LineFamily::S;
      return out;
    }
  }
  return out;
}

}  // namespace flopkit
