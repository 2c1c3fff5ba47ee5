#include "flopkit/surf27/surf27.hpp"

#include <algorithm>
#include <set>

#include "flopkit/core/error.hpp"

namespace flopkit {

PicClass operator+(const PicClass& a, const PicClass& b) {
  PicClass c;
  c.d = a.d + b.d;
  for (int i = 0; i < 6; ++i) c.m[i] = a.m[i] + b.m[i];
  return c;
}

PicClass operator*(int s, const PicClass& a) {
  PicClass c;
  c.d = s * a.d;
  for (int i = 0; i < 6; ++i) c.m[i] = s * a.m[i];
  return c;
}

std::string PicClass::str() const {
  std::string s = "(" + std::to_string(d) + ";";
  for (int i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

int dot(const PicClass& a, const PicClass& b) {
  int s = a.d * b.d;
  for (int i = 0; i < 6; ++i) s -= a.m[i] * b.m[i];
  return s;
}

PicClass canonical_class() { return {-3, {1, 1, 1, 1, 1, 1}}; }

PicClass exceptional(int i) {
  PicClass c;
  c.m.at(i) = 1;
  return c;
}

PicClass hyperplane() { return {1, {}}; }

std::vector<PicClass> line_classes() {
  // C^2 = -1 and C.K = -1 give d^2 + 1 = sum m_i^2 and 3d + 1 = -sum m_i, so by Cauchy-Schwarz
  // (3d+1)^2 <= 6(d^2+1), i.e. 3d^2 + 6d - 5 <= 0, forcing -2 <= d <= 2 and then |m_i| <= 3.
  const PicClass k = canonical_class();
  std::vector<PicClass> out;
  PicClass c;
  for (c.d = -3; c.d <= 3; ++c.d) {
    std::array<int, 6>& m = c.m;
    for (m[0] = -3; m[0] <= 3; ++m[0])
      for (m[1] = -3; m[1] <= 3; ++m[1])
        for (m[2] = -3; m[2] <= 3; ++m[2])
          for (m[3] = -3; m[3] <= 3; ++m[3])
            for (m[4] = -3; m[4] <= 3; ++m[4])
              for (m[5] = -3; m[5] <= 3; ++m[5])
                if (dot(c, c) == -1 && dot(c, k) == -1) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_disjoint_sextuple(const Sextuple& s) {
  const PicClass k = canonical_class();
  for (int i = 0; i < 6; ++i) {
    if (dot(s[i], s[i]) != -1 || dot(s[i], k) != -1) return false;
    for (int j = i + 1; j < 6; ++j)
      if (dot(s[i], s[j]) != 0) return false;
  }
  return true;
}

std::vector<Sextuple> disjoint_sextuples() {
  const auto lines = line_classes();
  const int n = static_cast<int>(lines.size());
  std::vector<Sextuple> out;
  Sextuple cur;
  // Cliques of size six in the disjointness graph, listed in increasing index order.
  auto extend = [&](auto&& self, int depth, int start) -> void {
    if (depth == 6) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) ok = dot(cur[j], lines[i]) == 0;
      if (!ok) continue;
      cur[depth] = lines[i];
      self(self, depth + 1, i + 1);
    }
  };
  extend(extend, 0, 0);
  return out;
}

PicClass PicIsometry::operator()(const PicClass& c) const {
  std::array<int, 7> v{c.d, c.m[0], c.m[1], c.m[2], c.m[3], c.m[4], c.m[5]}, w{};
  for (int r = 0; r < 7; ++r)
    for (int k = 0; k < 7; ++k) w[r] += m[r][k] * v[k];
  return {w[0], {w[1], w[2], w[3], w[4], w[5], w[6]}};
}

PicIsometry operator*(const PicIsometry& a, const PicIsometry& b) {
  PicIsometry p;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) p.m[i][j] += a.m[i][k] * b.m[k][j];
  return p;
}

bool PicIsometry::is_identity() const {
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool PicIsometry::preserves_form() const {
  std::array<PicClass, 7> basis;
  basis[0] = hyperplane();
  for (int i = 0; i < 6; ++i) basis[i + 1] = exceptional(i);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (dot((*this)(basis[i]), (*this)(basis[j])) != dot(basis[i], basis[j])) return false;
  return true;
}

PicIsometry double_six_involution(const Sextuple& a) {
  if (!is_disjoint_sextuple(a)) throw PreconditionError("double_six_involution: not a disjoint sextuple");
  PicClass sum;
  for (const auto& c : a) sum = sum + c;
  PicClass three_l = (-1 * canonical_class()) + sum;
  if (three_l.d % 3 != 0 || std::any_of(three_l.m.begin(), three_l.m.end(), [](int x) { return x % 3 != 0; }))
    throw DegenerateError("double_six_involution: -K + sum a_i is not divisible by 3");
  PicClass l;
  l.d = three_l.d / 3;
  for (int i = 0; i < 6; ++i) l.m[i] = three_l.m[i] / 3;
  const PicClass r = (2 * l) + (-1 * sum);  // r^2 = -2, r.K = 0
  std::array<PicClass, 7> basis;
  basis[0] = hyperplane();
  for (int i = 0; i < 6; ++i) basis[i + 1] = exceptional(i);
  PicIsometry iso;
  for (int col = 0; col < 7; ++col) {
    PicClass img = basis[col] + (dot(basis[col], r) * r);
    iso.m[0][col] = img.d;
    for (int i = 0; i < 6; ++i) iso.m[i + 1][col] = img.m[i];
  }
  return iso;
}

std::vector<DoubleSix> double_sixes() {
  std::vector<DoubleSix> out;
  std::set<Sextuple> seen;
  for (const auto& a : disjoint_sextuples()) {
    if (seen.count(a)) continue;
    PicIsometry s = double_six_involution(a);
    DoubleSix ds{a, {}};
    for (int i = 0; i < 6; ++i) ds.b[i] = s(a[i]);
    Sextuple sorted_b = ds.b;
    std::sort(sorted_b.begin(), sorted_b.end());
    seen.insert(a);
    seen.insert(sorted_b);
    out.push_back(ds);
  }
  return out;
}

}  // namespace flopkit
