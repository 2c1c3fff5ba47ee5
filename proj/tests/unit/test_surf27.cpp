#include <doctest.h>

#include <set>

#include "flopkit/core/error.hpp"
#include "flopkit/surf27/surf27.hpp"

using namespace flopkit;

namespace {

// The classical list: E_i, L - E_i - E_j, 2L - (five E's).
std::set<PicClass> classical_lines() {
  std::set<PicClass> s;
  for (int i = 0; i < 6; ++i) s.insert(exceptional(i));
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      PicClass c = hyperplane();
      c.m[i] = c.m[j] = -1;
      s.insert(c);
    }
  for (int i = 0; i < 6; ++i) {
    PicClass c{2, {-1, -1, -1, -1, -1, -1}};
    c.m[i] = 0;
    s.insert(c);
  }
  return s;
}

}  // namespace

TEST_CASE("27 lines") {
  auto lines = line_classes();
  CHECK(lines.size() == 27);
  CHECK(std::set<PicClass>(lines.begin(), lines.end()) == classical_lines());
  PicClass conic{2, {0, -1, -1, -1, -1, -1}};
  CHECK(std::find(lines.begin(), lines.end(), conic) != lines.end());
  for (const auto& c : lines) {
    int meets = 0;
    for (const auto& d : lines) meets += dot(c, d) == 1;
    CHECK(meets == 10);
  }
}

TEST_CASE("sextuples and double-sixes") {
  auto sx = disjoint_sextuples();
  CHECK(sx.size() == 72);
  Sextuple e;
  for (int i = 0; i < 6; ++i) e[i] = exceptional(i);
  std::sort(e.begin(), e.end());
  CHECK(std::set<Sextuple>(sx.begin(), sx.end()).count(e) == 1);
  auto ds = double_sixes();
  CHECK(ds.size() == 36);
  CHECK(ds.size() * 2 == sx.size());
  std::set<Sextuple> covered;
  for (const auto& d : ds) {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(dot(d.a[i], d.b[j]) == (i == j ? 0 : 1));
    CHECK(is_disjoint_sextuple(d.b));
    Sextuple sb = d.b;
    std::sort(sb.begin(), sb.end());
    covered.insert(d.a);
    covered.insert(sb);
  }
  CHECK(covered.size() == 72);
  // Brute-force partner search agrees: the unique sextuple meeting a_i exactly off the diagonal.
  for (const auto& a : sx) {
    int partners = 0;
    for (const auto& b : sx) {
      bool ok = true;
      for (int i = 0; i < 6 && ok; ++i) {
        int hits = 0;
        for (int j = 0; j < 6; ++j) hits += dot(a[i], b[j]) == 1;
        ok = hits == 5;
      }
      partners += ok;
    }
    CHECK(partners == 1);
  }
}

TEST_CASE("double-six involution") {
  Sextuple e;
  for (int i = 0; i < 6; ++i) e[i] = exceptional(i);
  PicIsometry s = double_six_involution(e);
  PicClass img = s(exceptional(0));
  CHECK(img == PicClass{2, {0, -1, -1, -1, -1, -1}});
  CHECK(dot(img, img) == -1);
  CHECK(s.preserves_form());
  CHECK((s * s).is_identity());
  CHECK(s(canonical_class()) == canonical_class());
  // Matrix oracle: L -> 5L - 2 sum E_i, E_i -> 2L - sum_{j != i} E_j.
  CHECK(s(hyperplane()) == PicClass{5, {-2, -2, -2, -2, -2, -2}});
  for (const auto& a : disjoint_sextuples()) {
    PicIsometry t = double_six_involution(a);
    CHECK(t.preserves_form());
    CHECK((t * t).is_identity());
    CHECK(t(canonical_class()) == canonical_class());
    for (const auto& l : line_classes()) CHECK(t(t(l)) == l);
  }
  Sextuple bad = e;
  bad[1] = bad[0];
  CHECK_THROWS_AS(double_six_involution(bad), PreconditionError);
}
