#pragma once

#include <array>
#include <string>
#include <vector>

namespace flopkit {

/// d L + sum m_i E_i in Pic of the six-point blow-up of P^2; L^2 = 1, E_i E_j = -delta_ij.
struct PicClass {
  int d = 0;
  std::array<int, 6> m{};

  friend bool operator==(const PicClass&, const PicClass&) = default;
  friend auto operator<=>(const PicClass&, const PicClass&) = default;
  friend PicClass operator+(const PicClass& a, const PicClass& b);
  friend PicClass operator*(int s, const PicClass& a);
  std::string str() const;
};

int dot(const PicClass& a, const PicClass& b);
PicClass canonical_class();
PicClass exceptional(int i);  // E_i, 0-based
PicClass hyperplane();

/// All classes with C^2 = -1 and C.K = -1.
std::vector<PicClass> line_classes();

using Sextuple = std::array<PicClass, 6>;

/// Sextuples of pairwise disjoint lines, each sorted; one per unordered set.
std::vector<Sextuple> disjoint_sextuples();

/// Integral 7x7 matrix acting on coordinate columns (d, m1..m6).
struct PicIsometry {
  std::array<std::array<int, 7>, 7> m{};
  PicClass operator()(const PicClass& c) const;
  friend PicIsometry operator*(const PicIsometry& a, const PicIsometry& b);
  bool is_identity() const;
  bool preserves_form() const;
};

/// Reflection in 2L' - sum a_i with 3L' = -K + sum a_i; swaps a_i with the partner line b_i.
PicIsometry double_six_involution(const Sextuple& a);

struct DoubleSix {
  Sextuple a;
  Sextuple b;  // b[i] is the image of a[i]
};
std::vector<DoubleSix> double_sixes();

bool is_disjoint_sextuple(const Sextuple& s);

}  // namespace flopkit
