#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flopkit/lattice/lattice.hpp"

namespace flopkit {

/// Ray k of the chamber decomposition: ray(0) = alpha_1^dual, ray(1) = alpha_1, and
/// ray(k + 2) = (R1 R2) ray(k). Chamber k is Cone(ray(k), ray(k + 1)); rays run clockwise.
LatticeClass chamber_ray(int k);

enum class Reflection { R1, R2 };

struct ChamberLocation {
  int k = 0;
  std::optional<int> wall_neighbor;  // set when v lies on a wall; the other adjacent chamber
  Rational coord_first;              // coefficient of ray(k)
  Rational coord_second;             // coefficient of ray(k + 1)
  /// Reflections in application order mapping v into chamber 0 (k even) or 1 (k odd).
  std::vector<Reflection> word;
  int base_chamber = 0;
};

ChamberLocation chamber_locate(const LatticeClass& v);
/// Applies the word left to right (first element acts first).
LatticeClass apply_word(const std::vector<Reflection>& word, const LatticeClass& v);
std::string model_label(int k);

}  // namespace flopkit
