#include "flopkit/lattice/chamber.hpp"

#include "flopkit/core/error.hpp"

namespace flopkit {

LatticeClass chamber_ray(int k) {
  const bool odd = k % 2 != 0;
  const int j = (k - (odd ? 1 : 0)) / 2;
  LatticeClass v = odd ? LatticeClass(7, -3) : LatticeClass(1, 3);
  const Isometry step = named_isometry(j >= 0 ? "R1R2" : "R2R1");
  for (int i = 0; i < std::abs(j); ++i) v = apply_isometry(step, v);
  return v;
}

namespace {

/// Solves v = a*r0 + b*r1.
std::pair<Rational, Rational> cone_coordinates(const LatticeClass& v, const LatticeClass& r0,
                                               const LatticeClass& r1) {
  Integer det = r0.x * r1.y - r1.x * r0.y;
  Rational a(v.x * r1.y - r1.x * v.y, det), b(r0.x * v.y - v.x * r0.y, det);
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

}  // namespace

ChamberLocation chamber_locate(const LatticeClass& v) {
  if (!(v.ctx == GramContext::J12())) throw PreconditionError("chamber_locate: expects the J12 lattice");
  if (positive_cone_membership(v) != ConeRegion::interior_P)
    throw PreconditionError("chamber_locate: class is not in the interior of the positive cone");
  if (!v.is_primitive()) throw PreconditionError("chamber_locate: class is not primitive");
  ChamberLocation loc;
  int k = 0;
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw Error("chamber_locate: walk did not terminate");
    auto [a, b] = cone_coordinates(v, chamber_ray(k), chamber_ray(k + 1));
    if (sgn(a) < 0) {
      ++k;
      continue;
    }
    if (sgn(b) < 0) {
      --k;
      continue;
    }
    loc.k = k;
    loc.coord_first = a;
    loc.coord_second = b;
    if (sgn(a) == 0) loc.wall_neighbor = k + 1;
    if (sgn(b) == 0) loc.wall_neighbor = k - 1;
    break;
  }
  // (R1 R2) shifts chambers by +2, so (R2 R1)^j undoes a shift of 2j: apply R1 first, then R2.
  const int j = k >= 0 ? k / 2 : -((-k + 1) / 2);
  loc.base_chamber = k - 2 * j;
  for (int i = 0; i < std::abs(j); ++i) {
    if (j > 0) {
      loc.word.push_back(Reflection::R1);
      loc.word.push_back(Reflection::R2);
    } else {
      loc.word.push_back(Reflection::R2);
      loc.word.push_back(Reflection::R1);
    }
  }
  return loc;
}

LatticeClass apply_word(const std::vector<Reflection>& word, const LatticeClass& v) {
  LatticeClass out = v;
  for (Reflection r : word) out = apply_isometry(named_isometry(r == Reflection::R1 ? "R1" : "R2"), out);
  return out;
}

std::string model_label(int k) {
  if (k == 0) return "F0";
  if (k > 0) return "F" + std::to_string(k);
  return "F" + std::to_string(-k) + "_dual";
}

}  // namespace flopkit
