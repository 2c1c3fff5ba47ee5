#pragma once

#include <array>
#include <string>
#include <vector>

#include "flopkit/core/error.hpp"
#include "flopkit/lattice/quadext.hpp"
#include "flopkit/poly/rational.hpp"

namespace flopkit {

using IntMatrix2 = std::array<std::array<Integer, 2>, 2>;

/// Symmetric nondegenerate integral Gram matrix of a rank-2 lattice.
class GramContext {
 public:
  explicit GramContext(const IntMatrix2& entries);
  static GramContext J12();
  static GramContext K12();

  const IntMatrix2& entries() const { return m_; }
  const Integer& operator()(int r, int c) const { return m_[r][c]; }
  Integer det() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }
  friend bool operator==(const GramContext& a, const GramContext& b) { return a.m_ == b.m_; }

 private:
  IntMatrix2 m_;
};

/// x*g + y*tau in the ordered basis (g, tau).
struct LatticeClass {
  Integer x;
  Integer y;
  GramContext ctx = GramContext::J12();

  LatticeClass(Integer x_, Integer y_, GramContext c = GramContext::J12())
      : x(std::move(x_)), y(std::move(y_)), ctx(std::move(c)) {}
  friend bool operator==(const LatticeClass& a, const LatticeClass& b) = default;
  friend LatticeClass operator-(const LatticeClass& v) { return {-v.x, -v.y, v.ctx}; }
  bool is_zero() const { return x == 0 && y == 0; }
  bool is_primitive() const;
  std::string str() const;
};

Integer eval_form(const LatticeClass& v, const LatticeClass& w);
inline Integer self_pairing(const LatticeClass& v) { return eval_form(v, v); }
/// gcd of the pairings with the basis; 0 exactly for the zero class.
Integer divisibility(const LatticeClass& v);

/// Acts on coordinate columns; columns are the images of g and tau.
struct Isometry {
  IntMatrix2 m;
  std::string name;

  friend Isometry operator*(const Isometry& a, const Isometry& b);
  Isometry inverse() const;
  bool is_identity() const;
};

Isometry named_isometry(const std::string& name);  // R1, R2, R3, R1R2, R2R1, id
bool is_isometry(const IntMatrix2& m, const GramContext& ctx);
LatticeClass apply_isometry(const Isometry& iso, const LatticeClass& v);

enum class OrbitKind { rho, rho_dual, alpha, alpha_dual };
OrbitKind parse_orbit_kind(const std::string& s);
std::string to_string(OrbitKind k);
/// First `count` classes of the recursive sequence seeded by the tabulated first two entries.
std::vector<LatticeClass> orbit_classes(OrbitKind kind, int count);

enum class ConeRegion { interior_P, boundary_P, interior_negP, boundary_negP, outside };
std::string to_string(ConeRegion r);
ConeRegion positive_cone_membership(const LatticeClass& v);
/// Real point x*g + y*tau with coordinates in Q(sqrt 6), classified exactly.
ConeRegion positive_cone_membership(const QuadExtScalar& x, const QuadExtScalar& y, const GramContext& ctx);

/// Model-k nef test: pairing with the two wall classes of chamber k is nonnegative.
bool nef_test(const LatticeClass& v, int k);
/// The two (-10)-classes bounding chamber k, oriented to pair nonnegatively with it; the first is
/// orthogonal to ray(k + 1), the second to ray(k).
std::array<LatticeClass, 2> chamber_walls(int k);

struct TransferResult {
  GramContext gram;
  bool degenerate;  // (tau, tau) = 0
};

/// Gram [[3,a],[a,t]] on (h^2, T) to the induced Gram on (g, tau).
TransferResult transfer_K_to_J(const GramContext& k);

bool special_discriminant(const Integer& d);

}  // namespace flopkit
