#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flopkit/detgeo/instance.hpp"
#include "flopkit/poly/linalg.hpp"
#include "flopkit/poly/mpoly.hpp"
#include "flopkit/poly/upoly.hpp"

namespace flopkit {

/// Line in projective space spanned by two exact points.
class ProjLine {
 public:
  ProjLine(RatVector a, RatVector b);

  const RatVector& a() const { return a_; }
  const RatVector& b() const { return b_; }
  int ambient() const { return static_cast<int>(a_.size()); }
  /// p_ij = a_i b_j - a_j b_i for i < j, lexicographic.
  const std::vector<Rational>& plucker() const { return plucker_; }
  bool contains(const RatVector& p) const;
  bool same_line(const ProjLine& other) const;
  RatVector point(const Rational& s, const Rational& t) const;

 private:
  RatVector a_, b_;
  std::vector<Rational> plucker_;
};

/// Numeric counterpart; a is typically exact, b an approximated direction.
struct NumLine {
  CVector a;
  CVector b;
  /// Plucker vector scaled so its largest entry is 1.
  CVector plucker() const;
};

NumLine to_numeric(const ProjLine& l);

/// The 10 Plucker quadratic relations, evaluated.
std::vector<Rational> plucker_relations(const std::vector<Rational>& p);

enum class SpecialKind { fromV, fromVdual, fromS };
std::string to_string(SpecialKind k);

/// The line of Y attached to [v] in P(V), [v] in P(V dual), or [sigma] in S (Lambda coordinates).
ProjLine special_line(const DeterminantalInstance& inst, SpecialKind kind, const RatVector& param);

enum class LineFamily { P, Pdual, S, none };
std::string to_string(LineFamily f);

struct LineClass {
  LineFamily family = LineFamily::none;
  std::vector<int> nodes;  // indices of nodes on the line
  std::optional<RatVector> witness;  // kernel vector, cokernel functional, or sigma coordinates
  bool singular_locus() const { return !nodes.empty(); }
  /// "P", "Pdual", "S", or "singular-locus" for lines through nodes.
  std::string tag() const;
};

LineClass classify_line(const DeterminantalInstance& inst, const ProjLine& line);
/// Numeric classification; ranks are decided against rel_tol.
LineClass classify_line(const DeterminantalInstance& inst, const NumLine& line, const Real& rel_tol);

/// The 3x3 minors of C(v) = [B_1 v, ..., B_5 v], arranged as Plucker coordinates of ker C(v):
/// cubic forms in v whose values are proportional to the Plucker vector of the P(V) line.
std::vector<MPoly> plucker_fromV_symbolic(const DeterminantalInstance& inst);

struct LineThroughPoint {
  NumLine line;
  std::optional<ProjLine> exact;
  Real eliminant_residual;
  Real direction_residual;
  int multiplicity = 1;
};

struct LinesThroughPointResult {
  UPoly eliminant;
  std::vector<LineThroughPoint> lines;
};

/// Lines on {f = 0} through the smooth point y, solving the direction equations (coefficients of
/// t, t^2, t^3 in f(y + t d)). Extra hyperplanes (linear forms on directions) cut the solution set
/// down when the ambient dimension exceeds 4. Throws DegenerateError when no projection gives a
/// square-free degree-6 eliminant.
LinesThroughPointResult lines_through_point(const MPoly& f, const RatVector& y,
                                            const std::vector<RatVector>& extra_hyperplanes, int bits,
                                            std::uint64_t seed = 1);

}  // namespace flopkit
