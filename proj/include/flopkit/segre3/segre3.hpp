#pragma once

#include <array>
#include <string>
#include <vector>

#include "flopkit/detgeo/instance.hpp"
#include "flopkit/poly/mpoly.hpp"

namespace flopkit {

/// Six points of P^1 as homogeneous rational pairs.
struct SixTupleOnLine {
  std::array<RatVector, 6> points;

  explicit SixTupleOnLine(std::array<RatVector, 6> pts);
  /// Largest number of coincident points.
  int max_multiplicity() const;
  /// Sorted sizes of the coincidence classes.
  std::vector<int> multiplicity_partition() const;
};

enum class SegreVariant { printed, cyclic };
std::string to_string(SegreVariant v);
SegreVariant parse_segre_variant(const std::string& s);

struct SegreForms {
  SegreVariant variant;
  std::array<MPoly, 5> y;
  MPoly relation;  // y0y1y2 + y1y2y3 + y2y3y4 + y3y4y0 + y4y0y1 after substitution
  bool relation_holds() const { return relation.is_zero(); }
};

SegreForms segre_forms(SegreVariant v);

/// The coordinate simplex of P^4 and (1,1,1,1,1).
std::vector<RatVector> standard_points();

/// f and its gradient vanish at every point.
bool double_at_points(const MPoly& f, const std::vector<RatVector>& points);

enum class Stability { stable, strictly_semistable, unstable };
std::string to_string(Stability s);
Stability semistable_6tuple(const SixTupleOnLine& t);

/// Same point of M_{0,6}: Mobius-normalize the first triple of distinct points of t1 to 0, 1, oo
/// and the matching points of t2, then compare. Throws PreconditionError when t1 has fewer than
/// three distinct points.
bool tuple_equiv(const SixTupleOnLine& t1, const SixTupleOnLine& t2);

/// The image of t under the Mobius map with matrix m (columns act on (x, y)).
SixTupleOnLine apply_mobius(const RatMatrix& m, const SixTupleOnLine& t);

struct SPointData {
  RatMatrix sigma;
  RatVector beta;       // kernel of sigma, a point of P(V)
  RatVector beta_dual;  // left kernel, a point of P(V dual)
};

/// Checks that s avoids the lines of S: rank 2, beta(s) and beta_dual(s) differ from every q_i,
/// avoid the lines q_i q_j and the conics through five of the q_i. Throws PreconditionError naming
/// the first failed condition.
SPointData s_open_point(const DeterminantalInstance& inst, const RatVector& s);

/// j(s): the q_i projected from beta(s). j_dual(s): the dual points projected from beta_dual(s).
SixTupleOnLine jmap(const DeterminantalInstance& inst, const RatVector& s);
SixTupleOnLine jmap_dual(const DeterminantalInstance& inst, const RatVector& s);

bool jmap_agree(const DeterminantalInstance& inst, const RatVector& s);

}  // namespace flopkit
