#pragma once

#include <vector>

#include "flopkit/detgeo/instance.hpp"

namespace flopkit {

struct NodeProjection {
  int node = 0;              // 0-based
  MPoly a2;                  // tangent cone quadric, 4 variables
  MPoly a3;                  // residual cubic, 4 variables
  std::vector<RatVector> images;  // the other five nodes in P^3
  int quadric_rank = 0;
  bool images_on_curve = false;
  bool images_singular = false;
  bool distinct = false;
  bool no_common_ruling = false;
  bool no_four_coplanar = false;
  bool ok() const {
    return quadric_rank == 4 && images_on_curve && images_singular && distinct && no_common_ruling &&
           no_four_coplanar;
  }
};

/// Projection of Y from node i: f = x_4 A_2 + A_3 in coordinates where the node is the last
/// coordinate point, with the checks on the images of the remaining nodes.
NodeProjection project_from_node(const DeterminantalInstance& inst, int i);

/// Linear change of coordinates x = B x' with p as the last column of B.
RatMatrix basis_with_last(const RatVector& p);
/// f(B x) for a square matrix B.
MPoly linear_substitute(const MPoly& f, const RatMatrix& b);

}  // namespace flopkit
