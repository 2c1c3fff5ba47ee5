#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "flopkit/detgeo/endo.hpp"
#include "flopkit/poly/mpoly.hpp"
#include "flopkit/poly/serialize.hpp"

namespace flopkit {

/// Lambda (dim 4) and its complement W (dim 5) with the determinantal cubics on P(W) and P(Lambda).
/// The basis of W is p_1, ..., p_5, so the first five nodes are coordinate points.
struct DeterminantalInstance {
  std::uint64_t seed = 0;
  int attempts = 0;
  EndoSubspace lambda;
  EndoSubspace lambda_perp;
  MPoly cubicY;  // 5 variables
  MPoly cubicS;  // 4 variables
  std::vector<RatVector> nodes;         // coordinates in the lambda_perp basis
  std::vector<RatMatrix> node_matrices; // p_i = q_i w_i^T
  std::vector<RatVector> q_points;      // im p_i
  std::vector<RatVector> q_dual_points; // functional annihilating ker p_i
  Rational smoothness_certificate;      // Macaulay resultant of the partials of cubicS

  RatMatrix phi(const RatVector& y) const { return lambda_perp.combination(y); }
  RatMatrix sigma(const RatVector& s) const { return lambda.combination(s); }
};

/// Draws the five rank-1 matrices of one attempt.
using RankOneSampler = std::function<std::vector<RatMatrix>(std::mt19937_64& rng, int attempt)>;

struct InstanceOptions {
  int retry_cap = 32;
  RankOneSampler sampler;  // empty: entries uniform in [-9, 9]
};

std::vector<RatMatrix> sample_rank_one(std::mt19937_64& rng, int count);

/// Deterministic instance from a seed; every invariant is verified before returning.
DeterminantalInstance make_instance(std::uint64_t seed, const InstanceOptions& options = {});

/// Builds and verifies an instance from five rank-1 matrices; throws DegenerateError when any
/// check fails.
DeterminantalInstance instance_from_rank_one(const std::vector<RatMatrix>& five);

/// The sixth point of Sigma_1 on P(span of five rank-1 matrices), exact.
RatMatrix residual_rank1_point(const std::vector<RatMatrix>& five);

/// det(sum_k x_k basis[k]) as a polynomial in dimension() variables.
MPoly determinantal_form(const EndoSubspace& s);

/// f has an ordinary double point at p: zero gradient and a rank-4 tangent cone.
bool is_odp(const MPoly& f, const RatVector& p);
/// Every subset of dim points spans the ambient space, dim = coordinate length.
bool linear_general_position(const std::vector<RatVector>& points);

struct InstanceReport {
  bool dimensions = false;
  bool orthogonal = false;
  bool cubic_matches = false;
  bool nodes_rank_one = false;
  bool nodes_on_y = false;
  bool nodes_singular = false;
  bool nodes_odp = false;
  bool general_position = false;
  bool s_smooth = false;
  Rational certificate;
  bool ok() const {
    return dimensions && orthogonal && cubic_matches && nodes_rank_one && nodes_on_y && nodes_singular &&
           nodes_odp && general_position && s_smooth;
  }
};

/// Recomputes every invariant from scratch, including the Macaulay certificate.
InstanceReport check_instance(const DeterminantalInstance& inst);

/// A point of S given by the coordinates of a rank-2 sigma in Lambda with sigma(v) = 0.
/// Throws DegenerateError when the kernel condition does not cut out a single point.
RatVector s_point_with_kernel(const DeterminantalInstance& inst, const RatVector& v);
/// Random point of S with small-height kernel vector and rank-2 sigma.
RatVector random_s_point(const DeterminantalInstance& inst, std::mt19937_64& rng);
/// Random smooth point of Y (rank-2 matrix), found on a random line of the P(V) family, and on no
/// line through a node.
RatVector random_y_point(const DeterminantalInstance& inst, std::mt19937_64& rng);

Json to_json(const DeterminantalInstance& inst);
DeterminantalInstance instance_from_json(const Json& j);

}  // namespace flopkit
