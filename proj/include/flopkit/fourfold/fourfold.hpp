#pragma once

#include <array>
#include <functional>
#include <optional>
#include <random>

#include "flopkit/detgeo/instance.hpp"
#include "flopkit/detgeo/lines.hpp"
#include "flopkit/poly/serialize.hpp"

namespace flopkit {

/// X = cubicY + x5 Q in P^5, so that Y = X n {x5 = 0}.
struct CubicFourfold {
  MPoly cubic;
  MPoly quadric;
  DeterminantalInstance instance;
  std::uint64_t seed = 0;
  int attempts = 0;
  int spot_checks = 0;  // random points of X where the gradient was seen to be nonzero
};

using QuadricSampler = std::function<MPoly(std::mt19937_64&, int attempt)>;

struct FourfoldOptions {
  int retry_cap = 16;
  int spot_checks = 200;
  int bits = kDefaultPrecisionBits;
  QuadricSampler sampler;  // defaults to small random integer quadrics
};

MPoly random_quadric(std::mt19937_64& rng, int nvars, int bound);

/// Resamples Q while it vanishes at a node; throws DegenerateError when a spot check finds a
/// singular point or the retry cap is reached.
CubicFourfold extend_to_fourfold(const DeterminantalInstance& inst, std::uint64_t seed,
                                 const FourfoldOptions& opts = {});

/// A line on X in six coordinates; exact when it happens to be rational.
struct FourfoldLine {
  NumLine line;
  std::optional<ProjLine> exact;
  int bits = kDefaultPrecisionBits;
  Real residual;  // largest coefficient of X restricted to the line, relative
};

/// Scaled size of f restricted to the line (both spanning points max-normalized).
Real containment_residual(const MPoly& f, const NumLine& l);

/// Plucker distance after scaling both vectors at the largest entry of the first.
Real line_distance(const NumLine& a, const NumLine& b);

/// (y, 0) for y in the hyperplane x5 = 0.
RatVector embed(const RatVector& y);

/// The six lines of X through (y, 0) whose directions lie in the given hyperplane of P^5.
std::vector<FourfoldLine> candidate_lines(const CubicFourfold& x, const RatVector& y, const RatVector& hyperplane,
                                          int bits);

/// A line through a random smooth point of Y (or through y when given) that leaves x5 = 0.
FourfoldLine sample_line(const CubicFourfold& x, std::uint64_t seed, int bits,
                         const std::optional<RatVector>& y = std::nullopt);

struct IotaResult {
  FourfoldLine image;
  CVector y;       // m n {x5 = 0}, five coordinates
  CVector vdual;   // spans the kernel of phi(y)^T
  NumLine lvee;    // the P-dual line through y, six coordinates
  std::array<CVector, 3> plane;  // y, then points of m and of lvee
  Real remainder;  // restricted cubic minus t u L, relative
  bool exact = false;
};

/// The residual line of X in the plane spanned by m and the P-dual line through m n Y.
IotaResult iota_detail(const CubicFourfold& x, const FourfoldLine& m);
FourfoldLine iota(const CubicFourfold& x, const FourfoldLine& m);

struct IncidenceReport {
  bool m_meets = false;
  bool image_meets = false;
  Real m_value;      // scroll quadrics at m n Y, relative
  Real image_value;  // same for iota(m)
  bool marginal = false;
  bool invariant() const { return !marginal && m_meets == image_meets; }
};

/// Whether m and iota(m) meet the scroll T_v. Both lines meet x5 = 0 in one point, so incidence
/// is decided by the scroll quadrics there.
IncidenceReport scroll_incidence_invariance(const CubicFourfold& x, const FourfoldLine& m, const RatVector& v);

Json to_json(const CubicFourfold& x);
Json to_json(const FourfoldLine& l);

}  // namespace flopkit
