#pragma once

#include <optional>
#include <vector>

#include "flopkit/detgeo/instance.hpp"
#include "flopkit/detgeo/lines.hpp"

namespace flopkit {

/// Three quadrics cutting T_v: matrices whose image contains v.
std::vector<MPoly> scroll_quadrics(const DeterminantalInstance& inst, const RatVector& v);
/// Three quadrics cutting T_{v dual}: matrices whose kernel is annihilated by the functional.
std::vector<MPoly> dual_scroll_quadrics(const DeterminantalInstance& inst, const RatVector& vdual);

struct ScrollData {
  std::vector<MPoly> tv;
  std::vector<MPoly> tv_dual;
  MPoly union_quadric;
  int samples = 0;
  bool samples_on_scrolls = false;  // sampled ruling points satisfy Y and their own quadrics
  bool union_vanishes = false;      // union quadric vanishes on both sample sets
  bool ideal_identity = false;      // det equals the row and column expansions in the minors
  bool ok() const { return samples_on_scrolls && union_vanishes && ideal_identity; }
};

/// Scroll quadrics for v and a functional with vdual(v) != 0 (defaults to v^T), with sample and
/// ideal-level verification.
ScrollData scroll_data(const DeterminantalInstance& inst, const RatVector& v,
                       const std::optional<RatVector>& vdual = std::nullopt, std::uint64_t seed = 1);

struct TwistedQuarticReport {
  RatVector kernel;     // beta(s)
  RatVector cokernel;   // beta dual(s)
  std::vector<bool> on_tv;
  std::vector<bool> on_tv_dual;
  std::vector<bool> on_line;
  bool ok() const;
};

/// Node incidences with T_{beta(s)}, T_{beta dual(s)} and the line l_s for s in S.
TwistedQuarticReport twisted_quartic_check(const DeterminantalInstance& inst, const RatVector& s);

}  // namespace flopkit
