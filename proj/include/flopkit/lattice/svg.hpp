#pragma once

#include <string>

namespace flopkit {

/// Standalone SVG of chambers -k..k-1 in the (x, y) coordinate plane: rays ray(-k)..ray(k), the
/// two isotropic boundary rays of the positive cone, alternating shading and model labels.
std::string emit_cone_svg(int k);

}  // namespace flopkit
