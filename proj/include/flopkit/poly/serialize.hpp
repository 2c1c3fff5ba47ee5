#pragma once

#include <json.hpp>

#include "flopkit/poly/linalg.hpp"
#include "flopkit/poly/mpoly.hpp"

namespace flopkit {

using Json = nlohmann::ordered_json;

/// {"vars": n, "terms": [[[e0, e1, ...], "p/q"], ...]} in descending graded order.
Json to_json(const MPoly& f);
MPoly mpoly_from_json(const Json& j);

/// Row-major array of rational strings.
Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j, int rows, int cols);

Json to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);

/// Fixed-digit decimal rendering of a complex value, stable across runs.
Json to_json(const ComplexMP& z, int digits = 30);

}  // namespace flopkit
