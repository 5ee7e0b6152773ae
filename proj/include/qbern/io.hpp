#pragma once

#include <vector>

#include "json.hpp"
#include "qbern/expand.hpp"
#include "qbern/poly.hpp"
#include "qbern/qops.hpp"

namespace qbern {

using Json = nlohmann::ordered_json;

/// Array of rational strings, index = power of z.
Json poly_to_json(const PolyZ& p);
PolyZ poly_from_json(const Json& j);

/// {"coefficients": ["p/r", ...], "tail": "finite" | {"geometric": "r"}}
Json stream_to_json(const CoefficientStream& s);
CoefficientStream stream_from_json(const Json& j);

/// [{"kind": k, "n": n, "pass": b}, ...]
Json appell_to_json(const std::vector<AppellEntry>& report);

}  // namespace qbern
