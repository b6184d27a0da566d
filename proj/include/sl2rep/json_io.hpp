#pragma once

#include <string>

#include <json.hpp>

#include "sl2rep/admissibility.hpp"
#include "sl2rep/cohomology.hpp"
#include "sl2rep/deformation.hpp"
#include "sl2rep/presentation.hpp"
#include "sl2rep/representation.hpp"

namespace sl2rep {

using json = nlohmann::json;

// Embedded in every report under the "schema" key.
std::string report_schema_version();

json to_json(cplx z);                    // [re, im]
json to_json(const Mat2& m);             // row-major [[re,im] x 4]
json to_json(const Sl2Vector& v);        // (h, e, f) coordinates
json to_json(const Word& w, const std::vector<std::string>& names);
json to_json(const Presentation& p);
json to_json(const AbelianizationResult& a);
json to_json(const Representation& rho);
json to_json(const CharacterSample& s, const std::vector<std::string>& names);
json to_json(const RankDecision& d);
json to_json(const CohomologyReport& r);
json to_json(const DriftReport& r);
json to_json(const Verdict& v);

// Parses { "presentation": string, "images": [matrix...] }; the residual is
// recomputed, never trusted.
Representation representation_from_json(const json& j);

json representation_to_json(const Representation& rho);

// Deterministic rendering: keys sorted, two-space indent, every float printed
// with 17 significant digits.
std::string canonical_dump(const json& j);

}  // namespace sl2rep
