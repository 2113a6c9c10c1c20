#ifndef MINK_JSON_IO_HPP
#define MINK_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mink/covering.hpp"
#include "mink/geometry.hpp"
#include "mink/illumination.hpp"

namespace mink {

using nlohmann::json;

// Polytope schema: {"dim": d, "normals": [[...], ...]}.
// The loader enforces all polytope invariants and reports the first violated one.
json polytope_to_json(const SymmetricPolytope& K);
SymmetricPolytope polytope_from_json(const json& j);

// Points schema: {"dim": d, "points": [[...], ...]}.
json points_to_json(const std::vector<Vector>& pts, int dim);
std::vector<Vector> points_from_json(const json& j, int* dim = nullptr);

// Lights schema: {"dim": d, "lights": [[...], ...]} (extra fields ignored on load).
json lights_to_json(const LightConfiguration& cfg, int dim);
std::vector<Vector> lights_from_json(const json& j);

// Certificate schema: {"body": <polytope>, "homothets": [{"lambda": r, "t": [...]}, ...],
//                      "verdict": "unverified"|"covered"|"undetermined"}.
json certificate_to_json(const SymmetricPolytope& K, const CoveringCertificate& cert);
std::pair<SymmetricPolytope, CoveringCertificate> certificate_from_json(const json& j);

json load_json_file(const std::string& path);

}  // namespace mink

#endif
