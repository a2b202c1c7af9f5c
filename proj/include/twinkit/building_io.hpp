#pragma once

#include <string>

#include <json.hpp>

#include "twinkit/building.hpp"
#include "twinkit/gcm.hpp"

namespace twinkit {

/// "A<n>", "B2", "G2", "~A1" (also "affine_A1"). Throws MalformedInput.
Gcm gcm_by_name(const std::string& name);

/// Table export: chamber labels per half, panels per generator, interned elements (1-based words)
/// and both codistance directions as element ids. Distances are rebuilt from panels on import,
/// except for capped models, whose distance tables are written out.
nlohmann::json building_to_json(const TwinBuilding& b);

/// Accepts a table export or a named generator:
///   {"generator": "thin", "type": "A2" | {"rank", "cartan"}, "cap": L}
///   {"generator": "sl_n", "n": 3, "p": 2}
/// Throws MalformedInput.
TwinBuilding building_from_json(const nlohmann::json& j);

} // namespace twinkit
