#pragma once

#include "json.hpp"

#include "homconf/configs.hpp"
#include "homconf/mutation.hpp"
#include "homconf/noncrossing.hpp"

namespace homconf {

/// {"root": [...], "shift": 0|1}
nlohmann::json to_json(const OrbitObject& o);
/// Array of objects in canonical order.
nlohmann::json to_json(const Configuration& c);
/// {"matrix": [[...]], "word": [[...]], "length": k, "positive": bool}
nlohmann::json to_json(const NCElement& u);
/// {"nodes": [configuration...], "edges": [[a, b], ...]}
nlohmann::json to_json(const MutationGraph& g);

OrbitObject object_from_json(const nlohmann::json& j);
Configuration configuration_from_json(const nlohmann::json& j);

}  // namespace homconf
