#pragma once

#include <string>

#include <json.hpp>

#include "chorient/instance.hpp"

namespace chorient {

/// Canonical instance shape:
///   {"vertex_count": N,
///    "edges": [{"u": 0, "v": 1, "util_u": 0, "util_v": -3}, ...],
///    "allow_multi": false}
/// allow_multi defaults to false. Parse failures throw std::runtime_error.
ChoreInstance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const ChoreInstance& instance);

/// Canonical orientation shape: [{"edge": 0, "to": 1}, ...] with one entry
/// per edge, in edge-id order. Validated against the instance.
Orientation orientation_from_json(const nlohmann::json& j, const ChoreInstance& instance);
nlohmann::json orientation_to_json(const Orientation& orientation);

ChoreInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const ChoreInstance& instance);
Orientation load_orientation(const std::string& path, const ChoreInstance& instance);
void save_orientation(const std::string& path, const Orientation& orientation);

}  // namespace chorient
