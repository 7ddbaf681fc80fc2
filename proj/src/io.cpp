#include "chorient/io.hpp"

#include <fstream>
#include <stdexcept>

namespace chorient {

namespace {

using nlohmann::json;

std::int64_t require_integer(const json& j, const char* context, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw std::runtime_error(std::string(context) + ": missing or non-integer field '" +
                                 field + "'");
    return j[field].get<std::int64_t>();
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    try {
        return json::parse(in);
    } catch (const json::exception& error) {
        throw std::runtime_error(path + ": " + error.what());
    }
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace

ChoreInstance instance_from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("instance: expected a JSON object");
    const std::int64_t vertex_count = require_integer(j, "instance", "vertex_count");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::runtime_error("instance: missing or non-array field 'edges'");
    bool allow_multi = false;
    if (j.contains("allow_multi")) {
        if (!j["allow_multi"].is_boolean())
            throw std::runtime_error("instance: field 'allow_multi' must be a boolean");
        allow_multi = j["allow_multi"].get<bool>();
    }
    std::vector<Edge> edges;
    edges.reserve(j["edges"].size());
    for (const json& entry : j["edges"]) {
        if (!entry.is_object()) throw std::runtime_error("instance: edges must be objects");
        Edge e;
        e.u = static_cast<VertexId>(require_integer(entry, "edge", "u"));
        e.v = static_cast<VertexId>(require_integer(entry, "edge", "v"));
        e.util_u = require_integer(entry, "edge", "util_u");
        e.util_v = require_integer(entry, "edge", "util_v");
        edges.push_back(e);
    }
    try {
        return ChoreInstance(static_cast<int>(vertex_count), std::move(edges), allow_multi);
    } catch (const std::invalid_argument& error) {
        throw std::runtime_error(std::string("instance: ") + error.what());
    }
}

json instance_to_json(const ChoreInstance& instance) {
    json edges = json::array();
    for (const Edge& e : instance.edges())
        edges.push_back({{"u", e.u}, {"v", e.v}, {"util_u", e.util_u}, {"util_v", e.util_v}});
    return {{"vertex_count", instance.vertex_count()},
            {"edges", std::move(edges)},
            {"allow_multi", instance.allow_multi()}};
}

Orientation orientation_from_json(const json& j, const ChoreInstance& instance) {
    if (!j.is_array()) throw std::runtime_error("orientation: expected a JSON array");
    if (static_cast<int>(j.size()) != instance.edge_count())
        throw std::runtime_error("orientation: entry count does not match the instance's " +
                                 std::to_string(instance.edge_count()) + " edges");
    Orientation orientation;
    orientation.receiver.reserve(j.size());
    for (int t = 0; t < static_cast<int>(j.size()); ++t) {
        const json& entry = j[t];
        if (!entry.is_object()) throw std::runtime_error("orientation: entries must be objects");
        if (require_integer(entry, "orientation entry", "edge") != t)
            throw std::runtime_error("orientation: entries must appear in edge-id order");
        orientation.receiver.push_back(
            static_cast<VertexId>(require_integer(entry, "orientation entry", "to")));
    }
    try {
        validate_orientation(instance, orientation);
    } catch (const std::invalid_argument& error) {
        throw std::runtime_error(std::string("orientation: ") + error.what());
    }
    return orientation;
}

json orientation_to_json(const Orientation& orientation) {
    json entries = json::array();
    for (int t = 0; t < static_cast<int>(orientation.receiver.size()); ++t)
        entries.push_back({{"edge", t}, {"to", orientation.receiver[t]}});
    return entries;
}

ChoreInstance load_instance(const std::string& path) {
    return instance_from_json(parse_file(path));
}

void save_instance(const std::string& path, const ChoreInstance& instance) {
    write_file(path, instance_to_json(instance));
}

Orientation load_orientation(const std::string& path, const ChoreInstance& instance) {
    return orientation_from_json(parse_file(path), instance);
}

void save_orientation(const std::string& path, const Orientation& orientation) {
    write_file(path, orientation_to_json(orientation));
}

}  // namespace chorient
