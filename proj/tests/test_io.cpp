#include <doctest.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "chorient/io.hpp"
#include "support.hpp"

using namespace chorient;
using namespace testsupport;
using nlohmann::json;

namespace {

struct TempDir {
    std::filesystem::path path;

    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("chorient-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }

    ~TempDir() { std::filesystem::remove_all(path); }

    std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("canonical instance parses") {
    const json j = json::parse(R"({
        "vertex_count": 3,
        "edges": [
            {"u": 0, "v": 1, "util_u": -2, "util_v": 0},
            {"u": 2, "v": 2, "util_u": -1, "util_v": -1}
        ]
    })");
    const ChoreInstance g = instance_from_json(j);
    CHECK(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edge(0) == Edge{0, 1, -2, 0});
    CHECK(g.edge(1) == Edge{2, 2, -1, -1});
    CHECK_FALSE(g.allow_multi());
}

TEST_CASE("allow_multi flag is honored") {
    json j = {{"vertex_count", 2},
              {"edges", json::array({{{"u", 0}, {"v", 1}, {"util_u", -1}, {"util_v", -1}},
                                     {{"u", 0}, {"v", 1}, {"util_u", -2}, {"util_v", -2}}})}};
    CHECK_THROWS_AS(instance_from_json(j), std::runtime_error);  // duplicate pair
    j["allow_multi"] = true;
    CHECK(instance_from_json(j).allow_multi());
    j["allow_multi"] = 1;
    CHECK_THROWS_AS(instance_from_json(j), std::runtime_error);
}

TEST_CASE("instance parse failures") {
    CHECK_THROWS_AS(instance_from_json(json::array()), std::runtime_error);
    CHECK_THROWS_AS(instance_from_json({{"edges", json::array()}}), std::runtime_error);
    CHECK_THROWS_AS(instance_from_json({{"vertex_count", 2}}), std::runtime_error);
    CHECK_THROWS_AS(instance_from_json({{"vertex_count", "2"}, {"edges", json::array()}}),
                    std::runtime_error);
    CHECK_THROWS_AS(instance_from_json({{"vertex_count", 2}, {"edges", 7}}),
                    std::runtime_error);
    CHECK_THROWS_AS(instance_from_json({{"vertex_count", 2}, {"edges", json::array({3})}}),
                    std::runtime_error);
    // missing util_v
    const json bad_edge = {{"vertex_count", 2},
                           {"edges", json::array({{{"u", 0}, {"v", 1}, {"util_u", -1}}})}};
    CHECK_THROWS_AS(instance_from_json(bad_edge), std::runtime_error);
    // fractional utility
    const json fractional = {
        {"vertex_count", 2},
        {"edges", json::array({{{"u", 0}, {"v", 1}, {"util_u", -1.5}, {"util_v", 0}}})}};
    CHECK_THROWS_AS(instance_from_json(fractional), std::runtime_error);
    // semantic validation is surfaced as the same exception type
    const json positive = {
        {"vertex_count", 2},
        {"edges", json::array({{{"u", 0}, {"v", 1}, {"util_u", 1}, {"util_v", 0}}})}};
    CHECK_THROWS_AS(instance_from_json(positive), std::runtime_error);
}

TEST_CASE("instances survive a round trip") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const ChoreInstance g = corpus_instance(mix(seed, 0x80));
        const ChoreInstance back = instance_from_json(instance_to_json(g));
        CHECK(back.vertex_count() == g.vertex_count());
        REQUIRE(back.edge_count() == g.edge_count());
        for (int t = 0; t < g.edge_count(); ++t) CHECK(back.edge(t) == g.edge(t));
        CHECK(back.allow_multi() == g.allow_multi());
    }
}

TEST_CASE("canonical orientation parses") {
    const ChoreInstance g(3, {{0, 1, -1, -1}, {1, 2, 0, 0}});
    const json j = json::parse(R"([{"edge": 0, "to": 1}, {"edge": 1, "to": 1}])");
    const Orientation orientation = orientation_from_json(j, g);
    CHECK(orientation.receiver == std::vector<VertexId>{1, 1});
}

TEST_CASE("orientation parse failures") {
    const ChoreInstance g(3, {{0, 1, -1, -1}, {1, 2, 0, 0}});
    CHECK_THROWS_AS(orientation_from_json(json::object(), g), std::runtime_error);
    CHECK_THROWS_AS(orientation_from_json(json::parse(R"([{"edge": 0, "to": 1}])"), g),
                    std::runtime_error);  // too short
    CHECK_THROWS_AS(orientation_from_json(
                        json::parse(R"([{"edge": 1, "to": 1}, {"edge": 0, "to": 1}])"), g),
                    std::runtime_error);  // out of order
    CHECK_THROWS_AS(orientation_from_json(
                        json::parse(R"([{"edge": 0, "to": 2}, {"edge": 1, "to": 1}])"), g),
                    std::runtime_error);  // receiver not an endpoint
    CHECK_THROWS_AS(orientation_from_json(
                        json::parse(R"([{"edge": 0, "to": 1}, {"to": 1}])"), g),
                    std::runtime_error);  // missing edge id
    CHECK_THROWS_AS(orientation_from_json(json::parse(R"([{"edge": 0, "to": 1}, 4])"), g),
                    std::runtime_error);  // entry not an object
}

TEST_CASE("orientations survive a round trip") {
    const ChoreInstance g = two_component_instance();
    Orientation orientation;
    for (const Edge& e : g.edges()) orientation.receiver.push_back(e.v);
    const Orientation back = orientation_from_json(orientation_to_json(orientation), g);
    CHECK(back.receiver == orientation.receiver);
}

TEST_CASE("files round trip on disk") {
    const TempDir dir;
    const ChoreInstance g = two_component_instance();
    save_instance(dir.file("instance.json"), g);
    const ChoreInstance loaded = load_instance(dir.file("instance.json"));
    REQUIRE(loaded.edge_count() == g.edge_count());
    for (int t = 0; t < g.edge_count(); ++t) CHECK(loaded.edge(t) == g.edge(t));

    Orientation orientation;
    for (const Edge& e : g.edges()) orientation.receiver.push_back(e.u);
    save_orientation(dir.file("orientation.json"), orientation);
    CHECK(load_orientation(dir.file("orientation.json"), g).receiver == orientation.receiver);
}

TEST_CASE("file errors carry the path") {
    const TempDir dir;
    const std::string missing = dir.file("missing.json");
    CHECK_THROWS_WITH_AS(load_instance(missing), doctest::Contains(missing.c_str()),
                         std::runtime_error);

    const std::string garbled = dir.file("garbled.json");
    std::ofstream(garbled) << "{ not json";
    CHECK_THROWS_WITH_AS(load_instance(garbled), doctest::Contains(garbled.c_str()),
                         std::runtime_error);
}
