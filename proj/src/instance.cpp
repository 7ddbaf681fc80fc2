#include "chorient/instance.hpp"

#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace chorient {

namespace {

std::uint64_t endpoint_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

ChoreInstance::ChoreInstance(int vertex_count, std::vector<Edge> edges, bool allow_multi)
    : vertex_count_(vertex_count), edges_(std::move(edges)), allow_multi_(allow_multi) {
    if (vertex_count_ <= 0)
        throw std::invalid_argument("vertex_count must be positive");
    std::unordered_set<std::uint64_t> seen;
    if (!allow_multi_) seen.reserve(edges_.size() * 2);
    for (std::size_t t = 0; t < edges_.size(); ++t) {
        const Edge& e = edges_[t];
        if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
            throw std::invalid_argument("edge " + std::to_string(t) + ": endpoint out of range");
        if (e.util_u > 0 || e.util_v > 0)
            throw std::invalid_argument("edge " + std::to_string(t) +
                                        ": utilities must be non-positive");
        if (e.is_loop() && e.util_u != e.util_v)
            throw std::invalid_argument("edge " + std::to_string(t) +
                                        ": self-loop utilities must match");
        if (!allow_multi_ && !seen.insert(endpoint_key(e.u, e.v)).second)
            throw std::invalid_argument("edge " + std::to_string(t) +
                                        ": duplicate endpoints in a simple instance");
    }
}

const Edge& ChoreInstance::edge(int edge_id) const {
    if (edge_id < 0 || edge_id >= edge_count())
        throw std::out_of_range("edge id " + std::to_string(edge_id) + " out of range");
    return edges_[edge_id];
}

EdgeClass classify_edge(const ChoreInstance& instance, int edge_id) {
    const Edge& e = instance.edge(edge_id);
    if (e.util_u == 0 && e.util_v == 0) return EdgeClass::Dummy;
    if (e.util_u < 0 && e.util_v < 0) return EdgeClass::Negative;
    return EdgeClass::NonObjective;
}

NegativeComponentReport negative_components(const ChoreInstance& instance) {
    const int n = instance.vertex_count();
    std::vector<std::vector<VertexId>> adjacent(n);
    for (int t = 0; t < instance.edge_count(); ++t) {
        if (classify_edge(instance, t) != EdgeClass::Negative) continue;
        const Edge& e = instance.edge(t);
        if (e.is_loop()) continue;
        adjacent[e.u].push_back(e.v);
        adjacent[e.v].push_back(e.u);
    }

    NegativeComponentReport report;
    report.component_of.assign(n, -1);
    std::queue<VertexId> frontier;
    for (VertexId start = 0; start < n; ++start) {
        if (report.component_of[start] != -1) continue;
        const int component = static_cast<int>(report.components.size());
        report.components.emplace_back();
        report.component_of[start] = component;
        frontier.push(start);
        while (!frontier.empty()) {
            const VertexId v = frontier.front();
            frontier.pop();
            for (VertexId w : adjacent[v]) {
                if (report.component_of[w] != -1) continue;
                report.component_of[w] = component;
                frontier.push(w);
            }
        }
    }
    for (VertexId v = 0; v < n; ++v)
        report.components[report.component_of[v]].vertices.push_back(v);
    for (int t = 0; t < instance.edge_count(); ++t) {
        if (classify_edge(instance, t) != EdgeClass::Negative) continue;
        ++report.components[report.component_of[instance.edge(t).u]].negative_edge_count;
    }
    return report;
}

SubdivisionMap subdivide(const ChoreInstance& instance) {
    if (instance.allow_multi())
        throw std::invalid_argument("subdivision requires a simple instance");
    const int n = instance.vertex_count();
    std::vector<Edge> edges;
    std::vector<EdgeOrigin> origin;
    std::vector<Edge> negative_sides;
    std::vector<EdgeOrigin> negative_origin;
    std::vector<VertexId> fakes;
    edges.reserve(instance.edge_count());
    origin.reserve(instance.edge_count());
    int next_vertex = n;
    for (int t = 0; t < instance.edge_count(); ++t) {
        const Edge& e = instance.edge(t);
        if (classify_edge(instance, t) != EdgeClass::NonObjective) {
            edges.push_back(e);
            origin.push_back({t, SplitRole::Original});
            continue;
        }
        const VertexId zero_end = e.util_u == 0 ? e.u : e.v;
        const VertexId negative_end = e.other_endpoint(zero_end);
        const std::int64_t beta = e.utility_to(negative_end);
        const VertexId fake = next_vertex++;
        fakes.push_back(fake);
        edges.push_back({zero_end, fake, 0, 0});
        origin.push_back({t, SplitRole::ZeroSide});
        negative_sides.push_back({negative_end, fake, beta, beta});
        negative_origin.push_back({t, SplitRole::NegativeSide});
    }
    edges.insert(edges.end(), negative_sides.begin(), negative_sides.end());
    origin.insert(origin.end(), negative_origin.begin(), negative_origin.end());
    return SubdivisionMap{ChoreInstance(next_vertex, std::move(edges), false), std::move(origin),
                          std::move(fakes)};
}

std::int64_t bundle_utility(const ChoreInstance& instance, VertexId agent,
                            const std::vector<int>& bundle) {
    if (agent < 0 || agent >= instance.vertex_count())
        throw std::invalid_argument("agent out of range");
    std::int64_t total = 0;
    for (int edge_id : bundle) total += instance.edge(edge_id).utility_to(agent);
    return total;
}

void validate_orientation(const ChoreInstance& instance, const Orientation& orientation) {
    if (static_cast<int>(orientation.receiver.size()) != instance.edge_count())
        throw std::invalid_argument("orientation size does not match edge count");
    for (int t = 0; t < instance.edge_count(); ++t)
        if (!instance.edge(t).has_endpoint(orientation.receiver[t]))
            throw std::invalid_argument("edge " + std::to_string(t) +
                                        " assigned to a non-endpoint");
}

}  // namespace chorient
