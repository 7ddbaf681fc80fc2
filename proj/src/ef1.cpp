#include "chorient/ef1.hpp"

#include <algorithm>
#include <stdexcept>

#include "chorient/efx.hpp"

namespace chorient {

std::optional<Orientation> solve_ef1(const ChoreInstance& instance) {
    if (instance.allow_multi())
        throw std::invalid_argument("solve_ef1 requires a simple instance");

    const NegativeComponentReport report = negative_components(instance);
    Orientation orientation;
    orientation.receiver.assign(instance.edge_count(), -1);
    std::vector<std::vector<int>> component_edges(report.components.size());
    for (int t = 0; t < instance.edge_count(); ++t) {
        const Edge& e = instance.edge(t);
        if (classify_edge(instance, t) == EdgeClass::Negative) {
            component_edges[report.component_of[e.u]].push_back(t);
            continue;
        }
        // at least one endpoint is indifferent; ties go to the smaller id
        if (e.util_u == 0 && e.util_v == 0)
            orientation.receiver[t] = std::min(e.u, e.v);
        else
            orientation.receiver[t] = e.util_u == 0 ? e.u : e.v;
    }

    for (std::size_t c = 0; c < report.components.size(); ++c) {
        const NegativeComponent& component = report.components[c];
        if (component.negative_edge_count > static_cast<int>(component.vertices.size()))
            return std::nullopt;
        if (component_edges[c].empty()) continue;
        for (auto [edge_id, to] :
             orient_in_degree_one(instance, component.vertices, component_edges[c], std::nullopt))
            orientation.receiver[edge_id] = to;
    }
    return orientation;
}

bool ef1_structural_condition(const ChoreInstance& instance, const Orientation& orientation) {
    if (instance.allow_multi())
        throw std::invalid_argument("ef1_structural_condition requires a simple instance");
    validate_orientation(instance, orientation);
    std::vector<int> negative_in(instance.vertex_count(), 0);
    for (int t = 0; t < instance.edge_count(); ++t) {
        const VertexId to = orientation.receiver[t];
        if (instance.edge(t).utility_to(to) < 0 && ++negative_in[to] > 1) return false;
    }
    return true;
}

}  // namespace chorient
