#include "chorient/efx.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace chorient {

namespace {

void require_simple(const ChoreInstance& instance, const char* caller) {
    if (instance.allow_multi())
        throw std::invalid_argument(std::string(caller) + " requires a simple instance");
}

void require_objective(const ChoreInstance& instance, const char* caller) {
    for (int t = 0; t < instance.edge_count(); ++t)
        if (classify_edge(instance, t) == EdgeClass::NonObjective)
            throw std::invalid_argument(std::string(caller) +
                                        " requires an objective instance (no one-sided edges)");
}

}  // namespace

std::vector<std::pair<int, VertexId>> orient_in_degree_one(
    const ChoreInstance& instance, const std::vector<VertexId>& component,
    const std::vector<int>& edge_ids, std::optional<VertexId> root) {
    const int k = static_cast<int>(component.size());
    const int m = static_cast<int>(edge_ids.size());
    if (k == 0) throw std::invalid_argument("component must be non-empty");
    std::unordered_map<VertexId, int> local;
    local.reserve(component.size());
    for (int t = 0; t < k; ++t)
        if (!local.emplace(component[t], t).second)
            throw std::invalid_argument("duplicate vertex in component");
    if (m != k - 1 && m != k)
        throw std::invalid_argument("component must carry |V|-1 or |V| edges, got " +
                                    std::to_string(m) + " for " + std::to_string(k) +
                                    " vertices");
    const bool unicyclic = m == k;
    if (unicyclic && root)
        throw std::invalid_argument("a unicyclic component does not take a root");
    if (root && !local.count(*root))
        throw std::invalid_argument("root must belong to the component");

    // adjacency over local indices: (edge position, other endpoint)
    std::vector<std::vector<std::pair<int, int>>> adjacent(k);
    std::vector<int> degree(k, 0);
    for (int t = 0; t < m; ++t) {
        const Edge& e = instance.edge(edge_ids[t]);
        const auto iu = local.find(e.u), iv = local.find(e.v);
        if (iu == local.end() || iv == local.end())
            throw std::invalid_argument("edge endpoint outside the component");
        adjacent[iu->second].emplace_back(t, iv->second);
        degree[iu->second] += e.is_loop() ? 2 : 1;
        if (!e.is_loop()) {
            adjacent[iv->second].emplace_back(t, iu->second);
            degree[iv->second] += 1;
        }
    }

    {
        std::vector<char> reached(k, 0);
        std::queue<int> frontier;
        reached[0] = 1;
        frontier.push(0);
        int count = 1;
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            for (auto [pos, w] : adjacent[v]) {
                (void)pos;
                if (reached[w]) continue;
                reached[w] = 1;
                ++count;
                frontier.push(w);
            }
        }
        if (count != k) throw std::invalid_argument("component is not connected");
    }

    std::vector<std::pair<int, VertexId>> oriented;
    oriented.reserve(m);

    if (!unicyclic) {
        // breadth-first tree orientation away from the root
        int start = 0;
        if (root) {
            start = local[*root];
        } else {
            for (int t = 1; t < k; ++t)
                if (component[t] < component[start]) start = t;
        }
        std::vector<char> visited(k, 0);
        std::queue<int> frontier;
        visited[start] = 1;
        frontier.push(start);
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            for (auto [pos, w] : adjacent[v]) {
                if (visited[w]) continue;
                visited[w] = 1;
                oriented.emplace_back(edge_ids[pos], component[w]);
                frontier.push(w);
            }
        }
        return oriented;
    }

    // peel degree-1 vertices; peeled edges point at the peeled vertex
    std::vector<char> removed_vertex(k, 0), removed_edge(m, 0);
    std::queue<int> leaves;
    for (int v = 0; v < k; ++v)
        if (degree[v] == 1) leaves.push(v);
    while (!leaves.empty()) {
        const int v = leaves.front();
        leaves.pop();
        removed_vertex[v] = 1;
        for (auto [pos, w] : adjacent[v]) {
            if (removed_edge[pos]) continue;
            removed_edge[pos] = 1;
            oriented.emplace_back(edge_ids[pos], component[v]);
            if (--degree[w] == 1) leaves.push(w);
            break;  // a degree-1 vertex has exactly one live edge
        }
    }

    // the remainder is the unique cycle; walk it once, forward
    int cycle_start = -1;
    for (int v = 0; v < k; ++v)
        if (!removed_vertex[v]) {
            cycle_start = v;
            break;
        }
    if (cycle_start == -1) throw std::logic_error("unicyclic component lost its cycle");
    int current = cycle_start;
    do {
        int chosen = -1, next = -1;
        for (auto [pos, w] : adjacent[current]) {
            if (removed_edge[pos]) continue;
            chosen = pos;
            next = w;
            break;
        }
        if (chosen == -1) throw std::logic_error("cycle walk ran out of edges");
        removed_edge[chosen] = 1;
        oriented.emplace_back(edge_ids[chosen], component[next]);
        current = next;
    } while (current != cycle_start);

    if (static_cast<int>(oriented.size()) != m)
        throw std::logic_error("orientation did not cover the component");
    return oriented;
}

EfxObjectivePlan build_objective_plan(const ChoreInstance& instance) {
    require_simple(instance, "build_objective_plan");
    require_objective(instance, "build_objective_plan");
    NegativeComponentReport report = negative_components(instance);

    std::vector<Edge> dummy_edges;
    for (int t = 0; t < instance.edge_count(); ++t)
        if (classify_edge(instance, t) == EdgeClass::Dummy)
            dummy_edges.push_back(instance.edge(t));

    std::vector<std::vector<VertexId>> groups;
    std::vector<VertexId> forbidden;
    bool over_budget = false;
    for (const auto& component : report.components) {
        const int k = static_cast<int>(component.vertices.size());
        if (component.negative_edge_count == k - 1)
            groups.push_back(component.vertices);
        else if (component.negative_edge_count == k)
            forbidden.insert(forbidden.end(), component.vertices.begin(),
                             component.vertices.end());
        else
            over_budget = true;
    }

    PdInstance pd(ChoreInstance(instance.vertex_count(), std::move(dummy_edges), false),
                  std::move(groups), std::move(forbidden));
    std::optional<Cover> cover;
    if (!over_budget) cover = find_cover(pd);
    return EfxObjectivePlan{std::move(report), std::move(pd), std::move(cover)};
}

std::optional<Orientation> solve_objective(const ChoreInstance& instance) {
    const EfxObjectivePlan plan = build_objective_plan(instance);
    if (!plan.cover) return std::nullopt;

    std::vector<char> in_cover(instance.vertex_count(), 0);
    for (VertexId v : plan.cover->vertices) in_cover[v] = 1;

    Orientation orientation;
    orientation.receiver.assign(instance.edge_count(), -1);
    std::vector<std::vector<int>> component_edges(plan.report.components.size());
    for (int t = 0; t < instance.edge_count(); ++t) {
        const Edge& e = instance.edge(t);
        if (classify_edge(instance, t) == EdgeClass::Negative) {
            component_edges[plan.report.component_of[e.u]].push_back(t);
            continue;
        }
        // dummy edges point at a cover vertex, ties to the smaller id
        if (in_cover[e.u] && in_cover[e.v])
            orientation.receiver[t] = std::min(e.u, e.v);
        else if (in_cover[e.u])
            orientation.receiver[t] = e.u;
        else if (in_cover[e.v])
            orientation.receiver[t] = e.v;
        else
            throw std::logic_error("cover misses a dummy edge");
    }

    for (std::size_t c = 0; c < plan.report.components.size(); ++c) {
        const NegativeComponent& component = plan.report.components[c];
        if (component_edges[c].empty()) continue;
        const int k = static_cast<int>(component.vertices.size());
        std::optional<VertexId> root;
        if (component.negative_edge_count == k - 1) {
            // tree component: root at its cover vertex when there is one
            for (VertexId v : component.vertices)
                if (in_cover[v]) {
                    root = v;
                    break;
                }
            if (!root) root = component.vertices.front();
        }
        for (auto [edge_id, to] :
             orient_in_degree_one(instance, component.vertices, component_edges[c], root))
            orientation.receiver[edge_id] = to;
    }
    return orientation;
}

Orientation lift_orientation(const ChoreInstance& source, const SubdivisionMap& map,
                             const Orientation& objective_orientation) {
    validate_orientation(map.objective_instance, objective_orientation);
    if (static_cast<int>(map.origin.size()) != map.objective_instance.edge_count())
        throw std::invalid_argument("subdivision map does not match its objective instance");

    Orientation orientation;
    orientation.receiver.assign(source.edge_count(), -1);
    for (int t = 0; t < map.objective_instance.edge_count(); ++t) {
        const EdgeOrigin& origin = map.origin[t];
        if (origin.source_edge < 0 || origin.source_edge >= source.edge_count())
            throw std::invalid_argument("subdivision map references an unknown source edge");
        if (origin.role == SplitRole::NegativeSide) continue;
        if (origin.role == SplitRole::Original) {
            orientation.receiver[origin.source_edge] = objective_orientation.receiver[t];
            continue;
        }
        const Edge& e = source.edge(origin.source_edge);
        const VertexId zero_end = e.util_u == 0 ? e.u : e.v;
        const VertexId received = objective_orientation.receiver[t];
        orientation.receiver[origin.source_edge] =
            received == zero_end ? zero_end : e.other_endpoint(zero_end);
    }
    validate_orientation(source, orientation);
    return orientation;
}

std::optional<Orientation> solve_efx0(const ChoreInstance& instance) {
    require_simple(instance, "solve_efx0");
    const SubdivisionMap map = subdivide(instance);
    const auto objective = solve_objective(map.objective_instance);
    if (!objective) return std::nullopt;
    return lift_orientation(instance, map, *objective);
}

bool structural_efx_condition(const ChoreInstance& instance, const Orientation& orientation) {
    require_simple(instance, "structural_efx_condition");
    require_objective(instance, "structural_efx_condition");
    validate_orientation(instance, orientation);
    std::vector<int> in_degree(instance.vertex_count(), 0);
    std::vector<char> negative_in(instance.vertex_count(), 0);
    for (int t = 0; t < instance.edge_count(); ++t) {
        const VertexId to = orientation.receiver[t];
        ++in_degree[to];
        if (classify_edge(instance, t) == EdgeClass::Negative) negative_in[to] = 1;
    }
    for (VertexId v = 0; v < instance.vertex_count(); ++v)
        if (in_degree[v] != 1 && negative_in[v]) return false;
    return true;
}

}  // namespace chorient
