#pragma once

#include <cstdint>
#include <vector>

namespace chorient {

using VertexId = int;

/// One chore. Utilities are non-positive; an edge not incident to an agent
/// has zero marginal utility to it. A self-loop carries a single value,
/// exposed identically on both sides.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    std::int64_t util_u = 0;
    std::int64_t util_v = 0;

    bool is_loop() const { return u == v; }
    bool has_endpoint(VertexId w) const { return u == w || v == w; }
    VertexId other_endpoint(VertexId w) const { return w == u ? v : u; }

    /// Utility of this edge to `agent`; 0 when not incident.
    std::int64_t utility_to(VertexId agent) const {
        if (agent == u) return util_u;
        if (agent == v) return util_v;
        return 0;
    }

    bool operator==(const Edge&) const = default;
};

enum class EdgeClass { Dummy, Negative, NonObjective };

/// An undirected graph of chores. Construction validates every invariant;
/// instances are immutable afterwards and safe to share across threads.
class ChoreInstance {
public:
    ChoreInstance(int vertex_count, std::vector<Edge> edges, bool allow_multi = false);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int edge_id) const;
    bool allow_multi() const { return allow_multi_; }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    bool allow_multi_ = false;
};

/// Assignment of every edge to one of its endpoints, indexed by edge id.
struct Orientation {
    std::vector<VertexId> receiver;
};

struct NegativeComponent {
    std::vector<VertexId> vertices;  // ascending
    int negative_edge_count = 0;     // negative edges with both endpoints inside
};

/// Partition of the vertex set into maximal sets pairwise connected by
/// paths of negative edges.
struct NegativeComponentReport {
    std::vector<int> component_of;  // per vertex
    std::vector<NegativeComponent> components;
};

enum class SplitRole { Original, ZeroSide, NegativeSide };

struct EdgeOrigin {
    int source_edge = -1;
    SplitRole role = SplitRole::Original;
};

/// Objective rewrite of an instance. Every non-objective edge {i,j} with
/// utility 0 to i and beta < 0 to j becomes a fresh vertex k plus the dummy
/// edge {i,k} and the negative edge {j,k} of weight beta. Objective edges
/// keep their ids, the zero side of a split reuses the source id, and the
/// negative sides are appended.
struct SubdivisionMap {
    ChoreInstance objective_instance;
    std::vector<EdgeOrigin> origin;       // per objective-instance edge
    std::vector<VertexId> fake_vertices;  // present only in objective_instance
};

EdgeClass classify_edge(const ChoreInstance& instance, int edge_id);

NegativeComponentReport negative_components(const ChoreInstance& instance);

/// Requires a simple instance (allow_multi = false).
SubdivisionMap subdivide(const ChoreInstance& instance);

/// Additive utility of a set of edge ids to `agent`. Edges not incident to
/// the agent contribute nothing; a self-loop contributes its value once.
std::int64_t bundle_utility(const ChoreInstance& instance, VertexId agent,
                            const std::vector<int>& bundle);

/// Throws std::invalid_argument unless every edge is assigned to one of its
/// endpoints.
void validate_orientation(const ChoreInstance& instance, const Orientation& orientation);

}  // namespace chorient
