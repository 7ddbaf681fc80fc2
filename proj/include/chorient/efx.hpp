#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chorient/instance.hpp"
#include "chorient/pd_cover.hpp"

namespace chorient {

/// Orients the edges of one connected component so that in-degrees stay at
/// most 1. With |V|-1 edges the component is a tree: edges point away from
/// `root` (default: the smallest vertex id) and only the root has in-degree
/// 0. With |V| edges the component is unicyclic (a self-loop counts as a
/// cycle of length 1): the unique cycle is oriented cyclically, everything
/// else points away from it, and every vertex has in-degree exactly 1.
/// Returns (edge id, receiver) pairs; `root` must be absent in the
/// unicyclic case.
std::vector<std::pair<int, VertexId>> orient_in_degree_one(
    const ChoreInstance& instance, const std::vector<VertexId>& component,
    const std::vector<int>& edge_ids, std::optional<VertexId> root);

/// Reduction state for an objective instance: its negative components, the
/// derived cover instance (dummy-edge graph, one group per component with
/// |V|-1 negative edges, forbidden vertices from components with |V| of
/// them), and the cover found, if any. The cover search is skipped when a
/// component carries more negative edges than vertices.
struct EfxObjectivePlan {
    NegativeComponentReport report;
    PdInstance pd;
    std::optional<Cover> cover;
};

EfxObjectivePlan build_objective_plan(const ChoreInstance& instance);

/// Decides orientability without strong envy for a simple instance whose
/// edges are all dummy or negative, and constructs a witness when one
/// exists.
std::optional<Orientation> solve_objective(const ChoreInstance& instance);

/// Full pipeline for arbitrary simple instances: rewrite to an objective
/// instance, solve it, and pull the answer back to the source edges.
std::optional<Orientation> solve_efx0(const ChoreInstance& instance);

/// Maps an orientation of map.objective_instance back to `source`: an edge
/// split at fake vertex k goes to its zero endpoint i exactly when the
/// {i,k} half does, and to the other endpoint otherwise.
Orientation lift_orientation(const ChoreInstance& source, const SubdivisionMap& map,
                             const Orientation& objective_orientation);

/// For objective simple instances: every vertex either receives exactly one
/// edge or receives only dummy edges. Equivalent to the absence of strong
/// envy.
bool structural_efx_condition(const ChoreInstance& instance, const Orientation& orientation);

}  // namespace chorient
