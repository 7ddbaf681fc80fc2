#pragma once

#include <optional>
#include <vector>

#include "chorient/instance.hpp"
#include "chorient/twosat.hpp"

namespace chorient {

/// Constrained vertex cover instance: a valid cover hits every edge of the
/// graph, takes at most one vertex from each group and none from the
/// forbidden set. Utilities on the graph are ignored; parallel edges and
/// self-loops are tolerated.
class PdInstance {
public:
    PdInstance(ChoreInstance graph, std::vector<std::vector<VertexId>> groups,
               std::vector<VertexId> forbidden);

    const ChoreInstance& graph() const { return graph_; }
    const std::vector<std::vector<VertexId>>& groups() const { return groups_; }
    const std::vector<VertexId>& forbidden() const { return forbidden_; }

private:
    ChoreInstance graph_;
    std::vector<std::vector<VertexId>> groups_;
    std::vector<VertexId> forbidden_;
};

struct Cover {
    std::vector<VertexId> vertices;  // ascending
};

/// One variable per vertex: per edge {i,j} the clause {x_i, x_j} (a self-loop
/// yields the forcing clause {x_i, x_i}), per pair inside a group the clause
/// {!x_i, !x_j}, per forbidden vertex the unit clause {!x_i}.
TwoSatFormula build_formula(const PdInstance& instance);

std::optional<Cover> find_cover(const PdInstance& instance);

bool verify_cover(const PdInstance& instance, const Cover& cover);

}  // namespace chorient
