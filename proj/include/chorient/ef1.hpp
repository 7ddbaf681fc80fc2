#pragma once

#include <optional>

#include "chorient/instance.hpp"

namespace chorient {

/// Decides EF1 orientability for a simple instance and constructs a witness
/// when one exists: edges with a zero endpoint go to such an endpoint, and
/// the remaining both-negative edges are distributed with in-degree at most
/// 1 per vertex, which is possible exactly when no negative component has
/// more such edges than vertices. Runs in time linear in vertices plus
/// edges.
std::optional<Orientation> solve_ef1(const ChoreInstance& instance);

/// True when every vertex receives at most one edge of negative utility to
/// it. Equivalent to EF1 on simple instances.
bool ef1_structural_condition(const ChoreInstance& instance, const Orientation& orientation);

}  // namespace chorient
