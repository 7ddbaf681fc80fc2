#pragma once

#include <optional>
#include <vector>

#include "chorient/instance.hpp"

namespace chorient {

enum class Criterion { Ef1, Efx0 };

/// Partition of the edge set into one bundle per agent. Bundles need not be
/// incident to their owner; a non-incident edge is worth 0 to them.
struct Allocation {
    std::vector<std::vector<int>> bundles;  // edge ids, per agent
};

Allocation allocation_from_orientation(const ChoreInstance& instance,
                                       const Orientation& orientation);

/// Throws std::invalid_argument unless the bundles partition the edge set.
void validate_allocation(const ChoreInstance& instance, const Allocation& allocation);

/// True when for every ordered pair (i, j) agent i either does not envy j or
/// stops envying after dropping some single edge from its own bundle.
bool check_ef1(const ChoreInstance& instance, const Allocation& allocation);

/// True when no agent strongly envies another: for every edge of its own
/// bundle, zero-valued edges included, dropping that edge leaves the bundle
/// at least as good as the other agent's.
bool check_efx0(const ChoreInstance& instance, const Allocation& allocation);

bool check(const ChoreInstance& instance, const Allocation& allocation, Criterion criterion);

inline constexpr int kEnumerationEdgeLimit = 25;

/// Brute-force search over every orientation (self-loops have only one
/// choice). Returns the first passing orientation in lexicographic order of
/// per-edge receiver choices (stored u before stored v), or nullopt.
/// Throws when the instance has more than kEnumerationEdgeLimit non-loop
/// edges.
std::optional<Orientation> enumerate_orientations(const ChoreInstance& instance,
                                                  Criterion criterion);

}  // namespace chorient
