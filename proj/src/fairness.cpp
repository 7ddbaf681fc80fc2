#include "chorient/fairness.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace chorient {

Allocation allocation_from_orientation(const ChoreInstance& instance,
                                       const Orientation& orientation) {
    validate_orientation(instance, orientation);
    Allocation allocation;
    allocation.bundles.resize(instance.vertex_count());
    for (int t = 0; t < instance.edge_count(); ++t)
        allocation.bundles[orientation.receiver[t]].push_back(t);
    return allocation;
}

void validate_allocation(const ChoreInstance& instance, const Allocation& allocation) {
    if (static_cast<int>(allocation.bundles.size()) != instance.vertex_count())
        throw std::invalid_argument("allocation must have one bundle per agent");
    std::vector<char> seen(instance.edge_count(), 0);
    int assigned = 0;
    for (const auto& bundle : allocation.bundles)
        for (int edge_id : bundle) {
            if (edge_id < 0 || edge_id >= instance.edge_count())
                throw std::invalid_argument("allocation references an unknown edge");
            if (seen[edge_id])
                throw std::invalid_argument("edge assigned more than once");
            seen[edge_id] = 1;
            ++assigned;
        }
    if (assigned != instance.edge_count())
        throw std::invalid_argument("allocation must cover every edge");
}

namespace {

// u_i(pi_j) is nonzero only when j owns edges incident to i. Returns those
// sums keyed by (i << 32 | j); every recorded entry is negative.
std::unordered_map<std::uint64_t, std::int64_t> cross_utilities(
    const ChoreInstance& instance, const std::vector<int>& owner_of) {
    std::unordered_map<std::uint64_t, std::int64_t> cross;
    const auto key = [](int i, int j) {
        return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
    };
    for (int t = 0; t < instance.edge_count(); ++t) {
        const Edge& e = instance.edge(t);
        const int owner = owner_of[t];
        if (e.u != owner && e.util_u < 0) cross[key(e.u, owner)] += e.util_u;
        if (e.v != e.u && e.v != owner && e.util_v < 0) cross[key(e.v, owner)] += e.util_v;
    }
    return cross;
}

bool check_impl(const ChoreInstance& instance, const Allocation& allocation,
                Criterion criterion) {
    validate_allocation(instance, allocation);
    const int n = instance.vertex_count();
    if (n == 1) return true;

    std::vector<int> owner_of(instance.edge_count(), -1);
    for (int i = 0; i < n; ++i)
        for (int edge_id : allocation.bundles[i]) owner_of[edge_id] = i;

    // With additive utilities u_i(pi_i \ {e}) = u_i(pi_i) - u_i(e). EF1 asks
    // for the best single removal (the most negative edge), EFX0 must survive
    // the least helpful one (the edge closest to zero).
    constexpr std::int64_t kNoStrongEnvy = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> after_removal(n);
    for (int i = 0; i < n; ++i) {
        const auto& bundle = allocation.bundles[i];
        if (bundle.empty()) {
            after_removal[i] = criterion == Criterion::Ef1 ? 0 : kNoStrongEnvy;
            continue;
        }
        const std::int64_t own = bundle_utility(instance, i, bundle);
        std::int64_t removed = instance.edge(bundle.front()).utility_to(i);
        for (int edge_id : bundle) {
            const std::int64_t value = instance.edge(edge_id).utility_to(i);
            if (criterion == Criterion::Ef1 ? value < removed : value > removed)
                removed = value;
        }
        after_removal[i] = own - removed;
    }

    const auto cross = cross_utilities(instance, owner_of);
    std::vector<int> negative_targets(n, 0);
    for (const auto& [key, value] : cross) {
        (void)value;
        ++negative_targets[static_cast<int>(key >> 32)];
    }
    for (int i = 0; i < n; ++i) {
        if (after_removal[i] == kNoStrongEnvy) continue;
        // some other agent's bundle is worth 0 to i
        if (negative_targets[i] < n - 1 && after_removal[i] < 0) return false;
    }
    for (const auto& [key, value] : cross) {
        const int i = static_cast<int>(key >> 32);
        if (after_removal[i] != kNoStrongEnvy && after_removal[i] < value) return false;
    }
    return true;
}

}  // namespace

bool check_ef1(const ChoreInstance& instance, const Allocation& allocation) {
    return check_impl(instance, allocation, Criterion::Ef1);
}

bool check_efx0(const ChoreInstance& instance, const Allocation& allocation) {
    return check_impl(instance, allocation, Criterion::Efx0);
}

bool check(const ChoreInstance& instance, const Allocation& allocation, Criterion criterion) {
    return check_impl(instance, allocation, criterion);
}

std::optional<Orientation> enumerate_orientations(const ChoreInstance& instance,
                                                  Criterion criterion) {
    Orientation orientation;
    orientation.receiver.assign(instance.edge_count(), -1);
    std::vector<int> free_edges;
    for (int t = 0; t < instance.edge_count(); ++t) {
        const Edge& e = instance.edge(t);
        if (e.is_loop())
            orientation.receiver[t] = e.u;
        else
            free_edges.push_back(t);
    }
    const int m = static_cast<int>(free_edges.size());
    if (m > kEnumerationEdgeLimit)
        throw std::invalid_argument("instance has " + std::to_string(m) +
                                    " non-loop edges, above the enumeration limit of " +
                                    std::to_string(kEnumerationEdgeLimit));
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int t = 0; t < m; ++t) {
            const Edge& e = instance.edge(free_edges[t]);
            const bool to_v = (mask >> (m - 1 - t)) & 1;
            orientation.receiver[free_edges[t]] = to_v ? e.v : e.u;
        }
        if (check_impl(instance, allocation_from_orientation(instance, orientation), criterion))
            return orientation;
    }
    return std::nullopt;
}

}  // namespace chorient
