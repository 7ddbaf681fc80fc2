#include "chorient/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace chorient {

namespace {

void validate_partition(const PartitionInstance& partition) {
    if (partition.values.empty())
        throw std::invalid_argument("partition instance needs at least one value");
    for (std::int64_t s : partition.values)
        if (s <= 0) throw std::invalid_argument("partition values must be positive");
}

std::uint64_t endpoint_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

ChoreInstance gen_two_vertex(const PartitionInstance& partition, Criterion variant) {
    validate_partition(partition);
    const std::int64_t max_value =
        *std::max_element(partition.values.begin(), partition.values.end());
    const std::int64_t alpha = variant == Criterion::Ef1 ? -(max_value + 1) : 0;
    std::vector<Edge> edges;
    edges.reserve(partition.values.size() + 2);
    for (std::int64_t s : partition.values) edges.push_back({0, 1, -s, -s});
    edges.push_back({0, 0, alpha, alpha});
    edges.push_back({1, 1, alpha, alpha});
    return ChoreInstance(2, std::move(edges), true);
}

ChoreInstance gen_three_vertex(const PartitionInstance& partition) {
    validate_partition(partition);
    std::int64_t total = 0;
    for (std::int64_t s : partition.values) total += s;
    std::vector<Edge> edges;
    edges.reserve(partition.values.size() + 4);
    for (std::int64_t s : partition.values) edges.push_back({0, 1, -s, -s});
    edges.push_back({0, 2, -total, -total});
    edges.push_back({0, 2, -total, -total});
    edges.push_back({1, 2, -total, -total});
    edges.push_back({1, 2, -total, -total});
    return ChoreInstance(3, std::move(edges), true);
}

ChoreInstance gen_random(const RandomParams& params, std::uint64_t seed) {
    if (params.vertices < 1) throw std::invalid_argument("vertices must be positive");
    if (params.edges < 0) throw std::invalid_argument("edges must be non-negative");
    if (params.min_utility > 0) throw std::invalid_argument("min_utility must be non-positive");
    for (double fraction : {params.objective_fraction, params.self_loop_fraction})
        if (!(fraction >= 0.0 && fraction <= 1.0))
            throw std::invalid_argument("fractions must lie in [0, 1]");
    const std::int64_t n = params.vertices;
    if (!params.multigraph && params.edges > n * (n - 1) / 2 + n)
        throw std::invalid_argument("edge count does not fit a simple graph");

    std::mt19937_64 rng(seed);
    const auto chance = [&](double p) {
        return std::ldexp(static_cast<double>(rng() >> 11), -53) < p;
    };
    const auto below = [&](std::uint64_t bound) { return rng() % bound; };
    const std::int64_t span = -params.min_utility;
    const auto zero_or_negative = [&]() -> std::int64_t {
        return -static_cast<std::int64_t>(below(static_cast<std::uint64_t>(span) + 1));
    };
    const auto strictly_negative = [&]() -> std::int64_t {
        if (span == 0) return 0;
        return -1 - static_cast<std::int64_t>(below(static_cast<std::uint64_t>(span)));
    };

    std::unordered_set<std::uint64_t> used;
    std::vector<Edge> edges;
    edges.reserve(params.edges);
    for (int t = 0; t < params.edges; ++t) {
        VertexId a = 0, b = 0;
        for (int attempt = 0;; ++attempt) {
            if (params.vertices == 1 || chance(params.self_loop_fraction)) {
                a = b = static_cast<VertexId>(below(params.vertices));
            } else {
                a = static_cast<VertexId>(below(params.vertices));
                b = static_cast<VertexId>(below(params.vertices - 1));
                if (b >= a) ++b;
            }
            if (params.multigraph || used.insert(endpoint_key(a, b)).second) break;
            if (attempt >= 256 && params.vertices <= 4096) {
                // dense small graph: enumerate the free slots instead
                std::vector<std::uint64_t> free_slots;
                for (VertexId x = 0; x < params.vertices; ++x)
                    for (VertexId y = x; y < params.vertices; ++y)
                        if (!used.count(endpoint_key(x, y)))
                            free_slots.push_back(endpoint_key(x, y));
                const std::uint64_t slot = free_slots[below(free_slots.size())];
                a = static_cast<VertexId>(slot >> 32);
                b = static_cast<VertexId>(slot & 0xffffffffu);
                used.insert(slot);
                break;
            }
        }
        if (a == b) {
            const std::int64_t w = zero_or_negative();
            edges.push_back({a, b, w, w});
        } else if (chance(params.objective_fraction)) {
            const std::int64_t w = zero_or_negative();
            edges.push_back({a, b, w, w});
        } else {
            const std::int64_t w = strictly_negative();
            if (chance(0.5))
                edges.push_back({a, b, 0, w});
            else
                edges.push_back({a, b, w, 0});
        }
    }
    return ChoreInstance(params.vertices, std::move(edges), params.multigraph);
}

bool has_equipartition(const PartitionInstance& partition) {
    validate_partition(partition);
    if (partition.values.size() > 30)
        throw std::invalid_argument("equipartition search is limited to 30 values");
    std::int64_t total = 0;
    for (std::int64_t s : partition.values) total += s;
    if (total % 2 != 0) return false;
    const std::int64_t target = total / 2;

    std::vector<std::int64_t> reachable{0};
    for (std::int64_t s : partition.values) {
        std::vector<std::int64_t> shifted;
        shifted.reserve(reachable.size());
        for (std::int64_t r : reachable)
            if (r + s <= target) shifted.push_back(r + s);
        std::vector<std::int64_t> merged;
        merged.reserve(reachable.size() + shifted.size());
        std::merge(reachable.begin(), reachable.end(), shifted.begin(), shifted.end(),
                   std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        reachable = std::move(merged);
        if (std::binary_search(reachable.begin(), reachable.end(), target)) return true;
    }
    return false;
}

}  // namespace chorient
