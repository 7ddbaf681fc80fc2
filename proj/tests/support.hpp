#pragma once

// Shared helpers for the test suites: instance corpora, independent
// brute-force oracles, exhaustive orientation visitors and relabeling
// utilities.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "chorient/fairness.hpp"
#include "chorient/generators.hpp"
#include "chorient/instance.hpp"
#include "chorient/pd_cover.hpp"
#include "chorient/twosat.hpp"

namespace testsupport {

using namespace chorient;

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct CorpusParams {
    int max_vertices = 7;
    int max_edges = 10;
    double objective_fraction = 0.5;
    double self_loop_fraction = 0.2;
    std::int64_t min_utility = -3;
};

/// Simple instance with vertex and edge counts drawn from the seed.
inline ChoreInstance corpus_instance(std::uint64_t seed, const CorpusParams& corpus = {}) {
    std::mt19937_64 rng(mix(seed, 0x10));
    RandomParams params;
    params.vertices = 1 + static_cast<int>(rng() % corpus.max_vertices);
    const std::int64_t feasible =
        static_cast<std::int64_t>(params.vertices) * (params.vertices - 1) / 2 + params.vertices;
    const std::int64_t cap = std::min<std::int64_t>(corpus.max_edges, feasible);
    params.edges = static_cast<int>(rng() % (cap + 1));
    params.min_utility = corpus.min_utility;
    params.objective_fraction = corpus.objective_fraction;
    params.self_loop_fraction = corpus.self_loop_fraction;
    return gen_random(params, mix(seed, 0x20));
}

inline ChoreInstance objective_corpus_instance(std::uint64_t seed, int max_vertices,
                                               int max_edges) {
    CorpusParams corpus;
    corpus.max_vertices = max_vertices;
    corpus.max_edges = max_edges;
    corpus.objective_fraction = 1.0;
    return corpus_instance(seed, corpus);
}

/// Exhaustive 2SAT oracle: first satisfying assignment in ascending order of
/// the assignment read as a binary number (variable 0 most significant).
inline std::optional<std::vector<bool>> brute_force_twosat(const TwoSatFormula& formula) {
    const int n = formula.variable_count();
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
        std::vector<bool> values(n);
        for (int x = 0; x < n; ++x) values[x] = (word >> (n - 1 - x)) & 1;
        bool good = true;
        for (const auto& [a, b] : formula.clauses()) {
            if ((values[a.variable] != a.negated) || (values[b.variable] != b.negated)) continue;
            good = false;
            break;
        }
        if (good) return values;
    }
    return std::nullopt;
}

/// Exhaustive search over all vertex subsets.
inline bool pd_cover_exists_brute(const PdInstance& instance) {
    const int n = instance.graph().vertex_count();
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        const auto chosen = [&](VertexId v) { return (subset >> v) & 1; };
        bool good = true;
        for (const Edge& e : instance.graph().edges())
            if (!chosen(e.u) && !chosen(e.v)) {
                good = false;
                break;
            }
        for (const auto& group : instance.groups()) {
            if (!good) break;
            int hits = 0;
            for (VertexId v : group) hits += chosen(v);
            if (hits > 1) good = false;
        }
        for (VertexId v : instance.forbidden()) {
            if (!good) break;
            if (chosen(v)) good = false;
        }
        if (good) return true;
    }
    return false;
}

/// Exhaustive equipartition oracle over all subsets.
inline bool partition_brute(const std::vector<std::int64_t>& values) {
    const std::int64_t total = std::accumulate(values.begin(), values.end(), std::int64_t{0});
    if (total % 2 != 0) return false;
    const int k = static_cast<int>(values.size());
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); ++subset) {
        std::int64_t sum = 0;
        for (int t = 0; t < k; ++t)
            if ((subset >> t) & 1) sum += values[t];
        if (2 * sum == total) return true;
    }
    return false;
}

/// Visits every orientation (self-loops forced) in the same lexicographic
/// order the library oracle uses. The visitor returns false to stop early.
template <typename Visitor>
void for_each_orientation(const ChoreInstance& instance, Visitor&& visit) {
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
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        for (int t = 0; t < m; ++t) {
            const Edge& e = instance.edge(free_edges[t]);
            const bool to_v = (mask >> (m - 1 - t)) & 1;
            orientation.receiver[free_edges[t]] = to_v ? e.v : e.u;
        }
        if (!visit(const_cast<const Orientation&>(orientation))) return;
    }
}

/// vertex_map[v] = new id of old vertex v; edge_order[t] = old id of the
/// edge placed at new position t.
inline ChoreInstance permuted_instance(const ChoreInstance& instance,
                                       const std::vector<int>& vertex_map,
                                       const std::vector<int>& edge_order) {
    std::vector<Edge> edges;
    edges.reserve(instance.edge_count());
    for (int old_id : edge_order) {
        const Edge& e = instance.edge(old_id);
        edges.push_back({vertex_map[e.u], vertex_map[e.v], e.util_u, e.util_v});
    }
    return ChoreInstance(instance.vertex_count(), std::move(edges), instance.allow_multi());
}

inline Orientation permuted_orientation(const Orientation& orientation,
                                        const std::vector<int>& vertex_map,
                                        const std::vector<int>& edge_order) {
    Orientation result;
    result.receiver.reserve(orientation.receiver.size());
    for (int old_id : edge_order) result.receiver.push_back(vertex_map[orientation.receiver[old_id]]);
    return result;
}

/// 8 vertices, two groups of four connected by negative weight -1 edges
/// (one tree-like, one with a cycle), plus five dummy edges across them.
/// Mirrors data/two_components.json.
inline ChoreInstance two_component_instance() {
    return ChoreInstance(8,
                         {
                             {0, 1, -1, -1},
                             {1, 2, -1, -1},
                             {1, 3, -1, -1},
                             {4, 5, -1, -1},
                             {5, 6, -1, -1},
                             {6, 4, -1, -1},
                             {6, 7, -1, -1},
                             {0, 3, 0, 0},
                             {2, 5, 0, 0},
                             {5, 7, 0, 0},
                             {3, 4, 0, 0},
                             {4, 2, 0, 0},
                         },
                         false);
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace testsupport
