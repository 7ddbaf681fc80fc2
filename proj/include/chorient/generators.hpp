#pragma once

#include <cstdint>

#include "chorient/fairness.hpp"
#include "chorient/instance.hpp"

namespace chorient {

/// Multiset of positive integers for equipartition questions.
struct PartitionInstance {
    std::vector<std::int64_t> values;
};

/// Two agents a=0, b=1. One parallel a-b edge of weight -s per element s,
/// then a self-loop at each agent: weight -(max s + 1) for the EF1 variant,
/// 0 for the EFX0 variant. The result is orientable under the chosen
/// criterion exactly when the values split into two halves of equal sum.
ChoreInstance gen_two_vertex(const PartitionInstance& partition, Criterion variant);

/// Three agents a=0, b=1, c=2 and no self-loops. One a-b edge of weight -s
/// per element s, then two a-c and two b-c edges of weight -T each, where T
/// is the sum of all values. EF1-orientable exactly when the values split
/// into two halves of equal sum.
ChoreInstance gen_three_vertex(const PartitionInstance& partition);

struct RandomParams {
    int vertices = 1;
    int edges = 0;
    std::int64_t min_utility = -3;    // inclusive lower bound, <= 0
    double objective_fraction = 0.5;  // chance a non-loop edge treats both ends alike
    double self_loop_fraction = 0.0;
    bool multigraph = false;
};

/// Seed-deterministic instance sampler. Utilities are drawn from
/// [min_utility, 0]; self-loops and parallel edges appear per the params,
/// and edge counts beyond what a simple graph can hold are rejected.
ChoreInstance gen_random(const RandomParams& params, std::uint64_t seed);

/// Whether the values split into two halves of equal sum. Exact subset-sum
/// search; limited to at most 30 values.
bool has_equipartition(const PartitionInstance& partition);

}  // namespace chorient
